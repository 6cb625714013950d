#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>

#include "platemodal/galerkin.hpp"
#include "platemodal/modal_sim.hpp"
#include "platemodal/sysid.hpp"
#include "platemodal/transfer.hpp"

namespace platemodal {

/// Serialize with 9 significant digits ("%.9g"), locale-independent.
std::string format_g9(double value);

// Signal CSV: header "time_s,value", LF endings.
void write_signal_csv(const std::filesystem::path& path, const SignalRecord& record);
SignalRecord read_signal_csv(const std::filesystem::path& path);
/// Raw single-column file (no header) with an externally supplied rate.
SignalRecord read_signal_column(const std::filesystem::path& path, double sample_rate);

// Frequency-response CSV: "frequency_hz,magnitude,phase_rad".
void write_frequency_response_csv(const std::filesystem::path& path, const FrequencyResponse& fr,
                                  bool unwrap_phase = false);

// Empirical TF CSV: "frequency_hz,magnitude,phase_rad,valid".
void write_empirical_tf_csv(const std::filesystem::path& path, const EmpiricalTF& tf);

// Mode table: "index,lambda,frequency_hz,is_rigid_body".
void write_modes_csv(const std::filesystem::path& path, const ModalModel& model);

// Plain numeric grid of one coefficient matrix.
void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m);

}  // namespace platemodal
