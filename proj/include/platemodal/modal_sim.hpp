#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "platemodal/galerkin.hpp"
#include "platemodal/params.hpp"

namespace platemodal {

enum class SignalLabel { Input, Output };

/// Uniformly sampled real-valued signal.
struct SignalRecord {
  double sample_rate = 0.0;  // Hz
  std::vector<double> samples;
  SignalLabel label = SignalLabel::Input;
};

struct PulseExcitation {
  double width_s = 1e-3;
  double amplitude_n = 1.0;
};

/// Linear sweep from f0 to f1 over the simulation duration.
struct ChirpExcitation {
  double f0_hz = 0.0;
  double f1_hz = 0.0;
  double amplitude_n = 1.0;
};

struct SampledExcitation {
  SignalRecord record;
};

using Excitation = std::variant<PulseExcitation, ChirpExcitation, SampledExcitation>;

struct SimOptions {
  /// Post-sort mode indices to integrate; default is every elastic mode.
  std::optional<std::vector<int>> mode_set;
  /// Integrate rigid-body modes too (they drift without damping).
  bool include_rigid = false;
  std::size_t max_samples = std::size_t{1} << 26;
};

struct SimResult {
  SignalRecord input;
  SignalRecord output;
};

/// Bank of decoupled modal oscillators q'' + alpha q' + lambda q = g u(t),
/// discretized exactly for piecewise-constant input (zero-order hold): the
/// 2x2 state blocks advance by the matrix exponential of the augmented
/// (state, input) system, so the step is exact for each held sample.
class ModalIntegrator {
 public:
  ModalIntegrator(const ModalModel& model, const PlateConfig& config,
                  const std::vector<int>& mode_indices, double sample_rate);

  /// Sensor reading at the current time (before consuming more input).
  double output() const;
  /// Advance one sample interval with input held at u.
  void step(double u);
  /// Sum of per-mode q_dot^2 + lambda q^2 (decay diagnostic).
  double energy() const;

 private:
  struct Block {
    Eigen::Matrix2d ad;
    Eigen::Vector2d bd;
    Eigen::Vector2d state{0.0, 0.0};
    double out_weight = 0.0;
    double lambda = 0.0;
  };
  std::vector<Block> blocks_;
};

/// Drives the integrator with the sampled excitation and records input and
/// sensor output at the sample instants (zero initial conditions).
SimResult simulate(const ModalModel& model, const PlateConfig& config,
                   const Excitation& excitation, double duration_s, double sample_rate_hz,
                   const SimOptions& options = {});

}  // namespace platemodal
