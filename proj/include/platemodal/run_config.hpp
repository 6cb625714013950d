#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "platemodal/modal_sim.hpp"
#include "platemodal/params.hpp"

namespace platemodal {

/// Everything a CLI run needs, loaded from one JSON config file.
struct RunConfig {
  PlateConfig plate;
  /// Post-sort mode indices; std::nullopt means "elastic" (all non-rigid).
  std::optional<std::vector<int>> mode_set;
  double tf_f_min = 0.0;
  double tf_f_max = 175.0;
  int tf_points = 4096;
  Excitation excitation = PulseExcitation{};
  double sim_duration_s = 1.0;
  double sim_sample_rate_hz = 30000.0;
  std::string output_dir = "out";
};

/// Parses and validates the config; throws DomainError with the offending
/// field on malformed input.
RunConfig load_run_config(const std::filesystem::path& path);

/// "elastic" or a comma-separated index list, as accepted on the CLI.
std::optional<std::vector<int>> parse_mode_set(const std::string& text);

}  // namespace platemodal
