// Command-line front end: modes, tf, simulate, identify, validate.
// Exit codes: 0 ok, 1 validation failure, 2 user/config error, 3 numerical
// or resource error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "platemodal/csv.hpp"
#include "platemodal/errors.hpp"
#include "platemodal/galerkin.hpp"
#include "platemodal/modal_sim.hpp"
#include "platemodal/plate_model.hpp"
#include "platemodal/run_config.hpp"
#include "platemodal/sysid.hpp"
#include "platemodal/transfer.hpp"
#include "platemodal/validate.hpp"

namespace fs = std::filesystem;
using namespace platemodal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUser = 2;
constexpr int kExitNumerical = 3;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;          // overrides config output_dir when set
  std::string mode_set;         // overrides config mode_set when set
  double alpha = -1.0;          // overrides config damping when >= 0
};

RunConfig load_with_overrides(const CommonArgs& args) {
  RunConfig cfg = load_run_config(args.config_path);
  if (!args.out_dir.empty()) cfg.output_dir = args.out_dir;
  if (!args.mode_set.empty()) cfg.mode_set = parse_mode_set(args.mode_set);
  if (args.alpha >= 0.0) cfg.plate.params.alpha = args.alpha;
  return cfg;
}

std::vector<int> resolve_mode_set(const RunConfig& cfg, const ModalModel& model) {
  if (cfg.mode_set) return *cfg.mode_set;
  return model.elastic_indices();
}

fs::path ensure_out_dir(const RunConfig& cfg) {
  fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  return dir;
}

int cmd_modes(const CommonArgs& args) {
  const RunConfig cfg = load_with_overrides(args);
  const ModalModel model = build_modal_model(cfg.plate);
  const fs::path dir = ensure_out_dir(cfg);
  write_modes_csv(dir / "modes.csv", model);
  for (int idx : resolve_mode_set(cfg, model)) {
    if (idx < 0 || idx >= static_cast<int>(model.modes.size()))
      throw DomainError("mode_set index " + std::to_string(idx) + " out of range");
    write_matrix_csv(dir / ("mode_" + std::to_string(idx) + ".csv"), model.modes[idx].coeffs);
  }
  std::cout << "wrote " << (dir / "modes.csv").string() << " (" << model.modes.size()
            << " modes)\n";
  return kExitOk;
}

int cmd_tf(const CommonArgs& args, bool unwrap) {
  const RunConfig cfg = load_with_overrides(args);
  const ModalModel model = build_modal_model(cfg.plate);
  const TransferFunction tf = build_transfer(model, cfg.plate, resolve_mode_set(cfg, model));
  if (tf.repeated_lambda_warning)
    std::cerr << "warning: repeated eigenvalues in the selected mode set\n";
  const FrequencyResponse fr = frequency_response(tf, cfg.tf_f_min, cfg.tf_f_max, cfg.tf_points);
  const fs::path dir = ensure_out_dir(cfg);
  write_frequency_response_csv(dir / "tf.csv", fr, unwrap);
  std::cout << "wrote " << (dir / "tf.csv").string() << " (" << fr.frequency_hz.size()
            << " rows)\n";
  return kExitOk;
}

int cmd_simulate(const CommonArgs& args) {
  const RunConfig cfg = load_with_overrides(args);
  const ModalModel model = build_modal_model(cfg.plate);
  SimOptions options;
  options.mode_set = cfg.mode_set;
  const SimResult result =
      simulate(model, cfg.plate, cfg.excitation, cfg.sim_duration_s, cfg.sim_sample_rate_hz,
               options);
  const fs::path dir = ensure_out_dir(cfg);
  write_signal_csv(dir / "input.csv", result.input);
  write_signal_csv(dir / "output.csv", result.output);
  std::cout << "wrote " << (dir / "input.csv").string() << ", "
            << (dir / "output.csv").string() << " (" << result.input.samples.size()
            << " samples)\n";
  return kExitOk;
}

struct IdentifyArgs {
  std::string input_path, output_path, out_dir = "out", window = "none";
  double rate = 0.0;  // for raw single-column files
  int n_fft = 1 << 15;
  double band_min = 0.0, band_max = 0.0;
  int peak_count = 5;
  bool fit_damping_flag = false;
  bool pad = false;  // zero-pad records shorter than n_fft
};

int cmd_identify(const IdentifyArgs& args) {
  auto load = [&](const std::string& p, SignalLabel label) {
    SignalRecord rec = args.rate > 0.0 ? read_signal_column(p, args.rate) : read_signal_csv(p);
    rec.label = label;
    if (args.pad && static_cast<int>(rec.samples.size()) < args.n_fft)
      rec.samples.resize(args.n_fft, 0.0);
    return rec;
  };
  const SignalRecord input = load(args.input_path, SignalLabel::Input);
  const SignalRecord output = load(args.output_path, SignalLabel::Output);
  const WindowKind window = args.window == "hann" ? WindowKind::Hann : WindowKind::None;

  const EmpiricalTF tf = estimate_tf(input, output, args.n_fft, window);
  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  write_empirical_tf_csv(dir / "empirical_tf.csv", tf);

  const double f_min = args.band_min;
  const double f_max = args.band_max > 0.0 ? args.band_max : tf.frequency_hz.back();
  const PeakList peaks = find_modal_peaks(tf, f_min, f_max, args.peak_count);

  std::ofstream report(dir / "peaks.csv", std::ios::binary);
  report << (args.fit_damping_flag ? "frequency_hz,magnitude,alpha_est\n"
                                   : "frequency_hz,magnitude\n");
  for (const auto& p : peaks.peaks) {
    report << format_g9(p.frequency_hz) << ',' << format_g9(p.magnitude);
    if (args.fit_damping_flag) {
      std::string alpha_est = "nan";
      try {
        alpha_est = format_g9(fit_damping(tf, p.frequency_hz));
      } catch (const BandwidthError&) {
      }
      report << ',' << alpha_est;
    }
    report << '\n';
  }
  if (peaks.shortfall)
    std::cerr << "warning: found only " << peaks.peaks.size() << " of " << args.peak_count
              << " requested peaks\n";
  std::cout << "wrote " << (dir / "empirical_tf.csv").string() << ", "
            << (dir / "peaks.csv").string() << '\n';
  return kExitOk;
}

int cmd_validate(double kappa_perturbation) {
  ValidateOptions options;
  options.kappa_perturbation = kappa_perturbation;
  const auto results = run_self_checks(options);
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.group << ": " << r.detail << '\n';
    all_ok = all_ok && r.passed;
  }
  std::cout << (all_ok ? "validate: all groups passed\n" : "validate: failures detected\n");
  return all_ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthotropic plate modal analysis, transfer functions and identification"};
  app.require_subcommand(1);

  CommonArgs common;
  IdentifyArgs identify;
  bool unwrap = false;
  double kappa_perturbation = 0.0;

  auto add_common = [&](CLI::App* cmd, bool needs_config = true) {
    auto* opt = cmd->add_option("--config", common.config_path, "JSON run configuration");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", common.out_dir, "output directory (overrides config)");
    cmd->add_option("--mode-set", common.mode_set, "'elastic' or comma-separated indices");
    cmd->add_option("--alpha", common.alpha, "damping override, 1/s");
  };

  auto* modes = app.add_subcommand("modes", "frequency table and mode coefficient matrices");
  add_common(modes);
  auto* tf = app.add_subcommand("tf", "analytic frequency response over the configured grid");
  add_common(tf);
  tf->add_flag("--unwrap", unwrap, "unwrap the phase column");
  auto* sim = app.add_subcommand("simulate", "time-domain response to the configured excitation");
  add_common(sim);

  auto* ident = app.add_subcommand("identify", "estimate a transfer function from signal files");
  ident->add_option("--input", identify.input_path, "input signal CSV")->required();
  ident->add_option("--output", identify.output_path, "output signal CSV")->required();
  ident->add_option("--out", identify.out_dir, "output directory");
  ident->add_option("--rate", identify.rate, "sample rate for raw single-column files");
  ident->add_option("--nfft", identify.n_fft, "FFT size (power of two)");
  ident->add_option("--window", identify.window, "none|hann")
      ->check(CLI::IsMember({"none", "hann"}));
  ident->add_option("--band-min", identify.band_min, "peak search lower bound, Hz");
  ident->add_option("--band-max", identify.band_max, "peak search upper bound, Hz");
  ident->add_option("--peaks", identify.peak_count, "number of peaks to report");
  ident->add_flag("--fit-damping", identify.fit_damping_flag, "half-power damping per peak");
  ident->add_flag("--pad", identify.pad, "zero-pad records shorter than the FFT size");

  auto* validate = app.add_subcommand("validate", "run the built-in numerical self checks");
  validate->add_option("--perturb-kappa", kappa_perturbation,
                       "test hook: offset one coupling entry")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(modes)) return cmd_modes(common);
    if (app.got_subcommand(tf)) return cmd_tf(common, unwrap);
    if (app.got_subcommand(sim)) return cmd_simulate(common);
    if (app.got_subcommand(ident)) return cmd_identify(identify);
    if (app.got_subcommand(validate)) return cmd_validate(kappa_perturbation);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const SignalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
