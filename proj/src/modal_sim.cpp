#include "platemodal/modal_sim.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "platemodal/errors.hpp"

namespace platemodal {
namespace {

std::vector<double> sample_excitation(const Excitation& excitation, std::size_t count,
                                      double sample_rate, double duration) {
  std::vector<double> u(count, 0.0);
  if (const auto* pulse = std::get_if<PulseExcitation>(&excitation)) {
    if (!(pulse->width_s > 0.0)) throw DomainError("simulate: pulse width must be positive");
    for (std::size_t k = 0; k < count; ++k) {
      const double t = static_cast<double>(k) / sample_rate;
      if (t >= pulse->width_s) break;
      u[k] = pulse->amplitude_n;
    }
  } else if (const auto* chirp = std::get_if<ChirpExcitation>(&excitation)) {
    if (!(chirp->f0_hz < chirp->f1_hz)) throw DomainError("simulate: chirp needs f0 < f1");
    const double rate = 0.5 * (chirp->f1_hz - chirp->f0_hz) / duration;
    for (std::size_t k = 0; k < count; ++k) {
      const double t = static_cast<double>(k) / sample_rate;
      u[k] = chirp->amplitude_n * std::sin(2.0 * M_PI * (chirp->f0_hz * t + rate * t * t));
    }
  } else {
    const auto& rec = std::get<SampledExcitation>(excitation).record;
    if (rec.sample_rate != sample_rate)
      throw DomainError("simulate: sampled excitation rate does not match the simulation rate");
    const std::size_t n = std::min(count, rec.samples.size());
    for (std::size_t k = 0; k < n; ++k) u[k] = rec.samples[k];
  }
  return u;
}

}  // namespace

ModalIntegrator::ModalIntegrator(const ModalModel& model, const PlateConfig& config,
                                 const std::vector<int>& mode_indices, double sample_rate) {
  if (!(sample_rate > 0.0)) throw DomainError("ModalIntegrator: sample rate must be positive");
  const double ts = 1.0 / sample_rate;
  const double alpha = config.params.alpha;
  const double rho_h = config.params.rho * config.params.h;
  blocks_.reserve(mode_indices.size());
  for (int idx : mode_indices) {
    if (idx < 0 || idx >= static_cast<int>(model.modes.size()))
      throw DomainError("ModalIntegrator: mode index out of range");
    const Mode& mode = model.modes[idx];
    const double gain = eval_mode_shape(model, idx, 0, 0, config.s0[0], config.s0[1]) /
                        (rho_h * mode.norm_sq);
    Block block;
    block.lambda = mode.lambda;
    block.out_weight = eval_mode_shape(model, idx, 2, 0, config.c0[0], config.c0[1]);
    // Exact hold-equivalent discretization via the augmented exponential:
    // exp([[A, B], [0, 0]] ts) = [[Ad, Bd], [0, 1]].
    Eigen::Matrix3d aug = Eigen::Matrix3d::Zero();
    aug(0, 1) = 1.0;
    aug(1, 0) = -mode.lambda;
    aug(1, 1) = -alpha;
    aug(1, 2) = gain;
    const Eigen::Matrix3d e = (aug * ts).exp();
    block.ad = e.topLeftCorner<2, 2>();
    block.bd = e.topRightCorner<2, 1>();
    blocks_.push_back(block);
  }
}

double ModalIntegrator::output() const {
  double y = 0.0;
  for (const auto& b : blocks_) y += b.out_weight * b.state(0);
  return y;
}

void ModalIntegrator::step(double u) {
  for (auto& b : blocks_) b.state = b.ad * b.state + b.bd * u;
}

double ModalIntegrator::energy() const {
  double e = 0.0;
  for (const auto& b : blocks_)
    e += b.state(1) * b.state(1) + b.lambda * b.state(0) * b.state(0);
  return e;
}

SimResult simulate(const ModalModel& model, const PlateConfig& config,
                   const Excitation& excitation, double duration_s, double sample_rate_hz,
                   const SimOptions& options) {
  if (!(duration_s > 0.0)) throw DomainError("simulate: duration must be positive");
  if (!(sample_rate_hz > 0.0)) throw DomainError("simulate: sample rate must be positive");
  const auto count = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
  if (count < 1) throw DomainError("simulate: duration shorter than one sample");
  if (count > options.max_samples)
    throw ResourceError("simulate: request of " + std::to_string(count) +
                        " samples exceeds the budget of " + std::to_string(options.max_samples));

  std::vector<int> indices;
  if (options.mode_set) {
    indices = *options.mode_set;
  } else {
    for (int i = 0; i < static_cast<int>(model.modes.size()); ++i)
      if (options.include_rigid || !model.modes[i].rigid_body) indices.push_back(i);
  }

  const std::vector<double> u = sample_excitation(excitation, count, sample_rate_hz, duration_s);
  ModalIntegrator integrator(model, config, indices, sample_rate_hz);

  SimResult result;
  result.input = SignalRecord{sample_rate_hz, u, SignalLabel::Input};
  result.output.sample_rate = sample_rate_hz;
  result.output.label = SignalLabel::Output;
  result.output.samples.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    result.output.samples[k] = integrator.output();
    integrator.step(u[k]);
  }
  for (double v : result.output.samples)
    if (!std::isfinite(v)) throw NumericalError("simulate: non-finite state encountered");
  return result;
}

}  // namespace platemodal
