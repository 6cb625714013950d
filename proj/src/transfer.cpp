#include "platemodal/transfer.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "platemodal/errors.hpp"

namespace platemodal {

TransferFunction build_transfer(const ModalModel& model, const PlateConfig& config,
                                const std::vector<int>& mode_set) {
  TransferFunction tf;
  tf.alpha = config.params.alpha;
  tf.rho_h = config.params.rho * config.params.h;
  tf.terms.reserve(mode_set.size());
  for (int idx : mode_set) {
    if (idx < 0 || idx >= static_cast<int>(model.modes.size()))
      throw DomainError("build_transfer: mode index " + std::to_string(idx) + " out of range");
    TransferTerm term;
    term.mode_index = idx;
    term.residue_num = eval_mode_shape(model, idx, 2, 0, config.c0[0], config.c0[1]) *
                       eval_mode_shape(model, idx, 0, 0, config.s0[0], config.s0[1]);
    term.lambda = model.modes[idx].lambda;
    term.norm_sq = model.modes[idx].norm_sq;
    tf.terms.push_back(term);
  }
  for (std::size_t i = 0; i < tf.terms.size(); ++i)
    for (std::size_t j = i + 1; j < tf.terms.size(); ++j)
      if (std::abs(tf.terms[i].lambda - tf.terms[j].lambda) <=
          1e-8 * std::max(std::abs(tf.terms[i].lambda), std::abs(tf.terms[j].lambda)))
        tf.repeated_lambda_warning = true;
  return tf;
}

std::complex<double> eval_tf(const TransferFunction& tf, std::complex<double> s) {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& term : tf.terms) {
    const std::complex<double> den = s * s + tf.alpha * s + term.lambda;
    const double scale = std::norm(s) + tf.alpha * std::abs(s) + std::abs(term.lambda);
    if (std::abs(den) <= 16.0 * std::numeric_limits<double>::epsilon() * scale)
      throw PoleError("eval_tf: evaluation at a pole of mode " + std::to_string(term.mode_index),
                      term.mode_index);
    acc += term.residue_num / (den * term.norm_sq);
  }
  return acc / tf.rho_h;
}

FrequencyResponse frequency_response(const TransferFunction& tf, double f_min, double f_max,
                                     int points) {
  if (!(f_min >= 0.0) || !(f_min < f_max))
    throw DomainError("frequency_response: need 0 <= f_min < f_max");
  if (points < 2) throw DomainError("frequency_response: need at least 2 points");
  FrequencyResponse out;
  out.frequency_hz.reserve(points);
  out.magnitude.reserve(points);
  out.phase_rad.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double f = f_min + (f_max - f_min) * i / (points - 1);
    std::complex<double> h;
    try {
      h = eval_tf(tf, std::complex<double>(0.0, 2.0 * M_PI * f));
    } catch (const PoleError& e) {
      if (tf.alpha == 0.0)
        throw PoleError(std::string(e.what()) + " (undamped grid hit a resonance; set alpha > 0)",
                        e.mode_index);
      throw;
    }
    out.frequency_hz.push_back(f);
    out.magnitude.push_back(std::abs(h));
    out.phase_rad.push_back(std::arg(h));
  }
  return out;
}

}  // namespace platemodal
