#pragma once

#include <complex>
#include <vector>

#include "platemodal/galerkin.hpp"
#include "platemodal/params.hpp"

namespace platemodal {

/// One modal term of the point-force-to-point-curvature transfer function.
struct TransferTerm {
  int mode_index;     // index into the source ModalModel
  double residue_num; // W_xx(C0) * W(S0)
  double lambda;      // rad^2/s^2
  double norm_sq;     // ||W||^2, m^2
};

struct TransferFunction {
  std::vector<TransferTerm> terms;
  double alpha = 0.0;  // 1/s
  double rho_h = 0.0;  // kg/m^2
  bool repeated_lambda_warning = false;
};

/// Collects the residue data of the selected modes; denominators stay
/// unevaluated until eval_tf.
TransferFunction build_transfer(const ModalModel& model, const PlateConfig& config,
                                const std::vector<int>& mode_set);

/// H(s) = (1/rho h) sum residue_n / ((s^2 + alpha s + lambda_n) ||W_n||^2).
/// Throws PoleError when a denominator is numerically zero.
std::complex<double> eval_tf(const TransferFunction& tf, std::complex<double> s);

struct FrequencyResponse {
  std::vector<double> frequency_hz;
  std::vector<double> magnitude;
  std::vector<double> phase_rad;  // principal value in (-pi, pi]
};

/// |H| and arg H on a uniform frequency grid, s = 2*pi*i*f.
FrequencyResponse frequency_response(const TransferFunction& tf, double f_min, double f_max,
                                     int points);

}  // namespace platemodal
