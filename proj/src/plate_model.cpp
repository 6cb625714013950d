#include "platemodal/plate_model.hpp"

#include <cmath>

#include "platemodal/errors.hpp"

namespace platemodal {

ModalModel build_modal_model(const PlateConfig& config) {
  config.validate();
  const BeamBasis basis1(config.bc1, config.n_trunc + 1);
  const BeamBasis basis2(config.bc2, config.n_trunc + 1);
  const AssembledSystem sys = assemble(config.params, config.ell1, config.ell2, basis1, basis2);
  return solve_modes(sys);
}

double navier_lambda(const PlateConfig& config, int k, int j) {
  if (k < 1 || j < 1) throw DomainError("navier_lambda: mode numbers must be at least 1");
  const StiffnessCoeffs d = stiffness_coeffs(config.params);
  const double a = k * M_PI / config.ell1;
  const double b = j * M_PI / config.ell2;
  return d.d11 * std::pow(a, 4) + d.d22 * std::pow(b, 4) +
         2.0 * (d.d12 + 2.0 * d.d66) * a * a * b * b;
}

}  // namespace platemodal
