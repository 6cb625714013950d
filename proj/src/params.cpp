#include "platemodal/params.hpp"

#include <cmath>

#include "platemodal/errors.hpp"

namespace platemodal {

void MechanicalParams::validate() const {
  if (!(rho > 0.0)) throw DomainError("params: rho must be positive");
  if (!(h > 0.0)) throw DomainError("params: h must be positive");
  if (!(e1 > 0.0) || !(e2 > 0.0)) throw DomainError("params: Young's moduli must be positive");
  if (!(g > 0.0)) throw DomainError("params: shear modulus must be positive");
  if (!(nu1 > 0.0 && nu1 < 0.5)) throw DomainError("params: nu1 must lie in (0, 0.5)");
  if (!(alpha >= 0.0)) throw DomainError("params: alpha must be non-negative");
  if (!(1.0 - nu1 * nu2() > 0.0)) throw DomainError("params: 1 - nu1*nu2 must be positive");
}

StiffnessCoeffs stiffness_coeffs(const MechanicalParams& p) {
  p.validate();
  const double denom = 12.0 * p.rho * (1.0 - p.nu1 * p.nu2());
  StiffnessCoeffs d{};
  d.d11 = p.e1 * p.h * p.h / denom;
  d.d22 = p.e2 * p.h * p.h / denom;
  d.d12 = p.nu2() * d.d11;
  d.d66 = p.g * p.h * p.h / (12.0 * p.rho);
  // nu2*d11 and nu1*d22 are the same number up to rounding; anything larger
  // means the inputs were mangled upstream.
  if (std::abs(d.d12 - p.nu1 * d.d22) > 1e-12 * std::abs(d.d12))
    throw NumericalError("stiffness_coeffs: d12 consistency check failed");
  return d;
}

void PlateConfig::validate() const {
  params.validate();
  if (!(ell1 > 0.0) || !(ell2 > 0.0)) throw DomainError("config: side lengths must be positive");
  if (n_trunc < 0) throw DomainError("config: n_trunc must be non-negative");
  if (s0[0] < 0.0 || s0[0] > ell1 || s0[1] < 0.0 || s0[1] > ell2)
    throw DomainError("config: actuator point outside the plate");
  if (c0[0] < 0.0 || c0[0] > ell1 || c0[1] < 0.0 || c0[1] > ell2)
    throw DomainError("config: sensor point outside the plate");
}

}  // namespace platemodal
