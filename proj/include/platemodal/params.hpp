#pragma once

#include <array>

#include "platemodal/beam_basis.hpp"

namespace platemodal {

/// Material and damping data in SI units.  nu2 is tied to nu1 through the
/// reciprocity relation nu1*E2 = nu2*E1 and is always derived.
struct MechanicalParams {
  double rho;          // density, kg/m^3
  double h;            // thickness, m
  double e1, e2;       // Young's moduli, Pa
  double g;            // shear modulus, Pa
  double nu1;          // major Poisson ratio
  double alpha = 0.0;  // viscous damping, 1/s

  double nu2() const { return nu1 * e2 / e1; }
  void validate() const;  // throws DomainError on violated invariants
};

/// Mass-normalized bending stiffness coefficients, m^4/s^2.
struct StiffnessCoeffs {
  double d11, d22, d12, d66;
};

StiffnessCoeffs stiffness_coeffs(const MechanicalParams& params);

/// Geometry, boundary conditions, actuator/sensor points and truncation order.
struct PlateConfig {
  MechanicalParams params{};
  double ell1 = 1.0, ell2 = 1.0;  // side lengths, m
  BasisKind bc1 = BasisKind::FreeFree;
  BasisKind bc2 = BasisKind::FreeFree;
  std::array<double, 2> s0{0.0, 0.0};  // point force location
  std::array<double, 2> c0{0.0, 0.0};  // point curvature sensor location
  int n_trunc = 6;

  void validate() const;
};

}  // namespace platemodal
