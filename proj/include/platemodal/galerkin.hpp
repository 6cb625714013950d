#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "platemodal/beam_basis.hpp"
#include "platemodal/params.hpp"

namespace platemodal {

/// Permutation K with K * vec(A) = vec(A^T) for any n x n matrix A,
/// column-major vectorization.
Eigen::MatrixXd commutation_matrix(int n);

/// The dense (N+1)^2 x (N+1)^2 spectral matrix together with everything
/// needed to interpret its eigenvectors.
struct AssembledSystem {
  Eigen::MatrixXd m;
  int n_trunc;
  BeamBasis basis1;  // direction x1 (rows of the coefficient matrix)
  BeamBasis basis2;  // direction x2 (columns)
  StiffnessCoeffs coeffs;
  double ell1, ell2;
};

AssembledSystem assemble(const MechanicalParams& params, double ell1, double ell2,
                         const BeamBasis& basis1, const BeamBasis& basis2);

struct Mode {
  double lambda;          // rad^2/s^2
  Eigen::MatrixXd coeffs; // (N+1) x (N+1), unit Frobenius norm
  double norm_sq;         // ||W||^2 over the plate = ell1*ell2
  double frequency_hz;    // sqrt(lambda)/(2 pi)
  bool rigid_body;        // lambda below the zero threshold
};

struct ModalModel {
  std::vector<Mode> modes;  // ascending lambda
  double ell1 = 0.0, ell2 = 0.0;
  BeamBasis basis1{BasisKind::FreeFree, 1};
  BeamBasis basis2{BasisKind::FreeFree, 1};
  double eps_zero = 0.0;            // 1e-6 * max lambda
  bool degenerate_warning = false;  // elastic eigenvalues closer than 1e-8 rel

  std::vector<int> elastic_indices() const;
};

/// Dense real eigendecomposition of the assembled matrix.  Eigenvalues are
/// checked against the realness tolerance, eigenvectors reshaped column-major
/// into coefficient matrices and Frobenius-normalized, modes sorted by
/// ascending lambda.  mode_set (post-sort indices) selects a subset;
/// std::nullopt keeps all modes.
ModalModel solve_modes(const AssembledSystem& sys,
                       const std::optional<std::vector<int>>& mode_set = std::nullopt);

/// W^(d1,d2)(x1, x2) of one mode, chain-rule factors 1/ell^d applied.
double eval_mode_shape(const ModalModel& model, int mode, int deriv1, int deriv2,
                       double x1, double x2);

}  // namespace platemodal
