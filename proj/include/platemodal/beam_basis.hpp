#pragma once

#include <Eigen/Dense>
#include <vector>

namespace platemodal {

enum class BasisKind { FreeFree, SimplySupported };

/// Dimensionless eigenvalue parameters beta_n of the 1-D beam problem.
/// FreeFree: beta_0 = beta_1 = 0 (rigid translation and rotation), then the
/// positive roots of cos(b)cosh(b) = 1 solved on the overflow-free residual
/// cos(b) - 1/cosh(b).  SimplySupported: beta_n = (n+1)*pi, the first sine
/// mode sitting at index 0.
std::vector<double> solve_beta(BasisKind kind, int count);

/// Orthonormal basis on [0, 1]: free-free Euler-Bernoulli eigenfunctions or
/// simply supported sines, with exact derivatives up to order two.
class BeamBasis {
 public:
  BeamBasis(BasisKind kind, int count);

  BasisKind kind() const { return kind_; }
  int size() const { return static_cast<int>(beta_.size()); }
  double beta(int n) const;
  const std::vector<double>& betas() const { return beta_; }

  /// phi_n^(deriv)(x) for deriv in {0, 1, 2}, x in [0, 1].
  ///
  /// The free-free shapes for n >= 2 are evaluated with the hyperbolic part
  /// written as (1-gamma)e^{bx} and (1+gamma)e^{-bx}; 1-gamma is computed
  /// from its cancellation-free closed form so the growing exponential is
  /// always multiplied by an accurate small factor.
  double eval(int n, int deriv, double x) const;

 private:
  BasisKind kind_;
  std::vector<double> beta_;
  std::vector<double> gamma_;            // free-free, n >= 2
  std::vector<double> one_minus_gamma_;  // stable companion of gamma_
  std::vector<double> inv_norm_;         // 1/||psi_n||, quadrature-normalized
};

/// Inner-product matrices of basis derivatives:
///   kappa(n, k) = <phi_n'', phi_k>,  theta(n, k) = <phi_n', phi_k'>.
struct CouplingMatrices {
  Eigen::MatrixXd kappa;
  Eigen::MatrixXd theta;
};

/// Both matrices by composite Gauss-Legendre quadrature with
/// max(64, 8*max(n, k)) nodes per entry, scaled by node_multiplier
/// (refinement studies double it).
CouplingMatrices coupling_matrices(const BeamBasis& basis, int node_multiplier = 1);

}  // namespace platemodal
