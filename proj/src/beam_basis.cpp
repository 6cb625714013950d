#include "platemodal/beam_basis.hpp"

#include <cmath>
#include <string>

#include "platemodal/errors.hpp"
#include "platemodal/quadrature.hpp"

namespace platemodal {
namespace {

constexpr int kMaxFreeFreeCount = 25;  // double precision guard on e^{beta}

// Characteristic residual of the free-free beam, cos(b)cosh(b) = 1 rewritten
// as cos(b) - 1/cosh(b) so it stays O(1) for large b.
double char_residual(double b) { return std::cos(b) - 1.0 / std::cosh(b); }

double char_residual_deriv(double b) {
  const double ch = std::cosh(b);
  return -std::sin(b) + std::sinh(b) / (ch * ch);
}

double solve_free_free_root(int n) {
  const double seed = M_PI * (2.0 * n - 1.0) / 2.0;
  double lo = seed - 0.3, hi = seed + 0.3;
  double flo = char_residual(lo), fhi = char_residual(hi);
  if (flo * fhi > 0.0) {  // widen once; roots sit within ~e^{-b} of the seed
    lo = seed - 0.6;
    hi = seed + 0.6;
    flo = char_residual(lo);
    fhi = char_residual(hi);
  }
  if (flo * fhi > 0.0)
    throw NumericalError("solve_beta: failed to bracket root " + std::to_string(n));
  for (int it = 0; it < 110 && hi - lo > 1e-16 * seed; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = char_residual(mid);
    if (flo * fm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double b = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) b -= char_residual(b) / char_residual_deriv(b);
  if (std::abs(char_residual(b)) > 1e-12)
    throw NumericalError("solve_beta: root " + std::to_string(n) + " did not converge");
  return b;
}

// Raw (unnormalized) free-free shape psi_n and derivatives for n >= 2.
double psi_eval(double beta, double gamma, double one_minus_gamma, int deriv, double x) {
  const double t = beta * x;
  const double grow = 0.5 * one_minus_gamma * std::exp(t);
  const double decay = 0.5 * (1.0 + gamma) * std::exp(-t);
  switch (deriv) {
    case 0:
      return std::sin(t) - gamma * std::cos(t) + grow - decay;
    case 1:
      return beta * (std::cos(t) + gamma * std::sin(t) + grow + decay);
    default:
      return beta * beta * (-std::sin(t) + gamma * std::cos(t) + grow - decay);
  }
}

int pair_node_count(int n, int k) { return std::max(64, 8 * std::max(n, k)); }

}  // namespace

std::vector<double> solve_beta(BasisKind kind, int count) {
  if (count < 1) throw DomainError("solve_beta: count must be at least 1");
  std::vector<double> beta(static_cast<std::size_t>(count));
  if (kind == BasisKind::SimplySupported) {
    for (int n = 0; n < count; ++n) beta[n] = (n + 1) * M_PI;
    return beta;
  }
  if (count > kMaxFreeFreeCount)
    throw DomainError("solve_beta: free-free basis limited to " +
                      std::to_string(kMaxFreeFreeCount) + " functions");
  beta[0] = 0.0;
  if (count > 1) beta[1] = 0.0;
  for (int n = 2; n < count; ++n) beta[n] = solve_free_free_root(n);
  return beta;
}

BeamBasis::BeamBasis(BasisKind kind, int count)
    : kind_(kind), beta_(solve_beta(kind, count)) {
  if (kind_ != BasisKind::FreeFree) return;
  gamma_.assign(beta_.size(), 0.0);
  one_minus_gamma_.assign(beta_.size(), 0.0);
  inv_norm_.assign(beta_.size(), 1.0);
  for (int n = 2; n < size(); ++n) {
    const double b = beta_[n];
    const double denom = std::sinh(b) + std::sin(b);
    gamma_[n] = (std::cosh(b) - std::cos(b)) / denom;
    // 1 - gamma = (sinh + sin - cosh + cos)/denom with sinh - cosh = -e^{-b}.
    one_minus_gamma_[n] = (std::sin(b) + std::cos(b) - std::exp(-b)) / denom;
    const auto rule = composite_gauss(pair_node_count(n, n));
    const double norm_sq = rule.integrate([&](double x) {
      const double v = psi_eval(b, gamma_[n], one_minus_gamma_[n], 0, x);
      return v * v;
    });
    inv_norm_[n] = 1.0 / std::sqrt(norm_sq);
  }
}

double BeamBasis::beta(int n) const {
  if (n < 0 || n >= size()) throw DomainError("BeamBasis: index out of range");
  return beta_[n];
}

double BeamBasis::eval(int n, int deriv, double x) const {
  if (n < 0 || n >= size()) throw DomainError("BeamBasis::eval: index out of range");
  if (deriv < 0 || deriv > 2) throw DomainError("BeamBasis::eval: derivative order must be 0, 1 or 2");
  if (kind_ == BasisKind::SimplySupported) {
    const double b = beta_[n];
    const double amp = std::sqrt(2.0);
    switch (deriv) {
      case 0:
        return amp * std::sin(b * x);
      case 1:
        return amp * b * std::cos(b * x);
      default:
        return -amp * b * b * std::sin(b * x);
    }
  }
  if (n == 0) return deriv == 0 ? 1.0 : 0.0;
  if (n == 1) {
    const double r3 = std::sqrt(3.0);
    switch (deriv) {
      case 0:
        return r3 * (2.0 * x - 1.0);
      case 1:
        return 2.0 * r3;
      default:
        return 0.0;
    }
  }
  return inv_norm_[n] * psi_eval(beta_[n], gamma_[n], one_minus_gamma_[n], deriv, x);
}

CouplingMatrices coupling_matrices(const BeamBasis& basis, int node_multiplier) {
  if (node_multiplier < 1) throw DomainError("coupling_matrices: node_multiplier must be positive");
  const int n = basis.size();
  CouplingMatrices out{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto rule = composite_gauss(node_multiplier * pair_node_count(i, k));
      out.kappa(i, k) =
          rule.integrate([&](double x) { return basis.eval(i, 2, x) * basis.eval(k, 0, x); });
      out.theta(i, k) =
          rule.integrate([&](double x) { return basis.eval(i, 1, x) * basis.eval(k, 1, x); });
    }
  }
  return out;
}

}  // namespace platemodal
