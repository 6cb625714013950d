#include "platemodal/galerkin.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "platemodal/errors.hpp"

namespace platemodal {

Eigen::MatrixXd commutation_matrix(int n) {
  if (n < 1) throw DomainError("commutation_matrix: n must be positive");
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n * n, n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) k(c * n + r, r * n + c) = 1.0;
  return k;
}

AssembledSystem assemble(const MechanicalParams& params, double ell1, double ell2,
                         const BeamBasis& basis1, const BeamBasis& basis2) {
  if (basis1.size() != basis2.size())
    throw DomainError("assemble: bases must have equal size");
  if (!(ell1 > 0.0) || !(ell2 > 0.0)) throw DomainError("assemble: geometry must be positive");
  const StiffnessCoeffs d = stiffness_coeffs(params);
  const int n = basis1.size();

  Eigen::VectorXd b14(n), b24(n);
  for (int i = 0; i < n; ++i) {
    b14(i) = std::pow(basis1.beta(i), 4);
    b24(i) = std::pow(basis2.beta(i), 4);
  }
  const CouplingMatrices c1 = coupling_matrices(basis1);
  const CouplingMatrices c2 = coupling_matrices(basis2);

  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  const double mixed = 1.0 / (ell1 * ell1 * ell2 * ell2);

  // Column-major vec of the coefficient matrix: B1^4 acts on rows via
  // I (x) B1^4, B2^4 on columns via B2^4 (x) I.  The d12 block pairs the
  // curvature couplings once per direction ordering, which keeps the
  // operator symmetric, as a Galerkin projection of a symmetric form must be.
  Eigen::MatrixXd m =
      (d.d11 / std::pow(ell1, 4)) *
          Eigen::kroneckerProduct(identity, Eigen::MatrixXd(b14.asDiagonal())).eval() +
      (d.d22 / std::pow(ell2, 4)) *
          Eigen::kroneckerProduct(Eigen::MatrixXd(b24.asDiagonal()), identity).eval() +
      (4.0 * d.d66 * mixed) * Eigen::kroneckerProduct(c2.theta.transpose(), c1.theta).eval() +
      (d.d12 * mixed) * (Eigen::kroneckerProduct(c2.kappa.transpose(), c1.kappa).eval() +
                         Eigen::kroneckerProduct(c2.kappa, c1.kappa.transpose()).eval());

  return AssembledSystem{std::move(m), n - 1, basis1, basis2, d, ell1, ell2};
}

std::vector<int> ModalModel::elastic_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(modes.size()); ++i)
    if (!modes[i].rigid_body) idx.push_back(i);
  return idx;
}

ModalModel solve_modes(const AssembledSystem& sys,
                       const std::optional<std::vector<int>>& mode_set) {
  const int dim = static_cast<int>(sys.m.rows());
  const int n = sys.n_trunc + 1;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(sys.m);
  if (solver.info() != Eigen::Success)
    throw NumericalError("solve_modes: eigendecomposition failed");

  const auto& values = solver.eigenvalues();
  double max_abs = 0.0;
  for (int i = 0; i < dim; ++i) max_abs = std::max(max_abs, std::abs(values(i).real()));
  for (int i = 0; i < dim; ++i) {
    if (std::abs(values(i).imag()) > 1e-6 * std::max(1.0, std::abs(values(i).real())))
      throw NumericalError("solve_modes: complex eigenvalue beyond realness tolerance");
  }

  std::vector<int> order(dim);
  for (int i = 0; i < dim; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values(a).real() < values(b).real(); });

  const double lambda_max = values(order.back()).real();
  const double eps_zero = 1e-6 * std::max(lambda_max, 0.0);

  ModalModel model;
  model.ell1 = sys.ell1;
  model.ell2 = sys.ell2;
  model.basis1 = sys.basis1;
  model.basis2 = sys.basis2;
  model.eps_zero = eps_zero;
  model.modes.reserve(dim);

  const Eigen::MatrixXcd vectors = solver.eigenvectors();
  for (int pos = 0; pos < dim; ++pos) {
    const int i = order[pos];
    const double lambda = values(i).real();
    if (lambda < -eps_zero)
      throw NumericalError("solve_modes: negative eigenvalue beyond zero tolerance");
    Eigen::VectorXd v = vectors.col(i).real();
    Eigen::MatrixXd c = Eigen::Map<Eigen::MatrixXd>(v.data(), n, n);  // vec^{-1}, column-major
    c /= c.norm();
    // Canonical sign: largest-magnitude coefficient positive.
    Eigen::Index rmax = 0, cmax = 0;
    c.cwiseAbs().maxCoeff(&rmax, &cmax);
    if (c(rmax, cmax) < 0.0) c = -c;
    Mode mode;
    mode.lambda = lambda;
    mode.coeffs = std::move(c);
    mode.norm_sq = sys.ell1 * sys.ell2;
    mode.frequency_hz = std::sqrt(std::max(lambda, 0.0)) / (2.0 * M_PI);
    mode.rigid_body = lambda <= eps_zero;
    model.modes.push_back(std::move(mode));
  }

  for (std::size_t i = 0; i + 1 < model.modes.size(); ++i) {
    const Mode& a = model.modes[i];
    const Mode& b = model.modes[i + 1];
    if (a.rigid_body || b.rigid_body) continue;
    if (b.lambda - a.lambda <= 1e-8 * std::max(std::abs(a.lambda), std::abs(b.lambda)))
      model.degenerate_warning = true;
  }

  if (mode_set) {
    std::vector<Mode> selected;
    selected.reserve(mode_set->size());
    for (int idx : *mode_set) {
      if (idx < 0 || idx >= dim)
        throw DomainError("solve_modes: mode index " + std::to_string(idx) + " out of range");
      selected.push_back(model.modes[idx]);
    }
    std::sort(selected.begin(), selected.end(),
              [](const Mode& a, const Mode& b) { return a.lambda < b.lambda; });
    model.modes = std::move(selected);
  }
  return model;
}

double eval_mode_shape(const ModalModel& model, int mode, int deriv1, int deriv2,
                       double x1, double x2) {
  if (mode < 0 || mode >= static_cast<int>(model.modes.size()))
    throw DomainError("eval_mode_shape: mode index out of range");
  if (deriv1 < 0 || deriv1 > 2 || deriv2 < 0 || deriv2 > 2)
    throw DomainError("eval_mode_shape: derivative orders must be at most 2");
  if (x1 < 0.0 || x1 > model.ell1 || x2 < 0.0 || x2 > model.ell2)
    throw DomainError("eval_mode_shape: point outside the plate");

  const Eigen::MatrixXd& c = model.modes[mode].coeffs;
  const int n = static_cast<int>(c.rows());
  Eigen::VectorXd v1(n), v2(n);
  for (int k = 0; k < n; ++k) {
    v1(k) = model.basis1.eval(k, deriv1, x1 / model.ell1);
    v2(k) = model.basis2.eval(k, deriv2, x2 / model.ell2);
  }
  const double scale = std::pow(model.ell1, deriv1) * std::pow(model.ell2, deriv2);
  return v1.dot(c * v2) / scale;
}

}  // namespace platemodal
