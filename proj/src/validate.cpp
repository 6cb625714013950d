#include "platemodal/validate.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "platemodal/beam_basis.hpp"
#include "platemodal/csv.hpp"
#include "platemodal/galerkin.hpp"
#include "platemodal/plate_model.hpp"
#include "platemodal/quadrature.hpp"

namespace platemodal {
namespace {

MechanicalParams reference_params() {
  MechanicalParams p;
  p.rho = 505.6;
  p.h = 3.6e-3;
  p.e1 = 23e9;
  p.e2 = 14e9;
  p.g = 2.2e9;
  p.nu1 = 0.25;
  return p;
}

CheckResult check_beta_residuals() {
  const auto beta = solve_beta(BasisKind::FreeFree, 12);
  double worst = 0.0;
  for (int n = 2; n < 12; ++n)
    worst = std::max(worst, std::abs(std::cos(beta[n]) - 1.0 / std::cosh(beta[n])));
  return {"beta_residuals", worst < 1e-10, "max residual " + format_g9(worst)};
}

CheckResult check_orthonormality() {
  double worst = 0.0;
  for (BasisKind kind : {BasisKind::FreeFree, BasisKind::SimplySupported}) {
    const BeamBasis basis(kind, 11);
    const auto rule = composite_gauss(200);
    for (int n = 0; n < 11; ++n)
      for (int m = n; m < 11; ++m) {
        const double inner =
            rule.integrate([&](double x) { return basis.eval(n, 0, x) * basis.eval(m, 0, x); });
        worst = std::max(worst, std::abs(inner - (n == m ? 1.0 : 0.0)));
      }
  }
  return {"orthonormality", worst < 1e-8, "max Gram deviation " + format_g9(worst)};
}

CheckResult check_coupling_refinement() {
  const BeamBasis basis(BasisKind::FreeFree, 11);
  const auto base = coupling_matrices(basis);
  const auto fine = coupling_matrices(basis, 2);
  const double dev = std::max((base.kappa - fine.kappa).cwiseAbs().maxCoeff(),
                              (base.theta - fine.theta).cwiseAbs().maxCoeff());
  double ibp = 0.0;  // integration-by-parts identity against boundary values
  for (int n = 0; n < 11; ++n)
    for (int k = 0; k < 11; ++k) {
      const double boundary = basis.eval(n, 1, 1.0) * basis.eval(k, 0, 1.0) -
                              basis.eval(n, 1, 0.0) * basis.eval(k, 0, 0.0);
      ibp = std::max(ibp, std::abs(base.kappa(n, k) + base.theta(n, k) - boundary));
    }
  return {"coupling_refinement", dev < 1e-8 && ibp < 1e-6,
          "refinement " + format_g9(dev) + ", by-parts " + format_g9(ibp)};
}

CheckResult check_navier_oracle() {
  PlateConfig cfg;
  cfg.params = reference_params();
  cfg.ell1 = 1.0;
  cfg.ell2 = 0.5;
  cfg.bc1 = cfg.bc2 = BasisKind::SimplySupported;
  cfg.n_trunc = 4;
  cfg.s0 = {0.3, 0.2};
  cfg.c0 = {0.6, 0.3};
  const ModalModel model = build_modal_model(cfg);
  std::vector<double> navier;
  for (int k = 1; k <= 5; ++k)
    for (int j = 1; j <= 5; ++j) navier.push_back(navier_lambda(cfg, k, j));
  std::sort(navier.begin(), navier.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < navier.size(); ++i)
    worst = std::max(worst, std::abs(model.modes[i].lambda - navier[i]) / navier[i]);
  return {"navier_oracle", worst < 1e-8, "max relative deviation " + format_g9(worst)};
}

CheckResult check_vectorization(double kappa_perturbation) {
  const MechanicalParams p = reference_params();
  const double l1 = 1.0, l2 = 0.5;
  const int n = 5;  // N = 4
  const BeamBasis b1(BasisKind::FreeFree, n), b2(BasisKind::FreeFree, n);
  const AssembledSystem sys = assemble(p, l1, l2, b1, b2);
  auto c1 = coupling_matrices(b1);
  const auto c2 = coupling_matrices(b2);
  c1.kappa(2, 0) += kappa_perturbation;

  const StiffnessCoeffs d = sys.coeffs;
  const double mixed = 1.0 / (l1 * l1 * l2 * l2);
  std::mt19937 rng(2024);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd c(n, n);
    for (int i = 0; i < n * n; ++i) c(i / n, i % n) = gauss(rng);
    const Eigen::VectorXd vec_c = Eigen::Map<const Eigen::VectorXd>(c.data(), n * n);
    const Eigen::VectorXd lhs = sys.m * vec_c;
    Eigen::VectorXd rhs(n * n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        double acc = (d.d11 * std::pow(b1.beta(k), 4) / std::pow(l1, 4) +
                      d.d22 * std::pow(b2.beta(j), 4) / std::pow(l2, 4)) *
                     c(k, j);
        for (int nn = 0; nn < n; ++nn)
          for (int mm = 0; mm < n; ++mm) {
            acc += d.d12 * mixed *
                   (c1.kappa(nn, k) * c2.kappa(j, mm) + c1.kappa(k, nn) * c2.kappa(mm, j)) *
                   c(nn, mm);
            acc += 4.0 * d.d66 * mixed * c1.theta(nn, k) * c2.theta(mm, j) * c(nn, mm);
          }
        rhs(j * n + k) = acc;
      }
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / lhs.cwiseAbs().maxCoeff());
  }
  return {"vectorization_consistency", worst < 1e-10, "max relative deviation " + format_g9(worst)};
}

CheckResult check_proposition1() {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst_im = 0.0, worst_cross = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    MechanicalParams p;
    p.rho = 100.0 + 1900.0 * uni(rng);
    p.h = 1e-3 + 1.9e-2 * uni(rng);
    p.e1 = 5e9 + 45e9 * uni(rng);
    p.e2 = p.e1 * (0.2 + 1.8 * uni(rng));
    p.g = 1e9 + 9e9 * uni(rng);
    p.nu1 = 0.05 + 0.4 * uni(rng);
    const int n = 4 + static_cast<int>(trial % 3);
    const BeamBasis b1(BasisKind::FreeFree, n), b2(BasisKind::FreeFree, n);
    const AssembledSystem sys = assemble(p, 0.5 + uni(rng), 0.5 + uni(rng), b1, b2);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(sys.m);
    double max_re = 0.0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i)
      max_re = std::max(max_re, std::abs(solver.eigenvalues()(i).real()));
    for (int i = 0; i < solver.eigenvalues().size(); ++i)
      worst_im = std::max(worst_im, std::abs(solver.eigenvalues()(i).imag()) / max_re);
    const ModalModel model = solve_modes(sys);
    for (std::size_t i = 0; i < model.modes.size(); ++i)
      for (std::size_t j = i + 1; j < model.modes.size(); ++j) {
        const double gap = std::abs(model.modes[i].lambda - model.modes[j].lambda);
        if (gap <= 1e-6 * std::max(std::abs(model.modes[i].lambda), std::abs(model.modes[j].lambda)))
          continue;
        const double cross =
            (model.modes[i].coeffs.array() * model.modes[j].coeffs.array()).sum();
        worst_cross = std::max(worst_cross, std::abs(cross));
      }
  }
  return {"proposition1", worst_im < 1e-6 && worst_cross < 1e-6,
          "max |Im|/max|lambda| " + format_g9(worst_im) + ", max cross " + format_g9(worst_cross)};
}

CheckResult check_commutation() {
  std::mt19937 rng(99);
  std::normal_distribution<double> gauss;
  const Eigen::MatrixXd k = commutation_matrix(4);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd a(4, 4);
    for (int i = 0; i < 16; ++i) a(i / 4, i % 4) = gauss(rng);
    const Eigen::VectorXd vec_a = Eigen::Map<const Eigen::VectorXd>(a.data(), 16);
    const Eigen::MatrixXd at = a.transpose();
    const Eigen::VectorXd vec_at = Eigen::Map<const Eigen::VectorXd>(at.data(), 16);
    worst = std::max(worst, (k * vec_a - vec_at).cwiseAbs().maxCoeff());
  }
  return {"commutation", worst == 0.0, "max deviation " + format_g9(worst)};
}

CheckResult check_mode_norm() {
  PlateConfig cfg;
  cfg.params = reference_params();
  cfg.ell1 = 1.0;
  cfg.ell2 = 0.5;
  cfg.s0 = {0.17, 0.25};
  cfg.c0 = {0.5, 0.21};
  cfg.n_trunc = 4;
  const ModalModel model = build_modal_model(cfg);
  const auto rule = composite_gauss(160);
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double w =
          eval_mode_shape(model, 4, 0, 0, rule.nodes[i] * cfg.ell1, rule.nodes[j] * cfg.ell2);
      norm_sq += rule.weights[i] * rule.weights[j] * w * w;
    }
  norm_sq *= cfg.ell1 * cfg.ell2;
  const double dev = std::abs(norm_sq - model.modes[4].norm_sq) / model.modes[4].norm_sq;
  return {"mode_norm", dev < 1e-6, "relative deviation " + format_g9(dev)};
}

}  // namespace

std::vector<CheckResult> run_self_checks(const ValidateOptions& options) {
  return {check_beta_residuals(),
          check_orthonormality(),
          check_coupling_refinement(),
          check_navier_oracle(),
          check_vectorization(options.kappa_perturbation),
          check_proposition1(),
          check_commutation(),
          check_mode_norm()};
}

}  // namespace platemodal
