#include "platemodal/quadrature.hpp"

#include <array>
#include <cmath>

#include "platemodal/errors.hpp"

namespace platemodal {
namespace {

constexpr int kPanelOrder = 16;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
// The cos-based initial guess converges in a handful of steps for this order.
std::array<std::array<double, kPanelOrder>, 2> make_panel_rule() {
  std::array<std::array<double, kPanelOrder>, 2> rule{};
  const int n = kPanelOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule[0][i] = x;
    rule[1][i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

QuadratureRule composite_gauss(int min_nodes) {
  if (min_nodes < 1) throw DomainError("composite_gauss: min_nodes must be positive");
  static const auto panel = make_panel_rule();
  const int panels = (min_nodes + kPanelOrder - 1) / kPanelOrder;
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * kPanelOrder);
  rule.weights.reserve(static_cast<std::size_t>(panels) * kPanelOrder);
  const double width = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    for (int i = 0; i < kPanelOrder; ++i) {
      rule.nodes.push_back(mid + 0.5 * width * panel[0][i]);
      rule.weights.push_back(0.5 * width * panel[1][i]);
    }
  }
  return rule;
}

}  // namespace platemodal
