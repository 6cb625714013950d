#pragma once

#include <vector>

namespace platemodal {

/// Nodes and weights of a quadrature rule on [0, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Composite Gauss-Legendre rule on [0, 1] built from 16-point panels.
/// The panel count is chosen so the total node count is at least min_nodes.
QuadratureRule composite_gauss(int min_nodes);

}  // namespace platemodal
