#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace euler1d {

/// Gauss-Legendre nodes and weights on [0, 1].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes/weights computed once per order by Newton iteration on the Legendre
/// polynomial; results are cached process-wide.
const Quadrature& gauss_legendre(int order);

/// Integrate f over [a, b] with a fixed Gauss-Legendre rule.
template <typename F>
double integrate(F&& f, double a, double b, int order = 16) {
  const Quadrature& q = gauss_legendre(order);
  const double h = b - a;
  double acc = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    acc += q.weights[i] * f(a + h * q.nodes[i]);
  }
  return h * acc;
}

/// Least-squares slope of log2(y) against log2(x); used for convergence-order
/// measurements.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace euler1d
