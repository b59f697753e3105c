#include "euler1d/numerics.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace euler1d {

namespace {

// Legendre polynomial P_n and derivative at x, by recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

Quadrature compute_gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  Quadrature q;
  q.nodes.resize(order);
  q.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    // Chebyshev-like initial guess, refined by Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre(order, x);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    auto [p, dp] = legendre(order, x);
    (void)p;
    // Map from [-1, 1] to [0, 1].
    q.nodes[order - 1 - i] = 0.5 * (x + 1.0);
    q.weights[order - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return q;
}

}  // namespace

const Quadrature& gauss_legendre(int order) {
  static std::mutex mtx;
  static std::map<int, Quadrature> cache;
  std::scoped_lock lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("log_log_slope needs two same-length series");
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double lx = std::log2(x[i]);
    double ly = std::log2(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace euler1d
