#include "euler1d/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "euler1d/errors.hpp"
#include "euler1d/numerics.hpp"

namespace euler1d {

GridSpec build_grid(int nx, double M) {
  if (nx < 2) throw ConfigError("build_grid: nx must be >= 2");
  if (!(M > 0.0)) throw ConfigError("build_grid: M must be positive");
  GridSpec g;
  g.nx = nx;
  g.cfl_den = static_cast<int>(std::floor(2.0 * M)) + 1;
  g.nt = static_cast<long>(nx) * g.cfl_den;
  g.dx = 1.0 / (2.0 * nx);
  g.dt = g.dx / g.cfl_den;
  return g;
}

int StaggeredProfile::index_of_j(int j) const {
  if (parity() == 0) {
    if (j < 1 || j > 2 * nx - 1 || j % 2 == 0)
      throw std::out_of_range("index " + std::to_string(j) + " not in J_n at even level");
    return (j - 1) / 2;
  }
  if (j < 0 || j > 2 * nx || j % 2 == 1)
    throw std::out_of_range("index " + std::to_string(j) + " not in J_n at odd level");
  return j / 2;
}

StaggeredProfile StaggeredProfile::zeros(long n, int nx) {
  StaggeredProfile p;
  p.n = n;
  p.nx = nx;
  p.cells.assign((n & 1) == 0 ? nx : nx + 1, GasState{});
  return p;
}

GasState cell_average(const PointField& field, int j, long n, const GridSpec& g) {
  const bool odd = (n & 1) != 0;
  if (odd) {
    if (j < 0 || j > 2 * g.nx || j % 2 == 1)
      throw std::out_of_range("cell_average: j not in J_n");
  } else {
    if (j < 1 || j > 2 * g.nx - 1 || j % 2 == 0)
      throw std::out_of_range("cell_average: j not in J_n");
  }

  // Half-cell width is dx exactly; deriving it from x_j differences would
  // inject per-cell ulp jitter into averages of constant fields.
  auto integrate_half = [&](double a, double& rho, double& mom) {
    const Quadrature& q = gauss_legendre(4);
    for (std::size_t k = 0; k < q.nodes.size(); ++k) {
      GasState u = field(a + g.dx * q.nodes[k]);
      rho += q.weights[k] * g.dx * u.rho;
      mom += q.weights[k] * g.dx * u.mom;
    }
  };

  double rho = 0.0, mom = 0.0;
  if (odd && j == 0) {
    integrate_half(0.0, rho, mom);
    return {rho / g.dx, mom / g.dx};
  }
  if (odd && j == 2 * g.nx) {
    integrate_half(1.0 - g.dx, rho, mom);
    return {rho / g.dx, mom / g.dx};
  }
  integrate_half(g.x(j - 1), rho, mom);
  integrate_half(g.x(j), rho, mom);
  return {rho / (2.0 * g.dx), mom / (2.0 * g.dx)};
}

StaggeredProfile project_initial(const PointField& u0, const GridSpec& g) {
  StaggeredProfile p = StaggeredProfile::zeros(0, g.nx);
  for (int i = 0; i < p.size(); ++i) {
    GasState avg = cell_average(u0, p.j_of(i), 0, g);
    if (avg.rho < 0.0) throw std::domain_error("project_initial: negative averaged density");
    if (avg.rho <= kRhoFloor) avg = {0.0, 0.0};
    p.cells[i] = avg;
  }
  return p;
}

const GasState& PiecewiseField::at(double x) const {
  // Intervals are [edges[i], edges[i+1]); clamp x into [0, 1).
  auto it = std::upper_bound(edges.begin(), edges.end(), x);
  long i = std::distance(edges.begin(), it) - 1;
  i = std::clamp<long>(i, 0, static_cast<long>(values.size()) - 1);
  return values[static_cast<std::size_t>(i)];
}

PiecewiseField piecewise_reconstruct(const StaggeredProfile& p, const GridSpec& g) {
  PiecewiseField f;
  f.edges.push_back(0.0);
  for (int i = 0; i < p.size(); ++i) {
    int j = p.j_of(i);
    double right;
    if (p.parity() == 1 && i == 0) {
      right = g.x(1);
    } else if (p.parity() == 1 && i == p.size() - 1) {
      right = 1.0;
    } else {
      right = g.x(j + 1);
    }
    f.edges.push_back(right);
    f.values.push_back(p.cells[i]);
  }
  return f;
}

ForcingField ForcingField::none() { return ForcingField{}; }

ForcingField ForcingField::sinusoidal(double kappa, std::function<double(double)> shape) {
  ForcingField f;
  f.kind_ = Kind::Sinusoidal;
  f.amplitude_ = kappa;
  f.shape_ = shape ? std::move(shape)
                   : [](double x) { return std::sin(std::numbers::pi * x); };
  return f;
}

ForcingField ForcingField::tabulated(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw ConfigError("forcing table: cannot open " + csv_path);

  std::set<double> tset, xset;
  std::map<std::pair<double, double>, double> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("t,x,F", 0) == 0) continue;
    std::istringstream ls(line);
    double t, x, F;
    char c1, c2;
    if (!(ls >> t >> c1 >> x >> c2 >> F) || c1 != ',' || c2 != ',')
      throw ConfigError("forcing table: malformed line " + std::to_string(lineno) + " in " +
                        csv_path);
    tset.insert(t);
    xset.insert(x);
    entries[{t, x}] = F;
  }
  if (tset.size() < 2 || xset.size() < 2)
    throw ConfigError("forcing table: need at least a 2x2 grid");

  ForcingField f;
  f.kind_ = Kind::Tabulated;
  f.ts_.assign(tset.begin(), tset.end());
  f.xs_.assign(xset.begin(), xset.end());
  if (f.ts_.front() != 0.0 || f.ts_.back() != 1.0)
    throw ConfigError("forcing table: t must span {0, ..., 1}");
  f.table_.resize(f.ts_.size() * f.xs_.size());
  for (std::size_t it = 0; it < f.ts_.size(); ++it) {
    for (std::size_t ix = 0; ix < f.xs_.size(); ++ix) {
      auto e = entries.find({f.ts_[it], f.xs_[ix]});
      if (e == entries.end())
        throw ConfigError("forcing table: grid is not rectangular (missing entry)");
      f.table_[it * f.xs_.size() + ix] = e->second;
    }
  }
  for (std::size_t ix = 0; ix < f.xs_.size(); ++ix) {
    double first = f.table_[ix];
    double last = f.table_[(f.ts_.size() - 1) * f.xs_.size() + ix];
    if (first != last)
      throw ConfigError("forcing table: rows at t=0 and t=1 must be identical");
  }
  for (double v : f.table_) f.amplitude_ = std::max(f.amplitude_, std::abs(v));
  return f;
}

ForcingField ForcingField::custom(std::function<double(double, double)> f) {
  ForcingField field;
  field.kind_ = Kind::Custom;
  field.custom_ = std::move(f);
  return field;
}

double ForcingField::operator()(double x, double t) const {
  if (kind_ == Kind::None) return 0.0;
  t -= std::floor(t);  // periodic extension
  if (kind_ == Kind::Custom) return custom_(x, t);
  if (kind_ == Kind::Sinusoidal) {
    return amplitude_ * std::sin(2.0 * std::numbers::pi * t) * shape_(x);
  }
  x = std::clamp(x, xs_.front(), xs_.back());
  auto find = [](const std::vector<double>& grid, double s) {
    auto it = std::upper_bound(grid.begin(), grid.end(), s);
    long i = std::distance(grid.begin(), it) - 1;
    return std::clamp<long>(i, 0, static_cast<long>(grid.size()) - 2);
  };
  long it_ = find(ts_, t);
  long ix_ = find(xs_, x);
  double ft = (t - ts_[it_]) / (ts_[it_ + 1] - ts_[it_]);
  double fx = (x - xs_[ix_]) / (xs_[ix_ + 1] - xs_[ix_]);
  auto v = [&](long a, long b) { return table_[a * static_cast<long>(xs_.size()) + b]; };
  return (1.0 - ft) * ((1.0 - fx) * v(it_, ix_) + fx * v(it_, ix_ + 1)) +
         ft * ((1.0 - fx) * v(it_ + 1, ix_) + fx * v(it_ + 1, ix_ + 1));
}

double ForcingField::sup_norm(int samples) const {
  if (kind_ == Kind::None) return 0.0;
  if (kind_ == Kind::Sinusoidal) {
    double m = 0.0;
    for (int i = 0; i <= samples; ++i) m = std::max(m, std::abs(shape_(i / double(samples))));
    return amplitude_ * m;
  }
  if (kind_ == Kind::Custom) {
    double m = 0.0;
    for (int i = 0; i <= samples; ++i) {
      for (int k = 0; k <= samples; ++k) {
        m = std::max(m, std::abs(custom_(i / double(samples), k / double(samples))));
      }
    }
    return m;
  }
  double m = 0.0;
  for (double v : table_) m = std::max(m, std::abs(v));
  return m;
}

PointField load_initial_csv(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw ConfigError("initial data: cannot open " + csv_path);
  std::vector<double> xs, rhos, vs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("x,rho,v", 0) == 0) continue;
    std::istringstream ls(line);
    double x, rho, v;
    char c1, c2;
    if (!(ls >> x >> c1 >> rho >> c2 >> v) || c1 != ',' || c2 != ',')
      throw ConfigError("initial data: malformed line " + std::to_string(lineno) + " in " +
                        csv_path);
    if (rho < 0.0)
      throw ConfigError("initial data: negative density at line " + std::to_string(lineno));
    xs.push_back(x);
    rhos.push_back(rho);
    vs.push_back(v);
  }
  if (xs.size() < 2) throw ConfigError("initial data: need at least two samples");
  if (!std::is_sorted(xs.begin(), xs.end()))
    throw ConfigError("initial data: x column must be sorted");

  return [xs = std::move(xs), rhos = std::move(rhos), vs = std::move(vs)](double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    long i = std::clamp<long>(std::distance(xs.begin(), it) - 1, 0,
                              static_cast<long>(xs.size()) - 2);
    double f = std::clamp((x - xs[i]) / (xs[i + 1] - xs[i]), 0.0, 1.0);
    double rho = (1.0 - f) * rhos[i] + f * rhos[i + 1];
    double v = (1.0 - f) * vs[i] + f * vs[i + 1];
    return GasState{rho, rho * v};
  };
}

}  // namespace euler1d
