#pragma once

#include <functional>
#include <string>
#include <vector>

#include "euler1d/gas.hpp"

namespace euler1d {

/// Staggered space-time grid on [0,1] x [0,1]. dx = 1/(2 Nx) and the time
/// step is locked to dx/dt = floor(2M) + 1, so Nt = Nx (floor(2M)+1) cells of
/// size dt tile half the period and 2 Nt steps span it exactly.
struct GridSpec {
  int nx = 0;       // half cell-count, dx = 1/(2 nx)
  int cfl_den = 1;  // floor(2M) + 1
  long nt = 0;      // nx * cfl_den
  double dx = 0.0;
  double dt = 0.0;

  double x(long j) const { return static_cast<double>(j) * dx; }
  double t(long n) const { return static_cast<double>(n) * dt; }
  long steps_per_period() const { return 2 * nt; }
};

GridSpec build_grid(int nx, double M);

/// Discrete solution at one time level on the parity-alternating mesh.
/// Cells are stored in ascending j over J_n = {k : k + n odd}: at even n the
/// nx cells j = 1, 3, ..., 2nx-1 (all full width 2dx), at odd n the nx+1
/// cells j = 0, 2, ..., 2nx where j = 0 and j = 2nx are boundary half-cells.
struct StaggeredProfile {
  long n = 0;
  int nx = 0;
  std::vector<GasState> cells;

  int parity() const { return static_cast<int>(n & 1); }
  int size() const { return parity() == 0 ? nx : nx + 1; }
  int j_of(int i) const { return parity() == 0 ? 2 * i + 1 : 2 * i; }
  int index_of_j(int j) const;  // throws std::out_of_range for j not in J_n
  bool is_boundary(int i) const { return parity() == 1 && (i == 0 || i == nx); }
  double width(int i, const GridSpec& g) const { return is_boundary(i) ? g.dx : 2.0 * g.dx; }

  static StaggeredProfile zeros(long n, int nx);
};

using PointField = std::function<GasState(double)>;

/// Cell average E_j^n of a pointwise field: mean over [x_{j-1}, x_{j+1}] for
/// interior cells, over the boundary half-cell for j in {0, 2nx} at odd n.
/// Gauss-Legendre per half-cell; exact for data constant on half-cells.
GasState cell_average(const PointField& field, int j, long n, const GridSpec& g);

/// Projection of initial data onto the level-0 profile.
StaggeredProfile project_initial(const PointField& u0, const GridSpec& g);

/// Piecewise-constant reconstruction of a profile; intervals tile [0, 1).
struct PiecewiseField {
  std::vector<double> edges;    // size() = values.size() + 1, edges.front() = 0
  std::vector<GasState> values;

  const GasState& at(double x) const;
};

PiecewiseField piecewise_reconstruct(const StaggeredProfile& p, const GridSpec& g);

/// Time-periodic outer force on [0,1] x [0,1]; evaluation wraps t modulo 1.
class ForcingField {
 public:
  enum class Kind { None, Sinusoidal, Tabulated, Custom };

  ForcingField() = default;

  static ForcingField none();
  /// kappa sin(2 pi t) shape(x); the default shape sin(pi x) has unit sup-norm.
  static ForcingField sinusoidal(double kappa, std::function<double(double)> shape = {});
  /// Bilinear interpolation of a rectangular table loaded from CSV "t,x,F";
  /// requires t-rows at 0 and 1 with identical values. Throws ConfigError.
  static ForcingField tabulated(const std::string& csv_path);
  /// Arbitrary evaluator (manufactured solutions in tests); the caller is
  /// responsible for 1-periodicity in t.
  static ForcingField custom(std::function<double(double, double)> f);

  double operator()(double x, double t) const;
  Kind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  /// Sampled sup-norm estimate (exact for the builtin family).
  double sup_norm(int samples = 64) const;

 private:
  Kind kind_ = Kind::None;
  double amplitude_ = 0.0;
  std::function<double(double)> shape_;
  std::function<double(double, double)> custom_;
  std::vector<double> ts_, xs_;
  std::vector<double> table_;  // row-major [t][x]
};

/// Initial data loaded from CSV "x,rho,v" as a piecewise-linear interpolant.
/// Throws ConfigError on malformed input or negative density.
PointField load_initial_csv(const std::string& csv_path);

}  // namespace euler1d
