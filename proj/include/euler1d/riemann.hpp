#pragma once

#include <vector>

#include "euler1d/gas.hpp"

namespace euler1d {

enum class WaveKind { Rarefaction1, Shock1, Rarefaction2, Shock2, Vacuum };

/// One wave of a Riemann solution. Shocks carry a single speed
/// (speed_lo == speed_hi); rarefactions carry the fan range.
struct Wave {
  WaveKind kind = WaveKind::Vacuum;
  double speed_lo = 0.0;
  double speed_hi = 0.0;
  double strength = 0.0;  // |rho jump| across the wave
};

struct RiemannSolution {
  GasState left, middle, right;
  Wave wave1, wave2;
  bool vacuum_middle = false;
  int iterations = 0;
  double v_mismatch = 0.0;  // residual of the middle-state velocity match
};

/// Parameters of the rarefaction-fan partition and the vacuum threshold
/// exponent delta (cells with averaged density below dx^delta are zeroed).
struct FanParams {
  double alpha_fan = 0.75;
  double beta = 0.05;
  double delta = 1.25;

  void validate(const GasParams& gp) const;  // throws ConfigError
};

struct FanPartition {
  int p = 0;
  std::vector<double> z_stars;  // p values, z_stars[0] = z_L, z_stars[p-1] = z_M
  std::vector<double> speeds;   // p-1 separating ray slopes, strictly increasing
  double w_left = 0.0;
};

/// S(rho, rho0) of the shock-speed relation; continuous across rho == rho0
/// where it equals sqrt(p'(rho0)) = rho0^theta. Throws for rho0 <= 0.
double shock_speed_fn(double rho, double rho0, const GasParams& gp);

/// Exact solution of the Riemann problem. The middle state is found by a
/// bracketed bisection on the velocity match across the two wave curves,
/// refined by secant steps. Detects vacuum formation (w_L <= z_R).
RiemannSolution solve_riemann(const GasState& uL, const GasState& uR, const GasParams& gp,
                              double tol = 1e-12, int max_iter = 200);

/// sigma [eta_*] - [q_*] across a jump from uL to uR moving at speed sigma.
double entropy_production(double sigma, const GasState& uL, const GasState& uR,
                          const GasParams& gp);

/// Total entropy production of the interface Riemann problem (uL, uR), summed
/// over its shock waves. side > 0 keeps only right-moving waves, side < 0 only
/// left-moving ones (used at reflecting walls).
double interface_entropy_production(const GasState& uL, const GasState& uR, const GasParams& gp,
                                    int side = 0);

/// Piecewise-constant fan approximation of the 1-rarefaction from uL to the
/// invariant value zM >= z(uL): p = max(floor((zM-zL)/dx^alpha) + 1, 2) states
/// with w = w_L, separated by the rays v(z_i) - S(rho(z_{i+1}), rho(z_i)).
FanPartition fan_partition(const GasState& uL, double zM, double dx, const FanParams& fp,
                           const GasParams& gp);

/// State of the self-similar solution on the ray xi = x/t.
GasState sample_riemann(const RiemannSolution& sol, double xi, const GasParams& gp);

}  // namespace euler1d
