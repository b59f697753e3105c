#include "euler1d/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "euler1d/errors.hpp"

namespace euler1d {

void FanParams::validate(const GasParams& gp) const {
  if (!(alpha_fan > 0.5) || !(alpha_fan < 1.0))
    throw ConfigError("fan alpha must lie in (1/2, 1)");
  if (beta < 0.0) throw ConfigError("fan beta must be nonnegative");
  if (!(0.5 + beta / 2.0 < alpha_fan) || !(alpha_fan < 1.0 - 2.0 * beta))
    throw ConfigError("fan parameters must satisfy 1/2 + beta/2 < alpha < 1 - 2 beta");
  if (!(beta < 2.0 / (gp.gamma + 5.0))) throw ConfigError("fan beta must be < 2/(gamma+5)");
  if (!((9.0 - 3.0 * gp.gamma) * beta / 2.0 < alpha_fan))
    throw ConfigError("fan parameters must satisfy (9-3 gamma) beta/2 < alpha");
  // The upper bound 1/(2 theta) is meaningful only while 2 theta < 1
  // (gamma < 2); beyond that the interval is empty and only delta > 1 is
  // required for the vacuum threshold to be o(dx).
  if (!(delta > 1.0)) throw ConfigError("vacuum exponent delta must be > 1");
  if (2.0 * gp.theta < 1.0 && !(delta < 1.0 / (2.0 * gp.theta)))
    throw ConfigError("vacuum exponent delta must lie in (1, 1/(2 theta))");
}

double shock_speed_fn(double rho, double rho0, const GasParams& gp) {
  if (!(rho0 > 0.0)) throw std::domain_error("shock_speed_fn: rho0 must be positive");
  if (rho < 0.0) throw std::domain_error("shock_speed_fn: negative density");
  if (rho == rho0) return pow_rho(rho0, gp.theta);
  double num = rho * (pressure(rho, gp) - pressure(rho0, gp));
  double den = rho0 * (rho - rho0);
  return std::sqrt(num / den);
}

namespace {

// Velocity on the 1-wave curve through uL at density rho: rarefaction branch
// (w constant) below rho_L, Hugoniot branch above.
double wave1_velocity(double rho, const GasState& uL, const GasParams& gp) {
  double vL = velocity(uL);
  if (rho <= uL.rho) {
    return vL + (pow_rho(uL.rho, gp.theta) - pow_rho(rho, gp.theta)) / gp.theta;
  }
  double jump = (pressure(rho, gp) - pressure(uL.rho, gp)) * (rho - uL.rho) / (rho * uL.rho);
  return vL - std::sqrt(jump);
}

// Velocity on the 2-wave curve through uR (z constant / Hugoniot).
double wave2_velocity(double rho, const GasState& uR, const GasParams& gp) {
  double vR = velocity(uR);
  if (rho <= uR.rho) {
    return vR - (pow_rho(uR.rho, gp.theta) - pow_rho(rho, gp.theta)) / gp.theta;
  }
  double jump = (pressure(rho, gp) - pressure(uR.rho, gp)) * (rho - uR.rho) / (rho * uR.rho);
  return vR + std::sqrt(jump);
}

Wave make_wave1(const GasState& uL, const GasState& uM, const GasParams& gp) {
  Wave w;
  w.strength = std::abs(uM.rho - uL.rho);
  if (uM.rho > uL.rho) {
    w.kind = WaveKind::Shock1;
    double s = velocity(uL) - shock_speed_fn(uM.rho, uL.rho, gp);
    w.speed_lo = w.speed_hi = s;
  } else {
    w.kind = WaveKind::Rarefaction1;
    w.speed_lo = char_speeds(uL, gp)[0];
    w.speed_hi = uM.rho <= kRhoFloor ? invariants_of(uL, gp).w : char_speeds(uM, gp)[0];
  }
  return w;
}

Wave make_wave2(const GasState& uM, const GasState& uR, const GasParams& gp) {
  Wave w;
  w.strength = std::abs(uM.rho - uR.rho);
  if (uM.rho > uR.rho) {
    w.kind = WaveKind::Shock2;
    double s = velocity(uR) + shock_speed_fn(uM.rho, uR.rho, gp);
    w.speed_lo = w.speed_hi = s;
  } else {
    w.kind = WaveKind::Rarefaction2;
    w.speed_lo = uM.rho <= kRhoFloor ? invariants_of(uR, gp).z : char_speeds(uM, gp)[1];
    w.speed_hi = char_speeds(uR, gp)[1];
  }
  return w;
}

}  // namespace

RiemannSolution solve_riemann(const GasState& uL, const GasState& uR, const GasParams& gp,
                              double tol, int max_iter) {
  if (!is_valid(uL) || !is_valid(uR))
    throw std::domain_error("solve_riemann: invalid input state");

  RiemannSolution sol;
  sol.left = uL;
  sol.right = uR;

  const bool left_vac = uL.rho <= kRhoFloor;
  const bool right_vac = uR.rho <= kRhoFloor;
  const RiemannPair invL = invariants_of(uL, gp);
  const RiemannPair invR = invariants_of(uR, gp);

  // Vacuum middle: the wave curves do not intersect at positive density.
  if (left_vac || right_vac || invL.w <= invR.z) {
    sol.vacuum_middle = true;
    sol.middle = {0.0, 0.0};
    if (left_vac) {
      sol.wave1 = {WaveKind::Vacuum, 0.0, 0.0, 0.0};
    } else {
      sol.wave1 = {WaveKind::Rarefaction1, char_speeds(uL, gp)[0], invL.w, uL.rho};
    }
    if (right_vac) {
      sol.wave2 = {WaveKind::Vacuum, 0.0, 0.0, 0.0};
    } else {
      sol.wave2 = {WaveKind::Rarefaction2, invR.z, char_speeds(uR, gp)[1], uR.rho};
    }
    return sol;
  }

  const double scale = std::max({1.0, std::abs(invL.w), std::abs(invR.z)});
  const double tol_eff = tol * scale;
  auto mismatch = [&](double rho) {
    return wave1_velocity(rho, uL, gp) - wave2_velocity(rho, uR, gp);
  };

  // mismatch is strictly decreasing with mismatch(0+) = w_L - z_R > 0; expand
  // the upper end until it brackets the root.
  double lo = 0.0, f_lo = invL.w - invR.z;
  double hi = std::max(uL.rho, uR.rho);
  double f_hi = mismatch(hi);
  if (f_hi == 0.0) {  // exact root at the seed (identity data and pure waves)
    double v_m = wave1_velocity(hi, uL, gp);
    sol.middle = {hi, hi * v_m};
    sol.wave1 = make_wave1(uL, sol.middle, gp);
    sol.wave2 = make_wave2(sol.middle, uR, gp);
    return sol;
  }
  int expand = 0;
  while (f_hi > 0.0 && expand < 200) {
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = mismatch(hi);
    ++expand;
  }
  if (f_hi > 0.0) {
    std::ostringstream os;
    os << "solve_riemann: failed to bracket the middle state; bracket [" << lo << ", " << hi
       << "], mismatch [" << f_lo << ", " << f_hi << "]";
    throw NumericalError(os.str());
  }

  double rho_m = 0.5 * (lo + hi);
  double f_m = mismatch(rho_m);
  int it = 0;
  for (; it < max_iter && std::abs(f_m) > tol_eff; ++it) {
    if (f_m > 0.0) {
      lo = rho_m;
      f_lo = f_m;
    } else {
      hi = rho_m;
      f_hi = f_m;
    }
    if (hi - lo <= 1e-17 * (1.0 + hi)) break;
    // Secant proposal, kept only if it lands safely inside the bracket.
    double cand = rho_m - f_m * (hi - lo) / (f_hi - f_lo);
    double mid = 0.5 * (lo + hi);
    if (!(cand > lo + 0.1 * (hi - lo)) || !(cand < hi - 0.1 * (hi - lo))) cand = mid;
    rho_m = cand;
    f_m = mismatch(rho_m);
  }
  if (std::abs(f_m) > tol_eff && hi - lo > 1e-17 * (1.0 + hi)) {
    std::ostringstream os;
    os << "solve_riemann: no convergence after " << max_iter << " iterations; bracket [" << lo
       << ", " << hi << "], mismatch " << f_m;
    throw NumericalError(os.str());
  }

  double v_m = 0.5 * (wave1_velocity(rho_m, uL, gp) + wave2_velocity(rho_m, uR, gp));
  sol.middle = {rho_m, rho_m * v_m};
  sol.iterations = it;
  sol.v_mismatch = f_m;
  sol.wave1 = make_wave1(uL, sol.middle, gp);
  sol.wave2 = make_wave2(sol.middle, uR, gp);
  return sol;
}

double entropy_production(double sigma, const GasState& uL, const GasState& uR,
                          const GasParams& gp) {
  return sigma * (eta_star(uR, gp) - eta_star(uL, gp)) - (q_star(uR, gp) - q_star(uL, gp));
}

double interface_entropy_production(const GasState& uL, const GasState& uR, const GasParams& gp,
                                    int side) {
  if (uL.rho <= kRhoFloor && uR.rho <= kRhoFloor) return 0.0;
  // The middle-state tolerance leaks linearly into sigma [eta] - [q] for
  // near-degenerate shocks, so solve tight and drop waves whose strength is
  // below the noise floor (their physical production is cubic in strength).
  RiemannSolution sol = solve_riemann(uL, uR, gp, 1e-15);
  const double floor = 1e-11 * std::max({1.0, uL.rho, uR.rho});
  auto keep = [side](double speed) {
    if (side > 0) return speed > 0.0;
    if (side < 0) return speed < 0.0;
    return true;
  };
  double total = 0.0;
  if (sol.wave1.kind == WaveKind::Shock1 && sol.wave1.strength > floor &&
      keep(sol.wave1.speed_lo)) {
    total += entropy_production(sol.wave1.speed_lo, sol.left, sol.middle, gp);
  }
  if (sol.wave2.kind == WaveKind::Shock2 && sol.wave2.strength > floor &&
      keep(sol.wave2.speed_lo)) {
    total += entropy_production(sol.wave2.speed_lo, sol.middle, sol.right, gp);
  }
  return total;
}

FanPartition fan_partition(const GasState& uL, double zM, double dx, const FanParams& fp,
                           const GasParams& gp) {
  if (uL.rho <= kRhoFloor) throw std::domain_error("fan_partition: left state is vacuum");
  RiemannPair invL = invariants_of(uL, gp);
  if (zM < invL.z) throw std::domain_error("fan_partition: zM below z(uL)");
  if (zM > invL.w) throw std::domain_error("fan_partition: zM beyond the vacuum edge w(uL)");

  double h = std::pow(dx, fp.alpha_fan);
  double q = (zM - invL.z) / h;
  int p = std::max(static_cast<int>(std::floor(q + 1e-9)) + 1, 2);

  FanPartition fan;
  fan.p = p;
  fan.w_left = invL.w;
  fan.z_stars.resize(p);
  for (int i = 0; i + 1 < p; ++i) fan.z_stars[i] = invL.z + i * h;
  fan.z_stars[p - 1] = zM;

  auto rho_of = [&](double z) { return state_of({z, invL.w}, gp).rho; };
  fan.speeds.resize(p - 1);
  for (int i = 0; i + 1 < p; ++i) {
    double v_i = 0.5 * (invL.w + fan.z_stars[i]);
    double r_i = rho_of(fan.z_stars[i]);
    double r_next = rho_of(fan.z_stars[i + 1]);
    fan.speeds[i] = v_i - shock_speed_fn(r_next, r_i, gp);
  }
  return fan;
}

namespace {

GasState fan1_state(double xi, double wL, const GasParams& gp) {
  double s = gp.theta * (wL - xi) / (gp.theta + 1.0);
  if (s <= 0.0) return {0.0, 0.0};
  double rho = std::pow(s, 1.0 / gp.theta);
  return {rho, rho * (xi + s)};
}

GasState fan2_state(double xi, double zR, const GasParams& gp) {
  double s = gp.theta * (xi - zR) / (gp.theta + 1.0);
  if (s <= 0.0) return {0.0, 0.0};
  double rho = std::pow(s, 1.0 / gp.theta);
  return {rho, rho * (xi - s)};
}

}  // namespace

GasState sample_riemann(const RiemannSolution& sol, double xi, const GasParams& gp) {
  // 1-wave region.
  if (sol.wave1.kind == WaveKind::Shock1) {
    if (xi < sol.wave1.speed_lo) return sol.left;
  } else if (sol.wave1.kind == WaveKind::Rarefaction1) {
    if (xi < sol.wave1.speed_lo) return sol.left;
    if (xi <= sol.wave1.speed_hi) return fan1_state(xi, invariants_of(sol.left, gp).w, gp);
  } else {  // vacuum on the left
    if (sol.wave2.kind == WaveKind::Vacuum || xi < sol.wave2.speed_lo) return {0.0, 0.0};
  }
  // 2-wave region.
  if (sol.wave2.kind == WaveKind::Shock2) {
    if (xi > sol.wave2.speed_lo) return sol.right;
  } else if (sol.wave2.kind == WaveKind::Rarefaction2) {
    if (xi > sol.wave2.speed_hi) return sol.right;
    if (xi >= sol.wave2.speed_lo) return fan2_state(xi, invariants_of(sol.right, gp).z, gp);
  } else {  // vacuum on the right
    if (sol.wave1.kind == WaveKind::Vacuum ||
        (sol.wave1.kind == WaveKind::Shock1 ? xi >= sol.wave1.speed_lo
                                            : xi > sol.wave1.speed_hi))
      return {0.0, 0.0};
  }
  return sol.middle;
}

}  // namespace euler1d
