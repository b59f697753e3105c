#pragma once

#include <array>

namespace euler1d {

/// Densities below this floor are treated as exact vacuum in every division;
/// prevents NaN propagation without changing results above the threshold.
inline constexpr double kRhoFloor = 1e-300;

/// Equation-of-state parameters for a barotropic gas with p(rho) = rho^gamma / gamma.
struct GasParams {
  double gamma;
  double theta;  // (gamma - 1) / 2

  explicit GasParams(double gamma_);
};

/// Conserved pair (density, momentum) at a point or cell.
/// Invariants: rho >= 0, and rho == 0 implies mom == 0.
struct GasState {
  double rho = 0.0;
  double mom = 0.0;
};

bool is_valid(const GasState& u);

/// Riemann invariants; w >= z is equivalent to rho >= 0.
struct RiemannPair {
  double z = 0.0;
  double w = 0.0;
};

/// Scale parameters of the scheme. K and alpha are derived from (M, eps) and
/// the initial mass/energy; kappa bounds the forcing amplitude.
struct SchemeConstants {
  double M = 0.0;
  double eps = 0.0;
  double kappa = 0.0;
  double K = 0.0;
  double alpha = 0.0;
  double rho_bar = 0.0;
  double eta_bar = 0.0;
};

/// rho^e for rho >= 0, e > 0, with the vacuum floor; never sees a negative base.
double pow_rho(double rho, double e);

/// Velocity m/rho with the vacuum convention v = 0 at rho below the floor.
double velocity(const GasState& u);

/// p(rho) = rho^gamma / gamma. Throws std::domain_error for rho < 0.
double pressure(double rho, const GasParams& gp);

/// Momentum flux m^2/rho + p(rho) with the vacuum convention.
double momentum_flux(const GasState& u, const GasParams& gp);

/// (z, w) of a state; vacuum maps to (0, 0).
RiemannPair invariants_of(const GasState& u, const GasParams& gp);

/// State with the given invariants. Throws std::domain_error when w < z.
GasState state_of(const RiemannPair& pair, const GasParams& gp);

/// Mechanical energy density eta_*(u) = m^2/(2 rho) + rho^gamma / (gamma (gamma-1)).
double eta_star(const GasState& u, const GasParams& gp);

/// Flux of eta_*: q_*(u) = m (m^2/(2 rho^2) + rho^(gamma-1)/(gamma-1)).
double q_star(const GasState& u, const GasParams& gp);

/// Gradient of eta_* in (rho, m), with vacuum guards.
std::array<double, 2> eta_star_grad(const GasState& u, const GasParams& gp);

/// delta^T Hess(eta_*)(u) delta, evaluated in the cancellation-free form
/// (m d_rho - rho d_m)^2 / rho^3 + d_rho^2 rho^(gamma-2); 0 at vacuum.
double eta_star_quadratic_form(const GasState& u, const GasState& delta, const GasParams& gp);

/// zeta(u) = eta_*(u) - alpha rho + K.
double zeta(const GasState& u, const SchemeConstants& c, const GasParams& gp);

/// V(u) = q_*(u) - alpha m.
double v_weight(const GasState& u, const SchemeConstants& c, const GasParams& gp);

/// Characteristic speeds (v - rho^theta, v + rho^theta); (0, 0) at vacuum.
std::array<double, 2> char_speeds(const GasState& u, const GasParams& gp);

/// Source terms of the shifted diagonal system, evaluated in the
/// (rho, v) parametrization: g1 uses -K lambda1 and g2 flips the sign of the
/// rho^(gamma+theta) and rho^(theta+1) v^2 terms and of alpha rho^(theta+1).
/// f_moment stands for the accumulated term int_0^x F(y,t) m(y,t) dy.
double g1_rate(double rho, double v, const SchemeConstants& c, const GasParams& gp,
               double f_at_point, double f_moment);
double g2_rate(double rho, double v, const SchemeConstants& c, const GasParams& gp,
               double f_at_point, double f_moment);

/// (g1, g2) at a state, with the vacuum convention for v.
std::array<double, 2> g_sources(const GasState& u, const SchemeConstants& c, const GasParams& gp,
                                double f_at_point, double f_moment);

/// K = M^(2(gamma-1)/(gamma+1) - eps) and alpha = (K + eta_bar + 1) / rho_bar.
/// Throws ConfigError when eps is outside (0, 2(gamma-1)/(gamma+1)) or the
/// scale parameters are non-positive.
SchemeConstants derive_constants(double M, double eps, double rho_bar, double eta_bar,
                                 const GasParams& gp, double kappa = 0.0);

}  // namespace euler1d
