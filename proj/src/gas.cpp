#include "euler1d/gas.hpp"

#include <cmath>
#include <stdexcept>

#include "euler1d/errors.hpp"
#include "euler1d/log.hpp"

namespace euler1d {

GasParams::GasParams(double gamma_) : gamma(gamma_), theta((gamma_ - 1.0) / 2.0) {
  // The guaranteed range of the bound and decay machinery is (1, 5/3]; the
  // gas algebra itself is well defined for theta in (0, 1), so larger
  // exponents (notably gamma = 2) are accepted with a warning.
  if (!(gamma_ > 1.0) || !(gamma_ < 3.0))
    throw ConfigError("gamma must lie in (1, 3), got " + std::to_string(gamma_));
  if (gamma_ > 5.0 / 3.0)
    log::debug("gamma = %.6g is outside the usual-gas range (1, 5/3]", gamma_);
}

bool is_valid(const GasState& u) {
  if (!std::isfinite(u.rho) || !std::isfinite(u.mom)) return false;
  if (u.rho < 0.0) return false;
  if (u.rho == 0.0 && u.mom != 0.0) return false;
  return true;
}

double pow_rho(double rho, double e) {
  if (rho <= kRhoFloor) return 0.0;
  return std::pow(rho, e);
}

double velocity(const GasState& u) {
  if (u.rho <= kRhoFloor) return 0.0;
  return u.mom / u.rho;
}

double pressure(double rho, const GasParams& gp) {
  if (rho < 0.0) throw std::domain_error("pressure: negative density");
  return pow_rho(rho, gp.gamma) / gp.gamma;
}

double momentum_flux(const GasState& u, const GasParams& gp) {
  double kinetic = u.rho <= kRhoFloor ? 0.0 : u.mom * u.mom / u.rho;
  return kinetic + pressure(u.rho, gp);
}

RiemannPair invariants_of(const GasState& u, const GasParams& gp) {
  if (u.rho <= kRhoFloor) return {0.0, 0.0};
  double v = u.mom / u.rho;
  double s = pow_rho(u.rho, gp.theta) / gp.theta;
  return {v - s, v + s};
}

GasState state_of(const RiemannPair& pair, const GasParams& gp) {
  if (pair.w < pair.z) throw std::domain_error("state_of: w < z has no gas state");
  double half = gp.theta * (pair.w - pair.z) / 2.0;
  if (half <= 0.0) return {0.0, 0.0};
  double rho = std::pow(half, 1.0 / gp.theta);
  double v = (pair.w + pair.z) / 2.0;
  return {rho, rho * v};
}

double eta_star(const GasState& u, const GasParams& gp) {
  double kinetic = u.rho <= kRhoFloor ? 0.0 : 0.5 * u.mom * u.mom / u.rho;
  return kinetic + pow_rho(u.rho, gp.gamma) / (gp.gamma * (gp.gamma - 1.0));
}

double q_star(const GasState& u, const GasParams& gp) {
  if (u.rho <= kRhoFloor) return 0.0;
  double v = u.mom / u.rho;
  return u.mom * (0.5 * v * v + pow_rho(u.rho, gp.gamma - 1.0) / (gp.gamma - 1.0));
}

std::array<double, 2> eta_star_grad(const GasState& u, const GasParams& gp) {
  if (u.rho <= kRhoFloor) return {0.0, 0.0};
  double v = u.mom / u.rho;
  return {-0.5 * v * v + pow_rho(u.rho, gp.gamma - 1.0) / (gp.gamma - 1.0), v};
}

double eta_star_quadratic_form(const GasState& u, const GasState& delta, const GasParams& gp) {
  if (u.rho <= kRhoFloor) return 0.0;
  double a = u.mom * delta.rho - u.rho * delta.mom;
  return a * a / (u.rho * u.rho * u.rho) +
         delta.rho * delta.rho * pow_rho(u.rho, gp.gamma - 2.0);
}

double zeta(const GasState& u, const SchemeConstants& c, const GasParams& gp) {
  return eta_star(u, gp) - c.alpha * u.rho + c.K;
}

double v_weight(const GasState& u, const SchemeConstants& c, const GasParams& gp) {
  return q_star(u, gp) - c.alpha * u.mom;
}

std::array<double, 2> char_speeds(const GasState& u, const GasParams& gp) {
  if (u.rho <= kRhoFloor) return {0.0, 0.0};
  double v = u.mom / u.rho;
  double s = pow_rho(u.rho, gp.theta);
  return {v - s, v + s};
}

double g1_rate(double rho, double v, const SchemeConstants& c, const GasParams& gp,
               double f_at_point, double f_moment) {
  double lambda1 = rho <= kRhoFloor ? v : v - pow_rho(rho, gp.theta);
  return -c.K * lambda1 + pow_rho(rho, gp.gamma + gp.theta) / (gp.gamma * (gp.gamma - 1.0)) +
         pow_rho(rho, gp.gamma) * v / gp.gamma + 0.5 * pow_rho(rho, gp.theta + 1.0) * v * v -
         c.alpha * pow_rho(rho, gp.theta + 1.0) + f_at_point - f_moment;
}

double g2_rate(double rho, double v, const SchemeConstants& c, const GasParams& gp,
               double f_at_point, double f_moment) {
  double lambda2 = rho <= kRhoFloor ? v : v + pow_rho(rho, gp.theta);
  return -c.K * lambda2 - pow_rho(rho, gp.gamma + gp.theta) / (gp.gamma * (gp.gamma - 1.0)) +
         pow_rho(rho, gp.gamma) * v / gp.gamma - 0.5 * pow_rho(rho, gp.theta + 1.0) * v * v +
         c.alpha * pow_rho(rho, gp.theta + 1.0) + f_at_point - f_moment;
}

std::array<double, 2> g_sources(const GasState& u, const SchemeConstants& c, const GasParams& gp,
                                double f_at_point, double f_moment) {
  double v = velocity(u);
  return {g1_rate(u.rho, v, c, gp, f_at_point, f_moment),
          g2_rate(u.rho, v, c, gp, f_at_point, f_moment)};
}

SchemeConstants derive_constants(double M, double eps, double rho_bar, double eta_bar,
                                 const GasParams& gp, double kappa) {
  double eps_max = 2.0 * (gp.gamma - 1.0) / (gp.gamma + 1.0);
  if (!(M > 0.0)) throw ConfigError("derive_constants: M must be positive");
  if (!(eps > 0.0) || !(eps < eps_max))
    throw ConfigError("derive_constants: eps must lie in (0, " + std::to_string(eps_max) + ")");
  if (!(rho_bar > 0.0)) throw ConfigError("derive_constants: rho_bar must be positive");
  if (eta_bar < 0.0) throw ConfigError("derive_constants: eta_bar must be nonnegative");
  if (kappa < 0.0) throw ConfigError("derive_constants: kappa must be nonnegative");
  SchemeConstants c;
  c.M = M;
  c.eps = eps;
  c.kappa = kappa;
  c.rho_bar = rho_bar;
  c.eta_bar = eta_bar;
  c.K = std::pow(M, eps_max - eps);
  c.alpha = (c.K + eta_bar + 1.0) / rho_bar;
  return c;
}

}  // namespace euler1d
