#pragma once

#include <vector>

#include "euler1d/gas.hpp"
#include "euler1d/mesh.hpp"
#include "euler1d/riemann.hpp"

namespace euler1d {

/// Per-step data the stepper hands to the bound accumulators. For every new
/// cell it records the two half-cell constants feeding the average and the
/// pre-cutoff averaged value.
struct CellContribution {
  GasState left_in;   // constant on the left half (ghost mirror at j = 0)
  GasState right_in;  // constant on the right half (ghost mirror at j = 2nx)
  GasState average;   // pre-cutoff averaged state of the new cell
  double width = 0.0;
  int boundary = 0;  // -1 left wall half-cell, +1 right wall half-cell, 0 interior
};

struct StepArtifacts {
  double dt = 0.0;
  std::vector<double> interface_productions;  // per interface, walls included
  std::vector<CellContribution> cells;
  int cutoff_clamps = 0;
  int vacuum_truncations = 0;
  int negative_density_clamps = 0;
};

/// Running invariant-region functionals.
struct BoundState {
  long n = 0;
  double M_seed = 0.0;
  double M_n = 0.0;
  double l_shock = 0.0;
  double l_jensen = 0.0;
  double l_remainder = 0.0;
  double c_gamma_value = 0.0;
  double remainder_prefactor = 0.0;  // 1 + C_gamma alpha int rho_0
  std::vector<double> I_values;      // per-cell I_j, synchronized with the profile

  double l_total() const { return l_shock + l_jensen + l_remainder; }
};

BoundState init_bound_state(const SchemeConstants& c, const GasParams& gp,
                            const StaggeredProfile& initial, const GridSpec& g);

/// C_gamma = max{2^theta (theta+1), 2 gamma (gamma-1) / (gamma - 2 + (1/2)^(gamma-1))}.
double c_gamma(const GasParams& gp);

/// M_n = M (1 - dt/4)^n.
double decay_bound(double M, double dt, long n);

/// I_j = integral of zeta over [0, x_j] of the piecewise-constant field, with
/// the boundary half-cell variants at odd levels.
std::vector<double> i_functional(const StaggeredProfile& p, const SchemeConstants& c,
                                 const GasParams& gp, const GridSpec& g);

/// Second-order Taylor remainder of eta_* between u_center and u_half,
/// evaluated as the tau-integral of the Hessian quadratic form
/// (Gauss-Legendre order 16). Nonnegative by convexity.
double taylor_remainder(const GasState& u_half, const GasState& u_center, const GasParams& gp);

/// Fold one step's artifacts into the accumulators. Throws NumericalError if
/// any contribution is negative beyond -1e-12.
BoundState l_update(const BoundState& b, const StepArtifacts& art, const GasParams& gp);

struct CutoffResult {
  GasState u;
  bool vacuum = false;     // density below the (dx)^delta threshold
  bool clamped = false;    // z raised or w lowered
  bool inverted = false;   // clamped w fell below clamped z (cannot occur in-region)
};

/// The region cutoff: vacuum below (dx)^delta, otherwise clamp z from below
/// by -M_n - L + I and w from above by M_n + L + I and rebuild the state.
CutoffResult cutoff(const GasState& averaged, double M_n, double L, double I_j,
                    const GridSpec& g, const FanParams& fp, const GasParams& gp);

struct ContainmentReport {
  std::vector<double> slack_z, slack_w;
  double worst = 0.0;
  int worst_index = -1;
  double tol = 0.0;
  bool pass = false;
};

/// Per-cell slacks of the two containment inequalities; passes when the worst
/// slack is >= -tol. Uses bound.I_values unless recompute_I is set.
ContainmentReport containment_check(const StaggeredProfile& p, const BoundState& b, double tol,
                                    const SchemeConstants& c, const GasParams& gp,
                                    const GridSpec& g, bool recompute_I = false);

struct BoundaryCompatReport {
  double x0_margin = 0.0;  // 2 M_n, nonnegative whenever M_n >= 0
  double x1_value = 0.0;   // 2 * integral of zeta over [0, 1]; must be <= tol
  bool pass_x0 = false;
  bool pass_x1 = false;
};

BoundaryCompatReport boundary_compat_check(const StaggeredProfile& p, const BoundState& b,
                                           const SchemeConstants& c, const GasParams& gp,
                                           const GridSpec& g, double tol = 1e-9);

struct EnergyMassReport {
  std::vector<double> mass, energy, forcing_power;  // forcing_power[n] = int F m dx at level n
  double mass_drift = 0.0;
  double max_inequality_violation = 0.0;
  double step_tolerance = 0.0;
  bool inequality_pass = false;
  double envelope_constant = 0.0;  // Gronwall envelope C exp(kappa (theta M)^(1/theta) t)
  double envelope_max_ratio = 0.0;
  bool envelope_pass = false;
  double jensen_accumulated = 0.0;
  double jensen_bound = 0.0;
  bool jensen_pass = false;
};

/// Checks the discrete energy inequality E_{n+1} <= E_n + dt int F m dx + tol,
/// the Gronwall envelope, and the entropy-budget bound on the accumulated
/// Jensen gaps. The series are indexed by time level.
EnergyMassReport energy_mass_report(const std::vector<double>& mass,
                                    const std::vector<double>& energy,
                                    const std::vector<double>& forcing_power,
                                    double jensen_accumulated, const SchemeConstants& c,
                                    const GasParams& gp, const GridSpec& g,
                                    double step_tol_coeff = 1.0);

struct DecayReport {
  double min_g2 = 0.0;
  double max_g2 = 0.0;
  double quantitative_bound = 0.0;  // -1/2 M^(1 + 2(gamma-1)/(gamma+1) - eps)
  double fraction_quantitative = 0.0;
  int branch_high = 0;  // samples with rho > (rho_bar M / 3)^(1/(theta+1))
  int branch_low = 0;
  bool all_negative = false;
};

/// Samples the upper region boundary (w-tilde = M) across both density
/// branches and reports the sign and size of g2 there. Forcing enters at its
/// worst-case amplitude +kappa with zero moment term.
DecayReport decay_diagnostic(const SchemeConstants& c, const GasParams& gp, int samples);

/// Synthetic piecewise-constant data on one cell for the averaged-bound check:
/// w values below the affine bound A(x) = A_center + A_slope (x - x_center).
struct AveragedBoundData {
  double dx = 0.0;
  std::vector<double> widths;  // sums to 2 dx
  std::vector<double> rho, w;  // per piece
  double A_center = 0.0;
  double A_slope = 0.0;
};

struct AveragedBoundResult {
  bool applicable = false;  // preconditions held
  bool pass = false;
  double slack = 0.0;  // A_bar + tol - w(E(u))
};

/// Checks w(E(u)) <= A_bar + tol_coeff * dx^1.1 for admissible data
/// (average density >= dx^delta, w <= A pointwise); data violating the
/// preconditions is reported as not applicable rather than failed.
AveragedBoundResult averaged_bound_check(const AveragedBoundData& data, const FanParams& fp,
                                  const GasParams& gp, double tol_coeff = 10.0);

struct PeriodEndReport {
  bool pass = false;
  double worst_z_margin = 0.0;
  double worst_w_margin = 0.0;
};

/// End-of-period containment with the fixed constants M + M/10:
/// -M - M/10 + I_j <= z(u_j) and w(u_j) <= M + I_j + M/10.
PeriodEndReport period_end_check(const StaggeredProfile& p, const BoundState& b,
                            const SchemeConstants& c, const GasParams& gp, const GridSpec& g);

}  // namespace euler1d
