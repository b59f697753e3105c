#pragma once

#include <array>
#include <vector>

#include "euler1d/bounds.hpp"
#include "euler1d/gas.hpp"
#include "euler1d/mesh.hpp"
#include "euler1d/riemann.hpp"

namespace euler1d {

enum class StepMode { Raw, CutoffStabilized };

struct StepperConfig {
  GasParams gas;
  GridSpec grid;
  SchemeConstants constants;
  ForcingField forcing;
  FanParams fan;
  StepMode mode = StepMode::Raw;
  /// Collect per-step artifacts and maintain the BoundState. Forced on in
  /// cutoff-stabilized mode; may be disabled for raw-mode inner loops.
  bool track_bounds = true;
  /// Abort the run after this many negative-density clamps.
  int max_negative_clamps = 100;

  StepperConfig(const GasParams& gas_, const GridSpec& grid_, const SchemeConstants& c,
                ForcingField forcing_ = ForcingField::none())
      : gas(gas_), grid(grid_), constants(c), forcing(std::move(forcing_)) {}
};

/// xi_k = (m_{k+2} + m_k) dx - (2 dt / 3) {flux_m(u_{k+2}) - flux_m(u_k)};
/// requires k and k+2 in J_n.
double xi_k(const StaggeredProfile& p, int k, const GasParams& gp, const GridSpec& g);

/// The per-cell source rates (G_j, H_j): the diagonal sources evaluated at
/// u_j with the point force F(x_j, t_n) and the accumulated moment sum
/// over F(x_{k+1}, t_n) xi_k for k in J_n, k+2 <= j.
std::array<double, 2> gh_terms(const StaggeredProfile& p, int j, double t_n,
                               const ForcingField& forcing, const SchemeConstants& c,
                               const GasParams& gp, const GridSpec& g);

/// The second-order correction pair (R_j, S_j) of the recurrence.
std::array<double, 2> rs_corrections(const StaggeredProfile& p, int j, double t_n,
                                     const ForcingField& forcing, const SchemeConstants& c,
                                     const GasParams& gp, const GridSpec& g);

struct StepResult {
  StaggeredProfile profile;
  StepArtifacts artifacts;
};

/// One step of the recurrence from level n to n+1. Boundary cells at odd
/// levels are produced by ghost reflection (density mirrored, momentum
/// negated, forcing extended oddly). When bound is non-null and tracking is
/// on, the accumulators are advanced and, in cutoff-stabilized mode, the
/// region cutoff is applied to every new cell.
StepResult step(const StaggeredProfile& p, const StepperConfig& cfg, BoundState* bound);

struct PeriodRun {
  StaggeredProfile final;
  std::vector<StaggeredProfile> snapshots;
  std::vector<long> snapshot_levels;
  BoundState bound;
  std::vector<double> mass, energy, forcing_power;  // per level
  // accumulator values per level (index 0 = initial state), when tracked
  std::vector<double> l_shock_series, l_jensen_series, l_remainder_series, m_n_series;
  long cutoff_clamps = 0;
  long vacuum_truncations = 0;
  long negative_density_clamps = 0;
  double max_char_speed = 0.0;
};

/// March `periods` full periods (2 Nt steps each). Snapshots keep the first
/// and last level and every stride-th level in between (stride <= 0 keeps
/// only the endpoints). Throws NumericalError when the negative-density clamp
/// budget is exhausted.
PeriodRun run_period(const StaggeredProfile& initial, const StepperConfig& cfg, long stride = 0,
                     int periods = 1, const BoundState* seed_bound = nullptr);

double total_mass(const StaggeredProfile& p, const GridSpec& g);
double total_energy(const StaggeredProfile& p, const GasParams& gp, const GridSpec& g);
/// int F(x, t_n) m dx over the profile.
double forcing_power(const StaggeredProfile& p, const ForcingField& forcing, double t_n,
                     const GridSpec& g);

}  // namespace euler1d
