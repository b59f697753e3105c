#include "euler1d/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "euler1d/errors.hpp"
#include "euler1d/log.hpp"

namespace euler1d {

namespace {

double xi_of(const GasState& a, const GasState& b, const GasParams& gp, const GridSpec& g) {
  // a at index k, b at index k+2.
  return (b.mom + a.mom) * g.dx -
         (2.0 * g.dt / 3.0) * (momentum_flux(b, gp) - momentum_flux(a, gp));
}

struct CellCoeffs {
  double G = 0.0, H = 0.0, R = 0.0, S = 0.0;
};

CellCoeffs coeffs_of(const GasState& u, double f_pt, double moment, const SchemeConstants& c,
                     const GasParams& gp, const GridSpec& g) {
  CellCoeffs cc;
  double v = velocity(u);
  cc.G = g1_rate(u.rho, v, c, gp, f_pt, moment);
  cc.H = g2_rate(u.rho, v, c, gp, f_pt, moment);

  const double pref = g.dt * g.dt / (8.0 * g.dx);
  double m_over_rho_theta = u.rho <= kRhoFloor ? 0.0 : u.mom / pow_rho(u.rho, gp.theta);
  cc.R = pref * (u.rho * (cc.H + cc.G) + m_over_rho_theta * (cc.H - cc.G));

  double vw = v_weight(u, c, gp);
  double flux_over_rho_theta =
      u.rho <= kRhoFloor
          ? 0.0
          : (u.rho * v * v + pow_rho(u.rho, gp.gamma)) / pow_rho(u.rho, gp.theta);
  cc.S = (g.dx / 4.0) * u.rho * zeta(u, c, gp) +
         pref * (2.0 * u.rho * (cc.H + cc.G + 2.0 * vw) +
                 flux_over_rho_theta * (cc.H - cc.G) - 2.0 * u.mom);
  return cc;
}

GasState mirror(const GasState& u) { return {u.rho, -u.mom}; }

// Moment prefix sums: prefix[i] = sum over stored cells i' < i of
// F(x_{j(i')+1}, t_n) xi_{j(i')}.
std::vector<double> moment_prefix(const StaggeredProfile& p, double t_n,
                                  const ForcingField& forcing, const GasParams& gp,
                                  const GridSpec& g) {
  std::vector<double> prefix(p.size(), 0.0);
  for (int i = 1; i < p.size(); ++i) {
    int k = p.j_of(i - 1);
    double xi = xi_of(p.cells[i - 1], p.cells[i], gp, g);
    prefix[i] = prefix[i - 1] + forcing(g.x(k + 1), t_n) * xi;
  }
  return prefix;
}

}  // namespace

double xi_k(const StaggeredProfile& p, int k, const GasParams& gp, const GridSpec& g) {
  int i = p.index_of_j(k);
  int i2 = p.index_of_j(k + 2);
  return xi_of(p.cells[i], p.cells[i2], gp, g);
}

std::array<double, 2> gh_terms(const StaggeredProfile& p, int j, double t_n,
                               const ForcingField& forcing, const SchemeConstants& c,
                               const GasParams& gp, const GridSpec& g) {
  int i = p.index_of_j(j);
  std::vector<double> prefix = moment_prefix(p, t_n, forcing, gp, g);
  const GasState& u = p.cells[i];
  double v = velocity(u);
  double f_pt = forcing(g.x(j), t_n);
  return {g1_rate(u.rho, v, c, gp, f_pt, prefix[i]),
          g2_rate(u.rho, v, c, gp, f_pt, prefix[i])};
}

std::array<double, 2> rs_corrections(const StaggeredProfile& p, int j, double t_n,
                                     const ForcingField& forcing, const SchemeConstants& c,
                                     const GasParams& gp, const GridSpec& g) {
  int i = p.index_of_j(j);
  std::vector<double> prefix = moment_prefix(p, t_n, forcing, gp, g);
  CellCoeffs cc = coeffs_of(p.cells[i], forcing(g.x(j), t_n), prefix[i], c, gp, g);
  return {cc.R, cc.S};
}

StepResult step(const StaggeredProfile& p, const StepperConfig& cfg, BoundState* bound) {
  const GasParams& gp = cfg.gas;
  const GridSpec& g = cfg.grid;
  const SchemeConstants& c = cfg.constants;
  const bool track = bound != nullptr && (cfg.track_bounds || cfg.mode == StepMode::CutoffStabilized);

  const long n = p.n;
  const long n_wrapped = ((n % g.steps_per_period()) + g.steps_per_period()) % g.steps_per_period();
  const double t_n = g.t(n_wrapped);
  const int new_parity = static_cast<int>((n + 1) & 1);
  const int sz = p.size();

  std::vector<double> prefix = moment_prefix(p, t_n, cfg.forcing, gp, g);
  std::vector<CellCoeffs> cc(sz);
  for (int i = 0; i < sz; ++i) {
    cc[i] = coeffs_of(p.cells[i], cfg.forcing(g.x(p.j_of(i)), t_n), prefix[i], c, gp, g);
  }

  // Ghost reflection for the wall cells created at odd levels: density
  // mirrored, momentum negated, forcing extended oddly, moment sums reflected
  // (zero at the left end, even about x = 1 at the right end).
  CellCoeffs cc_ghost_l, cc_ghost_r;
  GasState u_ghost_l, u_ghost_r;
  if (new_parity == 1) {
    u_ghost_l = mirror(p.cells.front());
    cc_ghost_l = coeffs_of(u_ghost_l, -cfg.forcing(g.x(p.j_of(0)), t_n), -prefix.front(), c, gp, g);
    u_ghost_r = mirror(p.cells.back());
    cc_ghost_r = coeffs_of(u_ghost_r, -cfg.forcing(g.x(p.j_of(sz - 1)), t_n), prefix.back(), c,
                           gp, g);
  }

  StaggeredProfile out = StaggeredProfile::zeros(n + 1, p.nx);
  StepResult res;
  res.artifacts.dt = g.dt;

  auto left_of = [&](int i_new) -> const GasState& {
    if (new_parity == 1) return i_new == 0 ? u_ghost_l : p.cells[i_new - 1];
    return p.cells[i_new];
  };
  auto right_of = [&](int i_new) -> const GasState& {
    if (new_parity == 1) return i_new == sz ? u_ghost_r : p.cells[i_new];
    return p.cells[i_new + 1];
  };
  auto coeff_left = [&](int i_new) -> const CellCoeffs& {
    if (new_parity == 1) return i_new == 0 ? cc_ghost_l : cc[i_new - 1];
    return cc[i_new];
  };
  auto coeff_right = [&](int i_new) -> const CellCoeffs& {
    if (new_parity == 1) return i_new == sz ? cc_ghost_r : cc[i_new];
    return cc[i_new + 1];
  };

  res.artifacts.cells.reserve(out.size());
  for (int i_new = 0; i_new < out.size(); ++i_new) {
    const int j = out.j_of(i_new);
    const GasState& ul = left_of(i_new);
    const GasState& ur = right_of(i_new);
    const CellCoeffs& cl = coeff_left(i_new);
    const CellCoeffs& cr = coeff_right(i_new);

    double rho_new = 0.5 * (ur.rho + ul.rho) - (g.dt / (2.0 * g.dx)) * (ur.mom - ul.mom) -
                     cr.R + cl.R;
    // The source term enters with the sign of the momentum equation
    // m_t + flux_x = F rho (one-step consistency fixes the orientation).
    double m_new = 0.5 * (ur.mom + ul.mom) -
                   (g.dt / (2.0 * g.dx)) * (momentum_flux(ur, gp) - momentum_flux(ul, gp)) -
                   cr.S + cl.S +
                   g.dt * 0.5 * (ur.rho + ul.rho) * cfg.forcing(g.x(j), t_n);

    if (rho_new < 0.0) {
      ++res.artifacts.negative_density_clamps;
      rho_new = 0.0;
      m_new = 0.0;
    } else if (rho_new <= kRhoFloor) {
      rho_new = 0.0;
      m_new = 0.0;
    }
    out.cells[i_new] = {rho_new, m_new};

    CellContribution contrib;
    contrib.left_in = ul;
    contrib.right_in = ur;
    contrib.average = out.cells[i_new];
    contrib.width = out.width(i_new, g);
    contrib.boundary = out.is_boundary(i_new) ? (i_new == 0 ? -1 : +1) : 0;
    res.artifacts.cells.push_back(contrib);
  }

  if (track) {
    // Entropy production of the interface Riemann problems at the old level;
    // the walls contribute the waves entering the domain.
    res.artifacts.interface_productions.reserve(sz + 1);
    res.artifacts.interface_productions.push_back(
        interface_entropy_production(mirror(p.cells.front()), p.cells.front(), gp, +1));
    for (int i = 0; i + 1 < sz; ++i) {
      res.artifacts.interface_productions.push_back(
          interface_entropy_production(p.cells[i], p.cells[i + 1], gp, 0));
    }
    res.artifacts.interface_productions.push_back(
        interface_entropy_production(p.cells.back(), mirror(p.cells.back()), gp, -1));

    bound->n = n + 1;
    bound->M_n = decay_bound(bound->M_seed, g.dt, n + 1);
    *bound = l_update(*bound, res.artifacts, gp);
    std::vector<double> I = i_functional(out, c, gp, g);
    if (cfg.mode == StepMode::CutoffStabilized) {
      for (int i = 0; i < out.size(); ++i) {
        CutoffResult cut = cutoff(out.cells[i], bound->M_n, bound->l_total(), I[i], g, cfg.fan, gp);
        if (cut.vacuum || cut.inverted) ++res.artifacts.vacuum_truncations;
        if (cut.clamped) ++res.artifacts.cutoff_clamps;
        out.cells[i] = cut.u;
      }
    }
    bound->I_values = std::move(I);
  }

  res.profile = std::move(out);
  return res;
}

double total_mass(const StaggeredProfile& p, const GridSpec& g) {
  double m = 0.0;
  for (int i = 0; i < p.size(); ++i) m += p.width(i, g) * p.cells[i].rho;
  return m;
}

double total_energy(const StaggeredProfile& p, const GasParams& gp, const GridSpec& g) {
  double e = 0.0;
  for (int i = 0; i < p.size(); ++i) e += p.width(i, g) * eta_star(p.cells[i], gp);
  return e;
}

double forcing_power(const StaggeredProfile& p, const ForcingField& forcing, double t_n,
                     const GridSpec& g) {
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i)
    s += p.width(i, g) * forcing(g.x(p.j_of(i)), t_n) * p.cells[i].mom;
  return s;
}

PeriodRun run_period(const StaggeredProfile& initial, const StepperConfig& cfg, long stride,
                     int periods, const BoundState* seed_bound) {
  const GridSpec& g = cfg.grid;
  const long total_steps = g.steps_per_period() * periods;
  const bool track = cfg.track_bounds || cfg.mode == StepMode::CutoffStabilized;

  PeriodRun run;
  run.bound = seed_bound ? *seed_bound
                         : init_bound_state(cfg.constants, cfg.gas, initial, g);

  StaggeredProfile current = initial;
  run.snapshots.push_back(current);
  run.snapshot_levels.push_back(current.n);
  run.mass.push_back(total_mass(current, g));
  run.energy.push_back(total_energy(current, cfg.gas, g));
  run.forcing_power.push_back(forcing_power(
      current, cfg.forcing, g.t(((current.n % g.steps_per_period()) + g.steps_per_period()) %
                                g.steps_per_period()),
      g));
  auto record_accumulators = [&]() {
    if (!track) return;
    run.l_shock_series.push_back(run.bound.l_shock);
    run.l_jensen_series.push_back(run.bound.l_jensen);
    run.l_remainder_series.push_back(run.bound.l_remainder);
    run.m_n_series.push_back(run.bound.M_n);
  };
  record_accumulators();

  bool cfl_warned = false;
  for (long s = 0; s < total_steps; ++s) {
    for (int i = 0; i < current.size(); ++i) {
      auto sp = char_speeds(current.cells[i], cfg.gas);
      run.max_char_speed = std::max({run.max_char_speed, std::abs(sp[0]), std::abs(sp[1])});
    }
    if (!cfl_warned && run.max_char_speed > g.cfl_den) {
      log::warn("CFL violated: max characteristic speed %.3g exceeds dx/dt = %d",
                run.max_char_speed, g.cfl_den);
      cfl_warned = true;
    }

    StepResult sr = step(current, cfg, track ? &run.bound : nullptr);
    current = std::move(sr.profile);
    run.cutoff_clamps += sr.artifacts.cutoff_clamps;
    run.vacuum_truncations += sr.artifacts.vacuum_truncations;
    run.negative_density_clamps += sr.artifacts.negative_density_clamps;
    if (run.negative_density_clamps > cfg.max_negative_clamps) {
      std::ostringstream os;
      os << "run aborted: " << run.negative_density_clamps
         << " negative-density clamps exceed the budget of " << cfg.max_negative_clamps
         << " at level " << current.n;
      throw NumericalError(os.str());
    }

    run.mass.push_back(total_mass(current, g));
    run.energy.push_back(total_energy(current, cfg.gas, g));
    long nw = ((current.n % g.steps_per_period()) + g.steps_per_period()) % g.steps_per_period();
    run.forcing_power.push_back(forcing_power(current, cfg.forcing, g.t(nw), g));
    record_accumulators();

    bool last = s + 1 == total_steps;
    if (last || (stride > 0 && (s + 1) % stride == 0)) {
      run.snapshots.push_back(current);
      run.snapshot_levels.push_back(current.n);
    }
  }
  run.final = std::move(current);
  return run;
}

}  // namespace euler1d
