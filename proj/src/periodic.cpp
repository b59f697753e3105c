#include "euler1d/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "euler1d/bounds.hpp"
#include "euler1d/errors.hpp"

namespace euler1d {

ShiftedState to_shifted(const StaggeredProfile& p, const SchemeConstants& c, const GasParams& gp,
                        const GridSpec& g) {
  if (p.parity() != 0)
    throw std::invalid_argument("to_shifted: profile must sit on an even level");
  std::vector<double> I = i_functional(p, c, gp, g);
  ShiftedState s;
  s.zhat.resize(p.size());
  s.what.resize(p.size());
  for (int i = 0; i < p.size(); ++i) {
    RiemannPair inv = invariants_of(p.cells[i], gp);
    s.zhat[i] = inv.z - I[i];
    s.what[i] = inv.w - I[i];
  }
  return s;
}

StaggeredProfile from_shifted(const ShiftedState& s, const SchemeConstants& c,
                              const GasParams& gp, const GridSpec& g, double* max_av) {
  if (s.size() != g.nx)
    throw std::invalid_argument("from_shifted: state size does not match the grid");
  StaggeredProfile p = StaggeredProfile::zeros(0, g.nx);
  double before = 0.0;  // integral of zeta over the cells already built
  double worst_av = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    double dzw = s.what[i] - s.zhat[i];
    if (dzw < 0.0)
      throw ReconstructionError("from_shifted: what < zhat at cell " + std::to_string(i), i);
    // The shift cancels in the difference, so the density needs no solve.
    double rho = dzw == 0.0 ? 0.0 : std::pow(gp.theta * dzw / 2.0, 1.0 / gp.theta);
    if (rho <= kRhoFloor) {
      p.cells[i] = {0.0, 0.0};
      before += 2.0 * g.dx * c.K;  // zeta of vacuum
      continue;
    }
    double b_hat = 0.5 * (s.what[i] + s.zhat[i]) + before;
    double pressure_part =
        pow_rho(rho, gp.gamma) / (gp.gamma * (gp.gamma - 1.0)) - c.alpha * rho + c.K;
    double b = b_hat + g.dx * pressure_part;
    double a = g.dx * rho / 2.0;
    double disc = 1.0 - 4.0 * a * b;
    if (disc < 0.0) {
      std::ostringstream os;
      os << "from_shifted: negative discriminant " << disc << " at cell " << i
         << " (a = " << a << ", b = " << b << ")";
      throw ReconstructionError(os.str(), i);
    }
    double v = 2.0 * b / (1.0 + std::sqrt(disc));
    worst_av = std::max(worst_av, std::abs(a * v));
    p.cells[i] = {rho, rho * v};
    before += 2.0 * g.dx * zeta(p.cells[i], c, gp);
  }
  if (max_av) *max_av = worst_av;
  return p;
}

ShiftedState f_map(const ShiftedState& s, const StepperConfig& cfg) {
  StaggeredProfile p0 = from_shifted(s, cfg.constants, cfg.gas, cfg.grid);
  PeriodRun run = run_period(p0, cfg);
  return to_shifted(run.final, cfg.constants, cfg.gas, cfg.grid);
}

namespace {

double sup_diff(const ShiftedState& a, const ShiftedState& b) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.zhat[i] - b.zhat[i]));
    m = std::max(m, std::abs(a.what[i] - b.what[i]));
  }
  return m;
}

double l1_diff(const ShiftedState& a, const ShiftedState& b, const GridSpec& g) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    s += 2.0 * g.dx * (std::abs(a.zhat[i] - b.zhat[i]) + std::abs(a.what[i] - b.what[i]));
  }
  return s;
}

}  // namespace

std::pair<ShiftedState, FixedPointReport> find_fixed_point(
    const ShiftedState& guess, const StepperConfig& cfg, double tol, int max_iter,
    double damping, const std::function<ShiftedState(const ShiftedState&)>& map) {
  if (!(damping > 0.0) || damping > 1.0)
    throw std::invalid_argument("find_fixed_point: damping must lie in (0, 1]");

  // Raw-mode inner iterations do not need the bound accumulators.
  StepperConfig inner = cfg;
  if (inner.mode == StepMode::Raw) inner.track_bounds = false;
  auto apply = map ? map : [&inner](const ShiftedState& x) { return f_map(x, inner); };

  FixedPointReport rep;
  ShiftedState x = guess;
  for (int k = 0; k < max_iter; ++k) {
    ShiftedState y = apply(x);
    double r_sup = sup_diff(y, x);
    rep.residual_sup.push_back(r_sup);
    rep.residual_l1.push_back(l1_diff(y, x, cfg.grid));
    rep.iterations = k + 1;
    if (r_sup < tol) {
      rep.converged = true;
      break;
    }
    if (k >= 20 && r_sup > 10.0 * rep.residual_sup[k - 20]) {
      throw DivergenceError("find_fixed_point: residual grew tenfold over 20 iterates",
                            rep.residual_sup);
    }
    for (int i = 0; i < x.size(); ++i) {
      x.zhat[i] = (1.0 - damping) * x.zhat[i] + damping * y.zhat[i];
      x.what[i] = (1.0 - damping) * x.what[i] + damping * y.what[i];
    }
  }

  if (rep.converged) {
    // Certificate: one fresh evaluation, independent of the loop bookkeeping.
    ShiftedState y = apply(x);
    rep.certificate_residual = sup_diff(y, x);
    StaggeredProfile p0 = from_shifted(x, cfg.constants, cfg.gas, cfg.grid, &rep.max_av);
    PeriodRun run = run_period(p0, inner);
    auto [l1, sup] = periodicity_residual(p0, run.final, cfg.grid);
    rep.periodicity_l1 = l1;
    rep.periodicity_sup = sup;
  }
  return {x, rep};
}

std::pair<double, double> periodicity_residual(const StaggeredProfile& a,
                                               const StaggeredProfile& b, const GridSpec& g) {
  if (a.nx != b.nx || a.parity() != b.parity())
    throw std::invalid_argument("periodicity_residual: profiles on different grids/parities");
  double l1 = 0.0, sup = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    double dr = std::abs(a.cells[i].rho - b.cells[i].rho);
    double dm = std::abs(a.cells[i].mom - b.cells[i].mom);
    l1 += a.width(i, g) * (dr + dm);
    sup = std::max({sup, dr, dm});
  }
  return {l1, sup};
}

}  // namespace euler1d
