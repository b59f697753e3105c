#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "euler1d/bounds.hpp"
#include "euler1d/errors.hpp"
#include "euler1d/gas.hpp"
#include "euler1d/mesh.hpp"
#include "euler1d/periodic.hpp"
#include "euler1d/riemann.hpp"
#include "euler1d/scheme.hpp"

namespace py = pybind11;
using namespace euler1d;

namespace {

StaggeredProfile profile_from_arrays(const std::vector<double>& rho,
                                     const std::vector<double>& v, const GridSpec& g) {
  if (static_cast<int>(rho.size()) != g.nx || v.size() != rho.size())
    throw std::invalid_argument("expected nx cell values on the level-0 mesh");
  StaggeredProfile p = StaggeredProfile::zeros(0, g.nx);
  for (int i = 0; i < g.nx; ++i) {
    if (rho[i] < 0.0) throw std::domain_error("negative density");
    p.cells[i] = {rho[i], rho[i] * v[i]};
  }
  return p;
}

py::dict profile_to_dict(const StaggeredProfile& p, const GridSpec& g, const GasParams& gp) {
  std::vector<double> xs, rho, mom, vel, zs, ws;
  for (int i = 0; i < p.size(); ++i) {
    xs.push_back(g.x(p.j_of(i)));
    rho.push_back(p.cells[i].rho);
    mom.push_back(p.cells[i].mom);
    vel.push_back(velocity(p.cells[i]));
    RiemannPair inv = invariants_of(p.cells[i], gp);
    zs.push_back(inv.z);
    ws.push_back(inv.w);
  }
  py::dict d;
  d["n"] = p.n;
  d["x"] = xs;
  d["rho"] = rho;
  d["m"] = mom;
  d["v"] = vel;
  d["z"] = zs;
  d["w"] = ws;
  return d;
}

StepperConfig make_config(const GasParams& gp, const GridSpec& g, const SchemeConstants& c,
                          const ForcingField& forcing, const std::string& mode) {
  StepperConfig cfg(gp, g, c, forcing);
  if (mode == "cutoff") {
    cfg.mode = StepMode::CutoffStabilized;
  } else if (mode != "raw") {
    throw std::invalid_argument("mode must be 'raw' or 'cutoff'");
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "1D isentropic Euler solver with reflecting walls, a time-periodic outer force,"
            " invariant-region diagnostics and a periodic-orbit finder";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<NumericalError>(m, "NumericalError");
  py::register_exception<DivergenceError>(m, "DivergenceError");
  py::register_exception<ReconstructionError>(m, "ReconstructionError");

  py::class_<GasParams>(m, "GasParams")
      .def(py::init<double>(), py::arg("gamma"))
      .def_readonly("gamma", &GasParams::gamma)
      .def_readonly("theta", &GasParams::theta);

  py::class_<GasState>(m, "GasState")
      .def(py::init([](double rho, double mom) { return GasState{rho, mom}; }),
           py::arg("rho"), py::arg("mom"))
      .def_readwrite("rho", &GasState::rho)
      .def_readwrite("mom", &GasState::mom)
      .def("__repr__", [](const GasState& u) {
        return "GasState(rho=" + std::to_string(u.rho) + ", mom=" + std::to_string(u.mom) + ")";
      });

  py::class_<RiemannPair>(m, "RiemannPair")
      .def_readonly("z", &RiemannPair::z)
      .def_readonly("w", &RiemannPair::w);

  py::class_<SchemeConstants>(m, "SchemeConstants")
      .def_readonly("M", &SchemeConstants::M)
      .def_readonly("eps", &SchemeConstants::eps)
      .def_readonly("kappa", &SchemeConstants::kappa)
      .def_readonly("K", &SchemeConstants::K)
      .def_readonly("alpha", &SchemeConstants::alpha)
      .def_readonly("rho_bar", &SchemeConstants::rho_bar)
      .def_readonly("eta_bar", &SchemeConstants::eta_bar);

  py::class_<GridSpec>(m, "GridSpec")
      .def_readonly("nx", &GridSpec::nx)
      .def_readonly("cfl_den", &GridSpec::cfl_den)
      .def_readonly("nt", &GridSpec::nt)
      .def_readonly("dx", &GridSpec::dx)
      .def_readonly("dt", &GridSpec::dt)
      .def("steps_per_period", &GridSpec::steps_per_period);

  // pointwise gas algebra
  m.def("pressure", &pressure, py::arg("rho"), py::arg("params"));
  m.def("invariants_of", &invariants_of, py::arg("state"), py::arg("params"));
  m.def("state_of", &state_of, py::arg("pair"), py::arg("params"));
  m.def("eta_star", &eta_star, py::arg("state"), py::arg("params"));
  m.def("q_star", &q_star, py::arg("state"), py::arg("params"));
  m.def("zeta", &zeta, py::arg("state"), py::arg("constants"), py::arg("params"));
  m.def("v_weight", &v_weight, py::arg("state"), py::arg("constants"), py::arg("params"));
  m.def("char_speeds", &char_speeds, py::arg("state"), py::arg("params"));
  m.def("g_sources", &g_sources, py::arg("state"), py::arg("constants"), py::arg("params"),
        py::arg("f_at_point"), py::arg("f_moment"));
  m.def("derive_constants", &derive_constants, py::arg("M"), py::arg("eps"), py::arg("rho_bar"),
        py::arg("eta_bar"), py::arg("params"), py::arg("kappa") = 0.0);
  m.def("c_gamma", &c_gamma, py::arg("params"));
  m.def("decay_bound", &decay_bound, py::arg("M"), py::arg("dt"), py::arg("n"));

  // Riemann solver
  m.def("shock_speed", &shock_speed_fn, py::arg("rho"), py::arg("rho0"), py::arg("params"));
  m.def(
      "solve_riemann",
      [](const GasState& uL, const GasState& uR, const GasParams& gp) {
        RiemannSolution sol = solve_riemann(uL, uR, gp);
        auto kind = [](WaveKind k) {
          switch (k) {
            case WaveKind::Rarefaction1: return "1-rarefaction";
            case WaveKind::Shock1: return "1-shock";
            case WaveKind::Rarefaction2: return "2-rarefaction";
            case WaveKind::Shock2: return "2-shock";
            case WaveKind::Vacuum: return "vacuum";
          }
          return "?";
        };
        py::dict d;
        d["middle"] = sol.middle;
        d["vacuum_middle"] = sol.vacuum_middle;
        d["wave1"] = py::dict(py::arg("kind") = kind(sol.wave1.kind),
                              py::arg("speeds") = py::make_tuple(sol.wave1.speed_lo,
                                                                 sol.wave1.speed_hi),
                              py::arg("strength") = sol.wave1.strength);
        d["wave2"] = py::dict(py::arg("kind") = kind(sol.wave2.kind),
                              py::arg("speeds") = py::make_tuple(sol.wave2.speed_lo,
                                                                 sol.wave2.speed_hi),
                              py::arg("strength") = sol.wave2.strength);
        return d;
      },
      py::arg("left"), py::arg("right"), py::arg("params"));
  m.def(
      "sample_riemann",
      [](const GasState& uL, const GasState& uR, double xi, const GasParams& gp) {
        return sample_riemann(solve_riemann(uL, uR, gp), xi, gp);
      },
      py::arg("left"), py::arg("right"), py::arg("xi"), py::arg("params"));
  m.def("entropy_production", &entropy_production, py::arg("sigma"), py::arg("left"),
        py::arg("right"), py::arg("params"));

  m.def("build_grid", &build_grid, py::arg("nx"), py::arg("M"));

  m.def(
      "run_period",
      [](const std::vector<double>& rho, const std::vector<double>& v, int nx, double M,
         double eps, double kappa, double gamma, const std::string& mode, int periods) {
        GasParams gp(gamma);
        GridSpec g = build_grid(nx, M);
        StaggeredProfile p0 = profile_from_arrays(rho, v, g);
        SchemeConstants c =
            derive_constants(M, eps, total_mass(p0, g), total_energy(p0, gp, g), gp, kappa);
        ForcingField forcing =
            kappa > 0.0 ? ForcingField::sinusoidal(kappa) : ForcingField::none();
        StepperConfig cfg = make_config(gp, g, c, forcing, mode);
        PeriodRun run = run_period(p0, cfg, 0, periods);
        py::dict d;
        d["final"] = profile_to_dict(run.final, g, gp);
        d["mass"] = run.mass;
        d["energy"] = run.energy;
        d["l_shock"] = run.bound.l_shock;
        d["l_jensen"] = run.bound.l_jensen;
        d["l_remainder"] = run.bound.l_remainder;
        d["cutoff_clamps"] = run.cutoff_clamps;
        d["negative_density_clamps"] = run.negative_density_clamps;
        return d;
      },
      py::arg("rho"), py::arg("v"), py::arg("nx"), py::arg("M"), py::arg("eps") = 0.1,
      py::arg("kappa") = 0.0, py::arg("gamma") = 2.0, py::arg("mode") = "raw",
      py::arg("periods") = 1,
      "March one or more periods from level-0 cell data (sinusoidal forcing when kappa > 0).");

  m.def(
      "find_periodic_orbit",
      [](const std::vector<double>& rho, const std::vector<double>& v, int nx, double M,
         double eps, double kappa, double gamma, const std::string& mode, double tol,
         int max_iter, double damping) {
        GasParams gp(gamma);
        GridSpec g = build_grid(nx, M);
        StaggeredProfile p0 = profile_from_arrays(rho, v, g);
        SchemeConstants c =
            derive_constants(M, eps, total_mass(p0, g), total_energy(p0, gp, g), gp, kappa);
        ForcingField forcing =
            kappa > 0.0 ? ForcingField::sinusoidal(kappa) : ForcingField::none();
        StepperConfig cfg = make_config(gp, g, c, forcing, mode);
        ShiftedState guess = to_shifted(p0, c, gp, g);
        auto [fixed, rep] = find_fixed_point(guess, cfg, tol, max_iter, damping);
        StaggeredProfile orbit = from_shifted(fixed, c, gp, g);
        py::dict d;
        d["converged"] = rep.converged;
        d["iterations"] = rep.iterations;
        d["residual_sup"] = rep.residual_sup;
        d["certificate_residual"] = rep.certificate_residual;
        d["periodicity_l1"] = rep.periodicity_l1;
        d["periodicity_sup"] = rep.periodicity_sup;
        d["orbit"] = profile_to_dict(orbit, g, gp);
        return d;
      },
      py::arg("rho"), py::arg("v"), py::arg("nx"), py::arg("M"), py::arg("eps") = 0.1,
      py::arg("kappa") = 0.0, py::arg("gamma") = 2.0, py::arg("mode") = "raw",
      py::arg("tol") = 1e-8, py::arg("max_iter") = 200, py::arg("damping") = 0.5,
      "Damped Picard iteration on the period map, reporting the certificate and the"
      " physical periodicity residuals of the reconstructed orbit.");

  m.def(
      "decay_diagnostic",
      [](double M, double eps, double gamma, int samples) {
        GasParams gp(gamma);
        SchemeConstants c = derive_constants(M, eps, 1.0, 0.5, gp, 0.0);
        DecayReport rep = decay_diagnostic(c, gp, samples);
        py::dict d;
        d["min_g2"] = rep.min_g2;
        d["max_g2"] = rep.max_g2;
        d["quantitative_bound"] = rep.quantitative_bound;
        d["fraction_quantitative"] = rep.fraction_quantitative;
        d["all_negative"] = rep.all_negative;
        return d;
      },
      py::arg("M"), py::arg("eps") = 0.1, py::arg("gamma") = 2.0, py::arg("samples") = 500);
}
