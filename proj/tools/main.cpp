#include <CLI11.hpp>
#include <string>
#include <vector>

#include "euler1d/cli.hpp"
#include "euler1d/errors.hpp"
#include "euler1d/log.hpp"

using euler1d::cli::RunConfig;

namespace {

std::string g_config_path_sink;

// Shared flags; every value defaults to what the config file (if any) set.
void add_common_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--config", g_config_path_sink,
                  "declarative config file (already applied as defaults)");
  cmd->add_option("--mode", rc.mode, "stepper mode: raw | cutoff")->capture_default_str();
  cmd->add_option("--nx", rc.nx, "half cell-count, dx = 1/(2 nx)")->capture_default_str();
  cmd->add_option("--gamma", rc.gamma, "adiabatic exponent in (1, 5/3]")->capture_default_str();
  cmd->add_option("--bigM", rc.bigM, "bound-scale parameter M")->capture_default_str();
  cmd->add_option("--eps", rc.eps, "exponent shift in (0, 2(gamma-1)/(gamma+1))")
      ->capture_default_str();
  cmd->add_option("--kappa", rc.kappa, "forcing amplitude bound")->capture_default_str();
  cmd->add_option("--periods", rc.periods, "number of periods to march")->capture_default_str();
  cmd->add_option("--tol", rc.tol, "fixed-point residual tolerance")->capture_default_str();
  cmd->add_option("--max-iter", rc.max_iter, "fixed-point iteration budget")
      ->capture_default_str();
  cmd->add_option("--damping", rc.damping, "Picard damping factor in (0, 1]")
      ->capture_default_str();
  cmd->add_option("--out", rc.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--stride", rc.stride, "snapshot stride (0 = auto)")->capture_default_str();
  cmd->add_option("--seed", rc.seed, "seed for randomized diagnostics")->capture_default_str();
  cmd->add_option("--initial", rc.initial_kind, "initial data: steady | sine | file")
      ->capture_default_str();
  cmd->add_option("--initial-rho", rc.initial_rho, "base density of the builtin initial data")
      ->capture_default_str();
  cmd->add_option("--initial-amp", rc.initial_amp, "density modulation of the sine family")
      ->capture_default_str();
  cmd->add_option("--initial-vamp", rc.initial_vamp, "velocity amplitude of the sine family")
      ->capture_default_str();
  cmd->add_option("--initial-file", rc.initial_file, "initial data CSV (x,rho,v)")
      ->capture_default_str();
  cmd->add_option("--forcing", rc.forcing_kind, "forcing: none | sin | file")
      ->capture_default_str();
  cmd->add_option("--forcing-file", rc.forcing_file, "forcing table CSV (t,x,F)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  // The config file seeds the defaults; explicit flags override it.
  std::string config_path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  }
  RunConfig rc;
  if (!config_path.empty()) {
    try {
      rc = euler1d::cli::load_config_file(config_path);
    } catch (const euler1d::ConfigError& e) {
      euler1d::log::error("%s", e.what());
      return euler1d::cli::kExitConfig;
    }
  }

  CLI::App app{"1D isentropic Euler solver with reflecting walls, a time-periodic outer\n"
               "force, invariant-region diagnostics and a time-periodic-orbit finder"};
  app.require_subcommand(1);
  std::string config_opt;
  app.add_option("--config", config_opt, "declarative config file (key = value sections)");

  CLI::App* sim = app.add_subcommand("simulate", "march the recurrence and write trajectory CSV"
                                                 " + diagnostics JSON");
  add_common_options(sim, rc);

  CLI::App* per = app.add_subcommand("periodic", "find a time-periodic orbit by damped Picard"
                                                 " iteration on the period map");
  add_common_options(per, rc);

  CLI::App* rie = app.add_subcommand("riemann", "solve a single Riemann problem and print the"
                                                " wave pattern");
  rie->add_option("--config", g_config_path_sink,
                  "declarative config file (already applied as defaults)");
  rie->add_option("--gamma", rc.gamma, "adiabatic exponent")->capture_default_str();
  rie->add_option("--left", [&rc](const std::vector<std::string>& vals) {
        return CLI::detail::lexical_cast(vals.at(0), rc.left_rho) &&
               CLI::detail::lexical_cast(vals.at(1), rc.left_v);
      },
      "left state as rho v")->expected(2);
  rie->add_option("--right", [&rc](const std::vector<std::string>& vals) {
        return CLI::detail::lexical_cast(vals.at(0), rc.right_rho) &&
               CLI::detail::lexical_cast(vals.at(1), rc.right_v);
      },
      "right state as rho v")->expected(2);
  rie->add_option("--rays", rc.rays, "sample the solution on this many rays into rays.csv")
      ->capture_default_str();
  rie->add_option("--out", rc.out_dir, "output directory")->capture_default_str();

  CLI::App* dia = app.add_subcommand("diagnose", "replay containment/energy/mass checks on a"
                                                 " stored trajectory");
  add_common_options(dia, rc);
  dia->add_option("--trajectory", rc.trajectory_file, "trajectory CSV to replay")->required();

  CLI11_PARSE(app, argc, argv);

  if (sim->parsed()) return euler1d::cli::cmd_simulate(rc);
  if (per->parsed()) return euler1d::cli::cmd_periodic(rc);
  if (rie->parsed()) return euler1d::cli::cmd_riemann(rc);
  if (dia->parsed()) return euler1d::cli::cmd_diagnose(rc);
  return euler1d::cli::kExitConfig;
}
