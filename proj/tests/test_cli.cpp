#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "euler1d/cli.hpp"
#include "euler1d/errors.hpp"
#include "euler1d/io.hpp"

using namespace euler1d;
using namespace euler1d::cli;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  json j;
  in >> j;
  return j;
}

std::string fresh_dir(const std::string& tag) {
  std::string dir = "/tmp/euler1d_test_" + tag;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config file parsing") {
  std::string path = "/tmp/euler1d_cfg_ok.ini";
  {
    std::ofstream out(path);
    out << "# comment\n"
        << "[run]\n mode = cutoff \n nx = 30\n"
        << "[gas]\ngamma = 1.4\n"
        << "[constants]\nbigM = 5.5\nkappa = 0.01\n"
        << "[fixedpoint]\ntol = 1e-7\n";
  }
  RunConfig rc = load_config_file(path);
  CHECK(rc.mode == "cutoff");
  CHECK(rc.nx == 30);
  CHECK(rc.gamma == 1.4);
  CHECK(rc.bigM == 5.5);
  CHECK(rc.kappa == 0.01);
  CHECK(rc.tol == 1e-7);

  {
    std::ofstream out("/tmp/euler1d_cfg_bad.ini");
    out << "[run]\nnonsense = 3\n";
  }
  CHECK_THROWS_AS(load_config_file("/tmp/euler1d_cfg_bad.ini"), ConfigError);
  {
    std::ofstream out("/tmp/euler1d_cfg_bad2.ini");
    out << "orphan = 1\n";
  }
  CHECK_THROWS_AS(load_config_file("/tmp/euler1d_cfg_bad2.ini"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/tmp/euler1d_cfg_missing.ini"), ConfigError);
}

TEST_CASE("config validation") {
  RunConfig rc;
  CHECK_NOTHROW(rc.validate());

  RunConfig bad = rc;
  bad.gamma = 0.9;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = rc;
  bad.mode = "turbo";
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = rc;
  bad.nx = 1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = rc;
  bad.eps = 0.9;  // above 2(gamma-1)/(gamma+1) for gamma = 2
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = rc;
  bad.kappa = -0.1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = rc;
  bad.damping = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = rc;
  bad.forcing_kind = "file";  // missing path
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("trajectory roundtrip is exact") {
  GasParams gp(2.0);
  GridSpec g = build_grid(5, 2.0);
  std::vector<StaggeredProfile> snaps;
  for (long n : {0L, 1L, 4L}) {
    StaggeredProfile p = StaggeredProfile::zeros(n, g.nx);
    for (int i = 0; i < p.size(); ++i) {
      p.cells[i] = {1.0 + 0.001 * (i + 1) * (n + 1), 0.1 / (i + 1) - 0.05 * n};
    }
    snaps.push_back(p);
  }
  std::string path = "/tmp/euler1d_traj_roundtrip.csv";
  write_trajectory(path, snaps, g, gp);
  std::vector<StaggeredProfile> back = read_trajectory(path, g);
  REQUIRE(back.size() == snaps.size());
  for (std::size_t k = 0; k < snaps.size(); ++k) {
    CHECK(back[k].n == snaps[k].n);
    for (int i = 0; i < snaps[k].size(); ++i) {
      CHECK(back[k].cells[i].rho == snaps[k].cells[i].rho);
      CHECK(back[k].cells[i].mom == snaps[k].cells[i].mom);
    }
  }
}

TEST_CASE("trajectory reader rejects malformed input") {
  GridSpec g = build_grid(5, 2.0);

  {
    std::ofstream out("/tmp/euler1d_traj_bad1.csv");
    out << "wrong,header\n";
  }
  CHECK_THROWS_AS(read_trajectory("/tmp/euler1d_traj_bad1.csv", g), ConfigError);

  {
    std::ofstream out("/tmp/euler1d_traj_bad2.csv");
    out << "n,t,j,x,rho,m,v,z,w\n";
    out << "0,0,1,0.1,1.0,0.0,0,0,0\n";
    out << "0,0,1,0.1,garbage,0.0,0,0,0\n";
  }
  try {
    read_trajectory("/tmp/euler1d_traj_bad2.csv", g);
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  {
    // truncated level: only one cell of the five in J_0
    std::ofstream out("/tmp/euler1d_traj_bad3.csv");
    out << "n,t,j,x,rho,m,v,z,w\n";
    out << "0,0,1,0.1,1.0,0.0,0,0,0\n";
  }
  CHECK_THROWS_AS(read_trajectory("/tmp/euler1d_traj_bad3.csv", g), ConfigError);
}

TEST_CASE("simulate writes trajectory and diagnostics") {
  RunConfig rc;
  rc.nx = 10;
  rc.bigM = 4.0;
  rc.initial_kind = "steady";
  rc.forcing_kind = "none";
  rc.stride = 20;
  rc.out_dir = fresh_dir("sim_steady");
  CHECK(cmd_simulate(rc) == kExitOk);

  json diag = read_json(rc.out_dir + "/diagnostics.json");
  CHECK(diag["verdicts"]["mass"]["drift"].get<double>() == 0.0);
  CHECK(diag["verdicts"]["containment"]["pass"].get<bool>());
  CHECK(diag["verdicts"]["energy"]["inequality_pass"].get<bool>());
  CHECK(diag["events"]["negative_density_clamps"].get<long>() == 0);

  GridSpec g = build_grid(rc.nx, rc.bigM);
  std::vector<StaggeredProfile> snaps =
      read_trajectory(rc.out_dir + "/trajectory.csv", g);
  CHECK(snaps.front().n == 0);
  CHECK(snaps.back().n == g.steps_per_period());
}

TEST_CASE("diagnose reproduces the inline verdicts exactly") {
  RunConfig rc;
  rc.nx = 8;
  rc.bigM = 4.0;
  rc.kappa = 0.01;
  rc.initial_kind = "sine";
  rc.initial_amp = 0.05;
  rc.initial_vamp = 0.02;
  rc.forcing_kind = "sin";
  rc.stride = 10;
  rc.out_dir = fresh_dir("sim_replay");
  REQUIRE(cmd_simulate(rc) == kExitOk);
  json inline_diag = read_json(rc.out_dir + "/diagnostics.json");

  RunConfig dc = rc;
  dc.trajectory_file = rc.out_dir + "/trajectory.csv";
  dc.out_dir = fresh_dir("diag_replay");
  REQUIRE(cmd_diagnose(dc) == kExitOk);
  json replay = read_json(dc.out_dir + "/verdict.json");

  CHECK(inline_diag["verdicts"] == replay["verdicts"]);
}

TEST_CASE("diagnose localizes an injected violation") {
  RunConfig rc;
  rc.nx = 8;
  rc.bigM = 4.0;
  rc.initial_kind = "steady";
  rc.forcing_kind = "none";
  rc.stride = 30;
  rc.out_dir = fresh_dir("sim_inject");
  REQUIRE(cmd_simulate(rc) == kExitOk);

  // hand-edit one row: push z far below the floor at level 30, j = 5
  std::string traj = rc.out_dir + "/trajectory.csv";
  std::ifstream in(traj);
  std::stringstream patched;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("30,", 0) == 0 && line.find(",5,") != std::string::npos) {
      patched << "30,0.41666666666666669,5,0.3125,1,-12,-12,-16,-8\n";
    } else {
      patched << line << '\n';
    }
  }
  in.close();
  {
    std::ofstream out(traj);
    out << patched.str();
  }

  RunConfig dc = rc;
  dc.trajectory_file = traj;
  dc.out_dir = fresh_dir("diag_inject");
  REQUIRE(cmd_diagnose(dc) == kExitOk);
  json replay = read_json(dc.out_dir + "/verdict.json");
  CHECK(!replay["verdicts"]["containment"]["pass"].get<bool>());
  json fv = replay["verdicts"]["containment"]["first_violation"];
  REQUIRE(!fv.is_null());
  CHECK(fv[0].get<long>() == 30);
  CHECK(fv[1].get<int>() == 5);
}

TEST_CASE("riemann and periodic commands") {
  RunConfig rc;
  rc.gamma = 1.4;
  rc.left_rho = 1.0;
  rc.left_v = 0.0;
  rc.right_rho = 0.125;
  rc.right_v = 0.0;
  rc.rays = 32;
  rc.out_dir = fresh_dir("riemann");
  CHECK(cmd_riemann(rc) == kExitOk);
  CHECK(fs::exists(rc.out_dir + "/rays.csv"));

  RunConfig bad = rc;
  bad.left_rho = -1.0;
  CHECK(cmd_riemann(bad) == kExitConfig);

  RunConfig pc;
  pc.nx = 6;
  pc.bigM = 2.0;
  pc.forcing_kind = "none";
  pc.tol = 1e-10;
  pc.max_iter = 10;
  pc.out_dir = fresh_dir("periodic_steady");
  CHECK(cmd_periodic(pc) == kExitOk);
  json rep = read_json(pc.out_dir + "/fixed_point.json");
  CHECK(rep["converged"].get<bool>());
  CHECK(rep["iterations"].get<int>() <= 2);
  CHECK(fs::exists(pc.out_dir + "/history.csv"));
  CHECK(fs::exists(pc.out_dir + "/orbit.csv"));

  RunConfig pc0 = pc;
  pc0.max_iter = 0;
  pc0.out_dir = fresh_dir("periodic_budget");
  CHECK(cmd_periodic(pc0) == kExitDivergence);
}

TEST_CASE("missing inputs exit with the config code") {
  RunConfig rc;
  rc.forcing_kind = "file";
  rc.forcing_file = "/tmp/definitely_missing_forcing.csv";
  rc.out_dir = fresh_dir("missing_forcing");
  CHECK(cmd_simulate(rc) == kExitConfig);

  RunConfig dc;
  dc.trajectory_file = "/tmp/definitely_missing_traj.csv";
  dc.out_dir = fresh_dir("missing_traj");
  CHECK(cmd_diagnose(dc) == kExitConfig);

  RunConfig rc2;
  rc2.gamma = 0.5;
  CHECK(cmd_simulate(rc2) == kExitConfig);
}

TEST_CASE("forcing above the configured bound warns but proceeds") {
  // table with sup-norm 0.5 against kappa = 0.1
  std::string table = "/tmp/euler1d_big_forcing.csv";
  {
    std::ofstream out(table);
    out << "t,x,F\n";
    for (double t : {0.0, 0.5, 1.0}) {
      double factor = t == 0.5 ? 0.5 : 0.0;
      for (double x : {0.0, 0.5, 1.0}) out << t << ',' << x << ',' << factor * x << '\n';
    }
  }
  RunConfig rc;
  rc.nx = 6;
  rc.bigM = 4.0;
  rc.kappa = 0.1;
  rc.forcing_kind = "file";
  rc.forcing_file = table;
  rc.out_dir = fresh_dir("big_forcing");
  CHECK(cmd_simulate(rc) == kExitOk);
}

TEST_CASE("config file seeds the binary and flags override it") {
  std::string cfg = "/tmp/euler1d_spawn_cfg.ini";
  {
    std::ofstream out(cfg);
    out << "[run]\nnx = 6\nout = /tmp/euler1d_test_spawn_cfg\n"
        << "[constants]\nbigM = 4.0\n";
  }
  std::string binary = EULER1D_BINARY_PATH;
  fresh_dir("spawn_cfg");
  int rc = std::system(
      (binary + " simulate --config " + cfg + " --stride 50 >/dev/null 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(rc) == kExitOk);
  GridSpec g = build_grid(6, 4.0);
  std::vector<StaggeredProfile> snaps =
      read_trajectory("/tmp/euler1d_test_spawn_cfg/trajectory.csv", g);
  CHECK(snaps.back().n == g.steps_per_period());

  // flag override: --nx 8 wins over the config file's 6
  fs::remove_all("/tmp/euler1d_test_spawn_cfg");
  int rc2 = std::system(
      (binary + " simulate --config " + cfg + " --nx 8 >/dev/null 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(rc2) == kExitOk);
  GridSpec g8 = build_grid(8, 4.0);
  std::vector<StaggeredProfile> snaps8 =
      read_trajectory("/tmp/euler1d_test_spawn_cfg/trajectory.csv", g8);
  CHECK(snaps8.front().size() == 8);
}

TEST_CASE("binary honors exit codes") {
  std::string binary = EULER1D_BINARY_PATH;
  std::string out = fresh_dir("spawn");
  std::string base = binary + " >/dev/null 2>&1";

  int rc_ok = std::system((binary + " riemann --left 1 0 --right 0.5 0 >" + out +
                           "/riemann.txt 2>/dev/null")
                              .c_str());
  CHECK(WEXITSTATUS(rc_ok) == kExitOk);

  int rc_cfg = std::system((binary + " simulate --gamma 9 >/dev/null 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(rc_cfg) == kExitConfig);

  int rc_none = std::system(base.c_str());
  CHECK(WEXITSTATUS(rc_none) != kExitOk);

  std::ifstream printed(out + "/riemann.txt");
  std::string first;
  std::getline(printed, first);
  CHECK(first.rfind("pattern:", 0) == 0);
}
