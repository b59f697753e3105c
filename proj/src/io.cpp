#include "euler1d/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "euler1d/errors.hpp"

namespace euler1d {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << contents;
  if (!out) throw ConfigError("write failed: " + path);
}

void write_trajectory(const std::string& path, const std::vector<StaggeredProfile>& snapshots,
                      const GridSpec& g, const GasParams& gp) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << "n,t,j,x,rho,m,v,z,w\n";
  for (const StaggeredProfile& p : snapshots) {
    for (int i = 0; i < p.size(); ++i) {
      int j = p.j_of(i);
      const GasState& u = p.cells[i];
      RiemannPair inv = invariants_of(u, gp);
      out << p.n << ',' << format_double(g.t(p.n)) << ',' << j << ','
          << format_double(g.x(j)) << ',' << format_double(u.rho) << ','
          << format_double(u.mom) << ',' << format_double(velocity(u)) << ','
          << format_double(inv.z) << ',' << format_double(inv.w) << '\n';
    }
  }
  if (!out) throw ConfigError("write failed: " + path);
}

std::vector<StaggeredProfile> read_trajectory(const std::string& path, const GridSpec& g) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open trajectory: " + path);

  std::vector<StaggeredProfile> profiles;
  std::vector<bool> seen;
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) throw ConfigError("trajectory is empty: " + path);
  ++lineno;
  if (line.rfind("n,t,j,x,rho,m,v,z,w", 0) != 0)
    throw ConfigError("trajectory " + path + ": bad header at line 1");

  auto fail = [&](const std::string& what) {
    throw ConfigError("trajectory " + path + ": " + what + " at line " + std::to_string(lineno));
  };
  auto finish_level = [&]() {
    if (profiles.empty()) return;
    for (std::size_t k = 0; k < seen.size(); ++k) {
      if (!seen[k]) fail("incomplete level " + std::to_string(profiles.back().n));
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    long n;
    int j;
    double t, x, rho, m, v, z, w;
    char c;
    if (!(ls >> n >> c >> t >> c >> j >> c >> x >> c >> rho >> c >> m >> c >> v >> c >> z >> c >>
          w))
      fail("malformed row");
    if (profiles.empty() || profiles.back().n != n) {
      if (!profiles.empty() && n <= profiles.back().n) fail("levels must be increasing");
      finish_level();
      profiles.push_back(StaggeredProfile::zeros(n, g.nx));
      seen.assign(profiles.back().size(), false);
    }
    StaggeredProfile& p = profiles.back();
    int i;
    try {
      i = p.index_of_j(j);
    } catch (const std::out_of_range&) {
      fail("index " + std::to_string(j) + " not in J_n");
      return {};  // unreachable
    }
    if (seen[i]) fail("duplicate cell " + std::to_string(j));
    if (rho < 0.0) fail("negative density");
    seen[i] = true;
    p.cells[i] = {rho, m};
  }
  finish_level();
  if (profiles.empty()) throw ConfigError("trajectory " + path + ": no data rows");
  return profiles;
}

}  // namespace euler1d
