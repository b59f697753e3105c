#pragma once

#include <string>
#include <utility>
#include <vector>

#include "euler1d/gas.hpp"
#include "euler1d/mesh.hpp"

namespace euler1d {

/// Trajectory CSV with header "n,t,j,x,rho,m,v,z,w"; doubles are printed with
/// 17 significant digits so a read-back is bit-exact.
void write_trajectory(const std::string& path, const std::vector<StaggeredProfile>& snapshots,
                      const GridSpec& g, const GasParams& gp);

/// Parses a trajectory CSV back into profiles. Validates the header, the
/// index sets per level and monotone levels; throws ConfigError naming the
/// offending line.
std::vector<StaggeredProfile> read_trajectory(const std::string& path, const GridSpec& g);

void write_text_file(const std::string& path, const std::string& contents);

std::string format_double(double v);  // shortest round-trip-exact decimal

}  // namespace euler1d
