#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cfgreens/constants.hpp"
#include "cfgreens/io.hpp"
#include "cfgreens/radial_grid.hpp"

namespace cfgreens {

struct PotentialSource {
  bool coulomb = true;
  double zeff = 79.0;
  std::string path;
};

// "coulomb:<Z>" or "file:<path>".
PotentialSource parse_potential_source(const std::string& text);

struct GfRequest {
  double energy = 0.0;  // in RunRequest::unit
  std::string symmetry;
};

// "<E>:<symmetry>", split at the last colon.
GfRequest parse_gf_request(const std::string& text);

struct RunRequest {
  PotentialSource potential;
  double rnt = RadialGrid::kDefaultRnt;
  double h = RadialGrid::kDefaultH;
  int n = RadialGrid::kDefaultN;
  PhysicalConstants consts;
  std::vector<GfRequest> functions;
  EnergyUnit unit = EnergyUnit::eV;
  bool check = false;
  double check_threshold = 1e-2;
  std::string out_path;
  std::string save_pot_path;
};

int run(const RunRequest& request, std::ostream& out, std::ostream& err);

}  // namespace cfgreens
