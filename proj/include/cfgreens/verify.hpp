#pragma once

#include <span>
#include <vector>

#include "cfgreens/dirac.hpp"
#include "cfgreens/greens.hpp"

namespace cfgreens {

struct ProjectedOrbital {
  std::vector<double> P;
  std::vector<double> Q;
};

// (E_n - E) * integral of the orbital against the Green's matrix, at every node r'.
ProjectedOrbital project_orbital(const GreensFunction& gf, const RadialOrbital& orb);
ProjectedOrbital project_orbital_serial(const GreensFunction& gf, const RadialOrbital& orb);

double overlap_integral(const RadialOrbital& orb, const ProjectedOrbital& proj, const RadialGrid& grid);
double normalization_integral(const ProjectedOrbital& proj, const RadialGrid& grid);

// Largest relative deviation of the one-sided jump of d gLL / dr across the
// diagonal from its analytic value, over 10 interior nodes.
double jump_diagnostic(const GreensFunction& gf);
// Same at the given radii, each of which must be a grid node.
double jump_diagnostic(const GreensFunction& gf, std::span<const double> radii);
// The radii used by the default overload.
std::vector<double> jump_test_radii(const GreensFunction& gf);
// Analytic jump of d gLL / dr (right minus left) at node j.
double jump_expected(const GreensFunction& gf, int j);

struct OrbitalCheck {
  int n = 0;
  int kappa = 0;
  double orbital_energy = 0.0;
  double overlap = 0.0;
  double normalization = 0.0;
};

struct AccuracyReport {
  double energy = 0.0;
  int kappa = 0;
  std::vector<OrbitalCheck> orbitals;
  double jump_max_rel_dev = 0.0;
  double wronskian_rel_spread = 0.0;

  double max_overlap_deviation() const;
};

// Tests against the `count` lowest bound states of the same kappa.
AccuracyReport check_accuracy(const GreensFunction& gf, int count = 2);

}  // namespace cfgreens
