#pragma once

#include <vector>

#include "cfgreens/constants.hpp"
#include "cfgreens/potential.hpp"

namespace cfgreens {

struct RadialOrbital {
  int n = 0;
  int kappa = 0;
  double energy = 0.0;
  // Large and small components on nodes 0..mtp-1.
  std::vector<double> P;
  std::vector<double> Q;
};

int orbital_l(int kappa);

// Bound state (n, kappa) of the radial Dirac equation in the piecewise charge,
// normalized with the grid quadrature and positive near the origin.
RadialOrbital solve_bound(const PiecewiseCharge& pw, int kappa, int n,
                          const PhysicalConstants& consts = {});

// Point-Coulomb Dirac eigenvalue with the rest energy removed.
double sommerfeld_energy(double Z, int n, int kappa, const PhysicalConstants& consts = {});

}  // namespace cfgreens
