#pragma once

#include "cfgreens/dirac.hpp"
#include "cfgreens/greens.hpp"

namespace cfgreens {

enum class Component { L, S };

struct MatrixElementSpec {
  double k = 0.0;
  double ktilde = 0.0;
  int Lambda = 0;
  int LambdaTilde = 0;
  Component Tbeta = Component::L;
  Component T = Component::L;
  Component Ttilde = Component::L;
  Component Talpha = Component::L;
};

// Double radial integral of orbital beta, j_Lambda(k r), one Green's function
// component, j_LambdaTilde(ktilde r') and orbital alpha.
double radial_matrix_element(const RadialOrbital& beta, const GreensFunction& gf,
                             const RadialOrbital& alpha, const MatrixElementSpec& spec);
double radial_matrix_element_serial(const RadialOrbital& beta, const GreensFunction& gf,
                                    const RadialOrbital& alpha, const MatrixElementSpec& spec);

}  // namespace cfgreens
