#include <algorithm>
#include <cmath>
#include <vector>

#include "cfgreens/dirac.hpp"
#include "cfgreens/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cfgreens;
using namespace testing_support;

namespace {

int interior_nodes(const RadialOrbital& o) {
  // Ignore the far tail where P has decayed to rounding noise.
  double pmax = 0.0;
  for (double p : o.P) pmax = std::max(pmax, std::fabs(p));
  int nodes = 0;
  double prev = 0.0;
  for (double p : o.P) {
    if (std::fabs(p) < 1e-10 * pmax) continue;
    if (prev != 0.0 && (p > 0) != (prev > 0)) ++nodes;
    prev = p;
  }
  return nodes;
}

double norm(const RadialOrbital& a, const RadialOrbital& b, const RadialGrid& g) {
  std::vector<double> v(a.P.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.P[i] * b.P[i] + a.Q[i] * b.Q[i];
  return g.integrate(v);
}

}  // namespace

TEST_CASE("Sommerfeld formula") {
  CHECK(sommerfeld_energy(1.0, 1, -1) == doctest::Approx(-0.50000665659748375).epsilon(1e-14));
  CHECK(sommerfeld_energy(79.0, 1, -1) == doctest::Approx(-3434.5868285957172).epsilon(1e-14));
  CHECK(sommerfeld_energy(20.0, 3, -2) == doctest::Approx(-22.261780870748339).epsilon(1e-14));
  for (double z : {20.0, 79.0}) CHECK(sommerfeld_energy(z, 2, 1) == sommerfeld_energy(z, 2, -1));
  double e = sommerfeld_energy(1e-6, 1, -1);
  CHECK(e < 0.0);
  CHECK(e > -1e-12);
  // Leading fine-structure correction for hydrogen 1s is -alpha^2 / 8.
  const double a2 = 1.0 / (137.0359895 * 137.0359895);
  CHECK(sommerfeld_energy(1.0, 1, -1) == doctest::Approx(-0.5 - 0.125 * a2).epsilon(1e-9));
  CHECK_THROWS_AS(sommerfeld_energy(140.0, 1, -1), DomainError);
  CHECK_THROWS_AS(sommerfeld_energy(1.0, 1, 1), DomainError);
}

TEST_CASE("bound states of point-Coulomb potentials match the Sommerfeld energies") {
  RadialGrid g = fine_grid();
  for (double z : {1.0, 20.0, 79.0}) {
    PiecewiseCharge pw = coulomb(z, g);
    for (int kappa : {-1, 1, -2}) {
      for (int n = orbital_l(kappa) + 1; n <= 3; ++n) {
        RadialOrbital o = solve_bound(pw, kappa, n);
        INFO("Z " << z << " n " << n << " kappa " << kappa);
        CHECK(std::fabs(o.energy / sommerfeld_energy(z, n, kappa) - 1.0) <= 1e-8);
        CHECK(o.n == n);
        CHECK(o.kappa == kappa);
        CHECK(norm(o, o, g) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(interior_nodes(o) == n - orbital_l(kappa) - 1);
        CHECK(o.P[5] > 0.0);
      }
    }
  }
}

TEST_CASE("same-kappa states are orthogonal") {
  RadialGrid g = fine_grid();
  for (double z : {1.0, 79.0}) {
    PiecewiseCharge pw = coulomb(z, g);
    RadialOrbital a = solve_bound(pw, -1, 1);
    RadialOrbital b = solve_bound(pw, -1, 2);
    CHECK(std::fabs(norm(a, b, g)) <= 1e-6);
  }
  PiecewiseCharge scr = screened_gold_on(g);
  RadialOrbital a = solve_bound(scr, 1, 2);
  RadialOrbital b = solve_bound(scr, 1, 3);
  CHECK(std::fabs(norm(a, b, g.with_mtp(scr.grid().mtp()))) <= 1e-6);
}

TEST_CASE("small component is small for hydrogen") {
  RadialGrid g = standard_grid();
  RadialOrbital o = solve_bound(coulomb(1.0, g), -1, 1);
  auto amax = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
  };
  CHECK(amax(o.Q) / amax(o.P) <= 0.02);
}

TEST_CASE("levels of a screened potential") {
  RadialGrid g = standard_grid();
  PiecewiseCharge pw = screened_gold_on(g);
  double prev = -HUGE_VAL;
  for (int n = 1; n <= 3; ++n) {
    RadialOrbital o = solve_bound(pw, -1, n);
    CHECK(o.energy > prev);
    CHECK(interior_nodes(o) == n - 1);
    prev = o.energy;
  }
  // 4s reaches past the end of the table.
  CHECK_THROWS_AS(solve_bound(pw, -1, 4), DomainError);
  // Screening lifts every level above the bare-nucleus value.
  CHECK(solve_bound(pw, -1, 1).energy > sommerfeld_energy(79.0, 1, -1));
}

TEST_CASE("solver errors") {
  RadialGrid g = standard_grid();
  CHECK_THROWS_AS(solve_bound(coulomb(1.0, g), -2, 1), DomainError);
  CHECK_THROWS_AS(solve_bound(coulomb(1.0, g), 0, 1), DomainError);
  // A hydrogen 3s orbital does not fit into r < 2.
  RadialGrid small = g.with_mtp(g.interval_of(2.0));
  CHECK_THROWS_AS(solve_bound(coulomb(1.0, small), -1, 3), DomainError);
}
