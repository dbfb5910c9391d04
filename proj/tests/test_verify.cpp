#include <algorithm>
#include <cmath>

#include "cfgreens/dirac.hpp"
#include "cfgreens/errors.hpp"
#include "cfgreens/verify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cfgreens;
using namespace testing_support;

namespace {

double amax(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

int sign_changes(const std::vector<double>& v, double floor) {
  int n = 0;
  double last = 0.0;
  for (double x : v) {
    if (std::fabs(x) <= floor) continue;
    if (last != 0.0 && (x > 0) != (last > 0)) ++n;
    last = x;
  }
  return n;
}

}  // namespace

TEST_CASE("hydrogen 1s is reproduced from the Green's function") {
  RadialGrid g = standard_grid();
  PiecewiseCharge pw = coulomb(1.0, g);
  GreensFunction gf = build_greens(-0.6, -1, pw);
  RadialOrbital o = solve_bound(pw, -1, 1);
  ProjectedOrbital p = project_orbital(gf, o);
  double worst = 0.0;
  for (size_t i = 0; i < o.P.size(); ++i) worst = std::max(worst, std::fabs(p.P[i] - o.P[i]));
  CHECK(worst / amax(o.P) <= 1e-2);
  CHECK(sign_changes(p.P, 1e-6 * amax(p.P)) == sign_changes(o.P, 1e-6 * amax(o.P)));

  RadialOrbital o2 = solve_bound(pw, -1, 2);
  ProjectedOrbital p2 = project_orbital(gf, o2);
  CHECK(sign_changes(p2.P, 1e-6 * amax(p2.P)) == 1);
}

TEST_CASE("projection: parallel equals serial, linear in the orbital") {
  RadialGrid g = standard_grid();
  PiecewiseCharge pw = coulomb(79.0, g);
  GreensFunction gf = build_greens(-367.5, -1, pw);
  RadialOrbital o = solve_bound(pw, -1, 2);
  ProjectedOrbital a = project_orbital(gf, o);
  ProjectedOrbital b = project_orbital_serial(gf, o);
  CHECK(a.P == b.P);
  CHECK(a.Q == b.Q);

  Rng rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    double lambda = rng.uniform(-3.0, 3.0);
    RadialOrbital s = o;
    for (auto& x : s.P) x *= lambda;
    for (auto& x : s.Q) x *= lambda;
    ProjectedOrbital c = project_orbital(gf, s);
    double scale = amax(a.P) + amax(a.Q);
    for (size_t i = 0; i < a.P.size(); ++i) {
      CHECK(std::fabs(c.P[i] - lambda * a.P[i]) <= 1e-14 * std::fabs(lambda) * scale);
      CHECK(std::fabs(c.Q[i] - lambda * a.Q[i]) <= 1e-14 * std::fabs(lambda) * scale);
    }
  }
}

TEST_CASE("projection errors") {
  RadialGrid g = standard_grid();
  PiecewiseCharge pw = coulomb(1.0, g);
  GreensFunction gf = build_greens(-0.6, -1, pw);
  RadialOrbital p = solve_bound(pw, 1, 2);
  CHECK_THROWS_AS(project_orbital(gf, p), DomainError);
  RadialOrbital s = solve_bound(pw, -1, 1);
  s.energy = -0.6 + 1e-8;
  CHECK_THROWS_AS(project_orbital(gf, s), DomainError);
  RadialOrbital other = solve_bound(coulomb(1.0, fine_grid()), -1, 1);
  CHECK_THROWS_AS(project_orbital(gf, other), DomainError);
}

TEST_CASE("an exact reconstruction gives unit overlap and normalization") {
  RadialGrid g = standard_grid();
  RadialOrbital o = solve_bound(coulomb(20.0, g), -2, 3);
  ProjectedOrbital same{o.P, o.Q};
  CHECK(overlap_integral(o, same, g) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(normalization_integral(same, g) == doctest::Approx(1.0).epsilon(1e-12));
  ProjectedOrbital half{o.P, o.Q};
  for (auto& x : half.P) x *= 0.5;
  for (auto& x : half.Q) x *= 0.5;
  CHECK(overlap_integral(o, half, g) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(normalization_integral(half, g) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("gold 1s overlap on the standard grid") {
  RadialGrid g = standard_grid();
  AccuracyReport rep = check_accuracy(build_greens(-367.5, -1, coulomb(79.0, g)));
  REQUIRE(rep.orbitals.size() == 2);
  CHECK(rep.orbitals[0].n == 1);
  CHECK(rep.orbitals[1].n == 2);
  CHECK(std::fabs(rep.orbitals[0].overlap - 1.0) <= 1e-3);
  CHECK(std::fabs(rep.orbitals[1].overlap - 1.0) <= 1e-2);
  for (const auto& o : rep.orbitals) {
    CHECK(std::isfinite(o.overlap));
    CHECK(std::isfinite(o.normalization));
    CHECK(std::fabs(o.normalization - 1.0) <= 2e-2);
  }
  CHECK(std::isfinite(rep.jump_max_rel_dev));
  CHECK(rep.wronskian_rel_spread <= 1e-6);
}

// The 2s reconstruction on 390 nodes misses 1e-3 by about ten percent.
TEST_CASE("gold 2s overlap within 1e-3 on the standard grid" * doctest::should_fail()) {
  AccuracyReport rep = check_accuracy(build_greens(-367.5, -1, coulomb(79.0, standard_grid())));
  CHECK(std::fabs(rep.orbitals[1].overlap - 1.0) <= 1e-3);
}

TEST_CASE("normalization deviation shrinks under refinement") {
  for (auto [e, kappa] : {std::pair{-367.5, -1}, std::pair{-0.6, -1}}) {
    double z = e < -1.0 ? 79.0 : 1.0;
    AccuracyReport coarse = check_accuracy(build_greens(e, kappa, coulomb(z, standard_grid())));
    AccuracyReport fine = check_accuracy(build_greens(e, kappa, coulomb(z, fine_grid())));
    for (size_t k = 0; k < 2; ++k) {
      INFO("Z " << z << " n " << coarse.orbitals[k].n);
      CHECK(std::fabs(fine.orbitals[k].normalization - 1.0) * 2.0 <=
            std::fabs(coarse.orbitals[k].normalization - 1.0));
    }
  }
}

TEST_CASE("jump diagnostic") {
  RadialGrid g = standard_grid();
  GreensFunction gf = build_greens(-0.6, -1, coulomb(1.0, g));
  // The expected jump is close to -2 away from the nucleus.
  int j = g.find_node(1.0);
  CHECK(jump_expected(gf, j) == doctest::Approx(-2.0).epsilon(1e-3));
  std::vector<double> radii = jump_test_radii(gf);
  CHECK(radii.size() == 10);
  CHECK(std::is_sorted(radii.begin(), radii.end()));
  double coarse = jump_diagnostic(gf);
  CHECK(coarse <= 1e-2);
  GreensFunction fine = build_greens(-0.6, -1, coulomb(1.0, fine_grid()));
  CHECK(jump_diagnostic(fine, radii) < coarse);
  std::vector<double> off{0.5 * (g.r(100) + g.r(101))};
  CHECK_THROWS_AS(jump_diagnostic(gf, off), DomainError);
}

TEST_CASE("accuracy report entries are finite for several symmetries") {
  RadialGrid g = standard_grid();
  PiecewiseCharge pw = coulomb(79.0, g);
  for (auto [e, kappa] : {std::pair{-551.3, 2}, std::pair{-900.0, 1}, std::pair{-400.0, -2}}) {
    AccuracyReport rep = check_accuracy(build_greens(e, kappa, pw));
    INFO("kappa " << kappa);
    CHECK(rep.kappa == kappa);
    CHECK(rep.energy == e);
    for (const auto& o : rep.orbitals) {
      CHECK(std::isfinite(o.overlap));
      CHECK(std::isfinite(o.normalization));
      CHECK(std::fabs(o.overlap - 1.0) <= 5e-2);
    }
    CHECK(std::isfinite(rep.jump_max_rel_dev));
    CHECK(std::isfinite(rep.wronskian_rel_spread));
  }
}
