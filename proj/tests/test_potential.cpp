#include <cmath>
#include <vector>

#include "cfgreens/errors.hpp"
#include "cfgreens/potential.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cfgreens;
using namespace testing_support;

namespace {

// Random screened charge: monotone decreasing from Z to Z - N on a random set of radii.
ChargeSpec random_table(Rng& rng, double r_end) {
  const double z = rng.uniform(2.0, 90.0);
  const double screened = rng.uniform(0.0, z - 1.0);
  const double width = rng.log_uniform(0.05, 3.0);
  std::vector<double> r{0.0};
  std::vector<double> zr{z};
  const int n = rng.integer(5, 200);
  for (int i = 1; i < n; ++i) r.push_back(r_end * std::pow(static_cast<double>(i) / (n - 1), 3.0));
  for (size_t i = 1; i < r.size(); ++i) zr.push_back(z - screened * -std::expm1(-r[i] / width));
  return tabulated_charge(r, zr);
}

}  // namespace

TEST_CASE("a straight line is recovered exactly") {
  RadialGrid g = standard_grid();
  RadialGrid small = g.with_mtp(150);
  ChargeSpec line = tabulated_charge({0.0, small.r_max()}, {79.0, 79.0 - 10.0 * small.r_max()});
  PiecewiseCharge pw = linearize(line, small);
  for (int i = 0; i < pw.intervals(); ++i) {
    CHECK(std::fabs(pw.z0(i) - 79.0) <= 1e-12 * 79.0 + 1e-12);
    CHECK(std::fabs(pw.z1(i) + 10.0) <= 1e-12 * 10.0 + 1e-10);
  }
}

TEST_CASE("Coulomb charge has zero slopes and constant intercepts") {
  RadialGrid g = standard_grid();
  PiecewiseCharge pw = coulomb(79.0, g);
  REQUIRE(pw.intervals() == g.mtp() - 1);
  for (int i = 0; i < pw.intervals(); ++i) {
    CHECK(pw.z1(i) == 0.0);
    CHECK(pw.z0(i) == 79.0);
  }
  CHECK(pw.max_charge() == 79.0);
}

TEST_CASE("linearize reproduces the source at every node") {
  Rng rng(21);
  RadialGrid full = standard_grid();
  for (int t = 0; t < 30; ++t) {
    const int mtp = rng.integer(50, full.n());
    RadialGrid g = full.with_mtp(mtp);
    ChargeSpec c = random_table(rng, g.r_max());
    PiecewiseCharge pw = linearize(c, g);
    for (int j = 0; j < mtp; ++j) CHECK(std::fabs(pw.at_node(j) - charge_at(c, g.r(j))) <= 1e-12);
    // Continuity: both neighbouring lines meet at interior nodes.
    for (int j = 1; j + 1 < mtp; ++j) {
      double left = pw.z0(j - 1) + pw.z1(j - 1) * g.r(j);
      double right = pw.z0(j) + pw.z1(j) * g.r(j);
      CHECK(std::fabs(left - right) <= 1e-12 * std::max(1.0, std::fabs(left)));
    }
  }
}

TEST_CASE("charge table validation") {
  CHECK_THROWS_AS(tabulated_charge({0.0, 1.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(tabulated_charge({0.1, 1.0}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(tabulated_charge({0.0, 1.0, 1.0}, {1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(tabulated_charge({0.0, 1.0}, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(tabulated_charge({0.0, 1.0}, {5.0, -1.0}), DomainError);
  CHECK_THROWS_AS(coulomb_charge(0.0), DomainError);
  CHECK_THROWS_AS(coulomb_charge(140.0), DomainError);
  ChargeSpec c = tabulated_charge({0.0, 1.0}, {5.0, 1.0});
  CHECK(charge_at(c, 0.5) == doctest::Approx(3.0));
  CHECK(charge_extent(c) == 1.0);
  CHECK(std::isinf(charge_extent(coulomb_charge(3.0))));
  CHECK_THROWS_AS(linearize(c, standard_grid()), DomainError);
}

TEST_CASE("energy validation") {
  RadialGrid g = standard_grid();
  PhysicalConstants consts;
  CHECK(validate_for_energy(coulomb(79.0, g), -367.5).ok());

  std::vector<double> z0(static_cast<size_t>(g.mtp() - 1), 79.0);
  std::vector<double> z1(static_cast<size_t>(g.mtp() - 1), 0.0);
  z1[100] = 400.0;
  ValidationReport steep = validate_for_energy(PiecewiseCharge(g, z0, z1), -367.5);
  CHECK_FALSE(steep.ok());
  REQUIRE(steep.slope_violations.size() == 1);
  CHECK(steep.slope_violations[0] == 100);
  CHECK(steep.describe().find("100") != std::string::npos);

  const double deep = -2.0 * consts.c * consts.c - 1.0;
  ValidationReport far = validate_for_energy(coulomb(79.0, g), deep);
  CHECK(static_cast<int>(far.energy_violations.size()) == g.mtp() - 1);
}
