#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cfgreens/greens.hpp"
#include "cfgreens/potential.hpp"
#include "cfgreens/radial_grid.hpp"
#include "cfgreens/specfun.hpp"

namespace testing_support {

using namespace cfgreens;

inline RadialGrid standard_grid() { return RadialGrid::build(RadialGrid::kDefaultRnt, 0.0625, 390); }
inline RadialGrid fine_grid() { return RadialGrid::build(RadialGrid::kDefaultRnt, 0.03125, 780); }

inline PiecewiseCharge coulomb(double z, const RadialGrid& g) { return linearize(coulomb_charge(z), g); }

// Neutral-atom-like screening of a gold nucleus, tabulated out to r = 5 a.u.
inline ChargeSpec screened_gold() {
  std::vector<double> r;
  std::vector<double> z;
  for (int i = 0; i <= 400; ++i) {
    double x = 5.0 * std::pow(i / 400.0, 2.0);
    r.push_back(x);
    z.push_back(1.0 + 78.0 * (0.6 * std::exp(-x / 0.05) + 0.4 * std::exp(-x / 0.6)));
  }
  return tabulated_charge(r, z);
}

inline PiecewiseCharge screened_gold_on(const RadialGrid& g) {
  int mtp = 0;
  while (mtp < g.n() && g.r(mtp) <= 5.0) ++mtp;
  return linearize(screened_gold(), g.with_mtp(mtp));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(integer(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

// Parameters as they arise in one interval of a Green's function build.
struct ReachedPoint {
  double a = 0.0;
  double b = 0.0;
  double x = 0.0;
};

inline ReachedPoint reached_point(Rng& rng) {
  static const std::vector<int> kappas{-1, 1, -2, 2, -3, 3, -4};
  for (;;) {
    const double z = rng.log_uniform(1.0, 100.0);
    const int kappa = rng.pick(kappas);
    const double e = -rng.log_uniform(0.05, 5000.0);
    const double slope = rng.integer(0, 1) ? 0.0 : -rng.uniform(0.0, 0.5 * std::fabs(e));
    const double r = rng.log_uniform(1e-5, 200.0);
    IntervalParams p = interval_params(z, slope, e, kappa);
    const double a = rng.integer(0, 1) ? -p.t : 1.0 - p.t;
    // Skip the immediate neighbourhood of bound-state poles.
    if (a <= 0.5 && std::fabs(a - std::nearbyint(a)) < 1e-6) continue;
    ReachedPoint pt{a, 2.0 * p.s + 1.0, 2.0 * p.q * r};
    if (pt.x > 1e5) continue;
    return pt;
  }
}

inline double rel_diff(const Scaled& a, const Scaled& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  const Scaled big = a.log_abs() > b.log_abs() ? a : b;
  return std::fabs(ratio(a - b, big));
}

// M U' - M' U against -Gamma(b)/Gamma(a) x^-b e^x.
inline double wronskian_residual(double a, double b, double x) {
  Scaled m = kummer_m_scaled(a, b, x).value;
  Scaled mp = kummer_m_deriv_scaled(a, b, x).value;
  Scaled u = tricomi_u_scaled(a, b, x).value;
  Scaled up = tricomi_u_deriv_scaled(a, b, x).value;
  Scaled lhs = m * up - mp * u;
  SignedLogGamma ga = log_gamma_signed(a);
  Scaled rhs = -Scaled::exp(log_gamma(b) - ga.log_abs - b * std::log(x) + x) * static_cast<double>(ga.sign);
  return std::fabs(ratio(lhs - rhs, rhs));
}

// (b-a) M(a-1) + (2a-b+x) M(a) - a M(a+1), relative to the largest term.
inline double contiguous_residual(double a, double b, double x) {
  Scaled t1 = kummer_m_scaled(a - 1.0, b, x).value * (b - a);
  Scaled t2 = kummer_m_scaled(a, b, x).value * (2.0 * a - b + x);
  Scaled t3 = kummer_m_scaled(a + 1.0, b, x).value * (-a);
  Scaled mag = t1;
  for (const Scaled& t : {t2, t3})
    if (t.log_abs() > mag.log_abs()) mag = t;
  return std::fabs(ratio(t1 + t2 + t3, mag));
}

// Fourth-order central difference against the analytic derivative; which = 'M' or 'U'.
inline double derivative_residual(char which, double a, double b, double x) {
  auto f = [&](double z) { return which == 'M' ? kummer_m_scaled(a, b, z).value : tricomi_u_scaled(a, b, z).value; };
  Scaled d = which == 'M' ? kummer_m_deriv_scaled(a, b, x).value : tricomi_u_deriv_scaled(a, b, x).value;
  const double h = 1e-2 * std::min(1.0, x) / (std::sqrt(1.0 + std::fabs(a)) * (1.0 + std::fabs(b)));
  Scaled fd = ((f(x + h) - f(x - h)) * 8.0 - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h);
  // Scale for the comparison: the derivative, or the function times 1/x when the derivative is near a zero.
  Scaled scale = f(x) / std::max(x, 1.0);
  Scaled ref = d.log_abs() > scale.log_abs() ? d : scale;
  return std::fabs(ratio(fd - d, ref));
}

// Constant charge whose intercept alternates by one ulp between intervals, so
// that neighbouring intervals cannot share local solutions.
inline PiecewiseCharge jittered_coulomb(double z, const RadialGrid& g) {
  std::vector<double> z0(static_cast<size_t>(g.mtp() - 1), z);
  for (size_t i = 1; i < z0.size(); i += 2) z0[i] = std::nextafter(z, 2.0 * z);
  return PiecewiseCharge(g, z0, std::vector<double>(z0.size(), 0.0));
}

// Largest relative difference of all four components over all node pairs.
// The diagonal gLS and gSL hold the mean of two one-sided values of opposite
// sign that nearly cancel far out; those entries are compared against the
// size of the one-sided values instead of their mean.
inline double component_deviation(const GreensFunction& a, const GreensFunction& b) {
  const int mtp = a.mtp();
  const FundamentalPair& fp = a.pair();
  double worst = 0.0;
  for (int i = 0; i < mtp; ++i)
    for (int j = 0; j < mtp; ++j) {
      Components x = a.at_nodes(i, j);
      Components y = b.at_nodes(i, j);
      double diag_scale = 0.0;
      if (i == j && i > 0) {
        const size_t k = static_cast<size_t>(i);
        diag_scale = std::fabs((a.norm_c_scaled() * fp.wL[k] * fp.mS[k]).value());
      }
      auto dev = [&](double u, double v, bool mean) {
        double scale = std::max(std::fabs(u), std::fabs(v));
        if (mean) scale = std::max(scale, diag_scale);
        if (scale < 1e-280) return;
        worst = std::max(worst, std::fabs(u - v) / scale);
      };
      dev(x.gLL, y.gLL, false);
      dev(x.gLS, y.gLS, true);
      dev(x.gSL, y.gSL, true);
      dev(x.gSS, y.gSS, false);
    }
  return worst;
}

}  // namespace testing_support
