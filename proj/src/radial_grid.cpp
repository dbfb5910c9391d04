#include "cfgreens/radial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfgreens/errors.hpp"

namespace cfgreens {

RadialGrid RadialGrid::build(double rnt, double h, int n, double hp) {
  if (hp != 0.0) throw UnsupportedGridError("grid: only hp = 0 is supported");
  if (!(rnt > 0.0) || !std::isfinite(rnt)) throw DomainError("grid: rnt must be positive");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid: h must be positive");
  if (n < 10) throw DomainError("grid: n must be at least 10");
  RadialGrid g;
  g.rnt_ = rnt;
  g.h_ = h;
  g.r_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) g.r_[static_cast<size_t>(i)] = rnt * std::expm1(i * h);
  g.mtp_ = n;
  g.compute_weights();
  return g;
}

RadialGrid RadialGrid::with_mtp(int mtp) const {
  if (mtp < 3 || mtp > n())
    throw DomainError("grid: mtp must lie in [3, " + std::to_string(n()) + "]");
  RadialGrid g = *this;
  g.mtp_ = mtp;
  g.compute_weights();
  return g;
}

void RadialGrid::compute_weights() {
  w_.assign(static_cast<size_t>(mtp_), 0.0);
  for (int i = 0; i + 1 < mtp_; ++i) {
    double half = 0.5 * (r(i + 1) - r(i));
    w_[static_cast<size_t>(i)] += half;
    w_[static_cast<size_t>(i + 1)] += half;
  }
}

double RadialGrid::integrate(std::span<const double> values) const {
  if (static_cast<int>(values.size()) != mtp_)
    throw DomainError("integrate: expected " + std::to_string(mtp_) + " values, got " +
                      std::to_string(values.size()));
  double s = 0.0;
  for (int i = 0; i < mtp_; ++i) s += w_[static_cast<size_t>(i)] * values[static_cast<size_t>(i)];
  return s;
}

int RadialGrid::interval_of(double x) const {
  auto end = r_.begin() + mtp_;
  auto it = std::upper_bound(r_.begin(), end, x);
  int i = static_cast<int>(it - r_.begin()) - 1;
  return std::clamp(i, 0, mtp_ - 2);
}

double RadialGrid::interp_linear(std::span<const double> values, double x) const {
  if (static_cast<int>(values.size()) < mtp_) throw DomainError("interp_linear: too few values");
  if (!(x >= 0.0) || x > r_max()) throw DomainError("interp_linear: r outside [0, r_max]");
  int i = interval_of(x);
  double r0 = r(i);
  double r1 = r(i + 1);
  double f0 = values[static_cast<size_t>(i)];
  double f1 = values[static_cast<size_t>(i + 1)];
  if (x == r0) return f0;
  if (x == r1) return f1;
  double theta = (x - r0) / (r1 - r0);
  return f0 + theta * (f1 - f0);
}

int RadialGrid::find_node(double x) const {
  if (x == 0.0) return 0;
  int i = interval_of(x);
  for (int j = std::max(0, i - 1); j <= std::min(mtp_ - 1, i + 2); ++j)
    if (std::fabs(r(j) - x) <= 1e-12 * std::fabs(x)) return j;
  return -1;
}

bool RadialGrid::same_nodes(const RadialGrid& other) const {
  return rnt_ == other.rnt_ && h_ == other.h_ && mtp_ == other.mtp_;
}

}  // namespace cfgreens
