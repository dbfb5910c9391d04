#include "cfgreens/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cfgreens/errors.hpp"
#include "cfgreens/io.hpp"

namespace cfgreens {

ChargeSpec coulomb_charge(double zeff) {
  if (!(zeff > 0.0) || !(zeff < 137.0))
    throw DomainError("coulomb charge must lie in (0, 137), got " + std::to_string(zeff));
  return CoulombCharge{zeff};
}

ChargeSpec tabulated_charge(std::vector<double> r, std::vector<double> z) {
  if (r.size() != z.size()) throw DomainError("charge table: radius and charge counts differ");
  if (r.size() < 2) throw DomainError("charge table: need at least two points");
  if (r.front() != 0.0) throw DomainError("charge table: first radius must be 0");
  for (size_t i = 0; i < r.size(); ++i) {
    if (!std::isfinite(r[i]) || !std::isfinite(z[i]))
      throw DomainError("charge table: non-finite entry at point " + std::to_string(i + 1));
    if (i > 0 && !(r[i] > r[i - 1]))
      throw DomainError("charge table: radii not strictly increasing at point " +
                        std::to_string(i + 1));
  }
  if (!(z.front() > 0.0))
    throw DomainError("charge table: Z(0) must be a positive point-nucleus charge");
  if (z.back() < 0.0) throw DomainError("charge table: boundary condition Z(r_max) >= 0 violated");
  return TabulatedCharge{std::move(r), std::move(z)};
}

ChargeSpec load_pot(const std::filesystem::path& path) { return read_pot(path); }

double charge_at(const ChargeSpec& charge, double r) {
  if (const auto* c = std::get_if<CoulombCharge>(&charge)) return c->zeff;
  const auto& t = std::get<TabulatedCharge>(charge);
  if (r < 0.0 || r > t.r.back() * (1.0 + 1e-14))
    throw DomainError("charge table does not cover r = " + std::to_string(r));
  if (r >= t.r.back()) return t.z.back();
  auto it = std::upper_bound(t.r.begin(), t.r.end(), r);
  size_t i = static_cast<size_t>(it - t.r.begin()) - 1;
  if (r == t.r[i]) return t.z[i];
  double theta = (r - t.r[i]) / (t.r[i + 1] - t.r[i]);
  return t.z[i] + theta * (t.z[i + 1] - t.z[i]);
}

double charge_extent(const ChargeSpec& charge) {
  if (std::holds_alternative<CoulombCharge>(charge)) return std::numeric_limits<double>::infinity();
  return std::get<TabulatedCharge>(charge).r.back();
}

PiecewiseCharge::PiecewiseCharge(RadialGrid grid, std::vector<double> z0, std::vector<double> z1)
    : grid_(std::move(grid)), z0_(std::move(z0)), z1_(std::move(z1)) {
  if (z0_.size() != z1_.size() || static_cast<int>(z0_.size()) != grid_.mtp() - 1)
    throw DomainError("piecewise charge: need mtp-1 intervals");
}

double PiecewiseCharge::at_node(int j) const {
  int i = j == 0 ? 0 : j - 1;
  return z0(i) + z1(i) * grid_.r(j);
}

double PiecewiseCharge::eval(double r) const {
  int i = grid_.interval_of(r);
  return z0(i) + z1(i) * r;
}

double PiecewiseCharge::max_charge() const {
  double m = 0.0;
  for (int j = 0; j < grid_.mtp(); ++j) m = std::max(m, at_node(j));
  return m;
}

PiecewiseCharge linearize(const ChargeSpec& charge, const RadialGrid& grid) {
  const int n = grid.mtp() - 1;
  std::vector<double> z0(static_cast<size_t>(n));
  std::vector<double> z1(static_cast<size_t>(n));
  if (const auto* c = std::get_if<CoulombCharge>(&charge)) {
    std::fill(z0.begin(), z0.end(), c->zeff);
    std::fill(z1.begin(), z1.end(), 0.0);
    return PiecewiseCharge(grid, std::move(z0), std::move(z1));
  }
  if (grid.r_max() > charge_extent(charge) * (1.0 + 1e-14))
    throw DomainError("charge table ends before the last tabulation point of the grid");
  const auto& t = std::get<TabulatedCharge>(charge);
  std::vector<double> zn(static_cast<size_t>(n + 1));
  for (int j = 0; j <= n; ++j) zn[static_cast<size_t>(j)] = charge_at(charge, grid.r(j));
  size_t seg = 0;
  for (int i = 0; i < n; ++i) {
    double ra = grid.r(i);
    double rb = grid.r(i + 1);
    while (seg + 2 < t.r.size() && t.r[seg + 1] <= ra) ++seg;
    if (rb <= t.r[seg + 1] * (1.0 + 1e-14)) {
      // Both nodes on one table segment: its line is the chord, without the
      // rounding of a difference quotient over a tiny interval.
      double slope = (t.z[seg + 1] - t.z[seg]) / (t.r[seg + 1] - t.r[seg]);
      z1[static_cast<size_t>(i)] = slope;
      z0[static_cast<size_t>(i)] = t.z[seg] - slope * t.r[seg];
      continue;
    }
    double za = zn[static_cast<size_t>(i)];
    double zb = zn[static_cast<size_t>(i + 1)];
    double slope = (zb - za) / (rb - ra);
    z1[static_cast<size_t>(i)] = slope;
    z0[static_cast<size_t>(i)] = za - slope * ra;
  }
  return PiecewiseCharge(grid, std::move(z0), std::move(z1));
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size() && i < 8; ++i) os << (i ? ", " : "") << v[i];
    if (v.size() > 8) os << ", ... (" << v.size() << " total)";
  };
  if (!slope_violations.empty()) {
    os << "charge slope not below |E| on intervals ";
    list(slope_violations);
  }
  if (!energy_violations.empty()) {
    if (!slope_violations.empty()) os << "; ";
    os << "E + z1 outside (-2c^2, 0) on intervals ";
    list(energy_violations);
  }
  return os.str();
}

ValidationReport validate_for_energy(const PiecewiseCharge& pw, double energy,
                                     const PhysicalConstants& consts) {
  ValidationReport rep;
  const double two_c2 = 2.0 * consts.c * consts.c;
  for (int i = 0; i < pw.intervals(); ++i) {
    double z1 = pw.z1(i);
    if (!(z1 < std::fabs(energy))) rep.slope_violations.push_back(i);
    double ep = energy + z1;
    if (!(ep < 0.0 && ep > -two_c2)) rep.energy_violations.push_back(i);
  }
  return rep;
}

}  // namespace cfgreens
