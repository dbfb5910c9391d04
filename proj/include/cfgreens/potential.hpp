#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "cfgreens/constants.hpp"
#include "cfgreens/radial_grid.hpp"

namespace cfgreens {

struct CoulombCharge {
  double zeff = 0.0;
};

// Z(r) tabulated on ascending radii starting at r = 0, linear in between.
struct TabulatedCharge {
  std::vector<double> r;
  std::vector<double> z;
};

using ChargeSpec = std::variant<CoulombCharge, TabulatedCharge>;

ChargeSpec coulomb_charge(double zeff);
// Validates the table (ascending radii from 0, Z(0) > 0, Z(last) >= 0).
ChargeSpec tabulated_charge(std::vector<double> r, std::vector<double> z);
ChargeSpec load_pot(const std::filesystem::path& path);

double charge_at(const ChargeSpec& charge, double r);
// Largest radius the charge is defined on (infinity for Coulomb).
double charge_extent(const ChargeSpec& charge);

// Z(r) = z0[i] + z1[i] r on [r_i, r_{i+1}], i = 0..mtp-2.
class PiecewiseCharge {
 public:
  PiecewiseCharge(RadialGrid grid, std::vector<double> z0, std::vector<double> z1);

  const RadialGrid& grid() const { return grid_; }
  int intervals() const { return static_cast<int>(z0_.size()); }
  double z0(int i) const { return z0_[static_cast<size_t>(i)]; }
  double z1(int i) const { return z1_[static_cast<size_t>(i)]; }
  const std::vector<double>& z0() const { return z0_; }
  const std::vector<double>& z1() const { return z1_; }

  // Z at node j, taken from the interval ending there (interval 0 at j = 0).
  double at_node(int j) const;
  double eval(double r) const;
  double max_charge() const;

 private:
  RadialGrid grid_;
  std::vector<double> z0_;
  std::vector<double> z1_;
};

PiecewiseCharge linearize(const ChargeSpec& charge, const RadialGrid& grid);

struct ValidationReport {
  // Intervals with z1 >= |E|.
  std::vector<int> slope_violations;
  // Intervals where E + z1 leaves (-2c^2, 0).
  std::vector<int> energy_violations;

  bool ok() const { return slope_violations.empty() && energy_violations.empty(); }
  std::string describe() const;
};

ValidationReport validate_for_energy(const PiecewiseCharge& pw, double energy,
                                     const PhysicalConstants& consts = {});

}  // namespace cfgreens
