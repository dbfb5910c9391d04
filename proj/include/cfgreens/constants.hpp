#pragma once

namespace cfgreens {

// Speed of light in atomic units; alpha = 1/c.
struct PhysicalConstants {
  double c = 137.0359895;
  double alpha() const { return 1.0 / c; }
};

}  // namespace cfgreens
