#pragma once

#include "cfgreens/scaled.hpp"

namespace cfgreens {

struct SpecialFnResult {
  double value = 0.0;
  double est_rel_error = 0.0;
};

// Result whose magnitude may lie outside the double range.
struct ScaledResult {
  Scaled value;
  double est_rel_error = 0.0;
};

// Results with est_rel_error above this are not trusted by callers.
inline constexpr double kSpecfunTrustLimit = 1e-9;

struct SignedLogGamma {
  double log_abs = 0.0;
  int sign = 1;
};

double log_gamma(double x);
// ln|Gamma(x)| and the sign of Gamma(x) for any x that is not a pole.
SignedLogGamma log_gamma_signed(double x);

SpecialFnResult kummer_m(double a, double b, double z);
ScaledResult kummer_m_scaled(double a, double b, double z);
SpecialFnResult kummer_m_deriv(double a, double b, double z);
ScaledResult kummer_m_deriv_scaled(double a, double b, double z);

SpecialFnResult tricomi_u(double a, double b, double z);
ScaledResult tricomi_u_scaled(double a, double b, double z);
SpecialFnResult tricomi_u_deriv(double a, double b, double z);
ScaledResult tricomi_u_deriv_scaled(double a, double b, double z);

double sph_bessel_j(int L, double x);

}  // namespace cfgreens
