#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace cfgreens {

// A real number held as m * 2^k with 0.5 <= |m| < 1 (or m == 0). Products and
// quotients only round the mantissa, so exponents of size 1e8 lose nothing.
struct Scaled {
  double m = 0.0;
  std::int64_t k = 0;

  static Scaled from(double v) { return Scaled{v, 0}.normalized(); }

  // e^x; the split x = j ln2 + f uses a two-part ln2 so large x stays exact.
  static Scaled exp(double x) {
    if (!std::isfinite(x)) return x > 0 ? Scaled{x, 0} : Scaled{};
    constexpr double ln2_hi = 6.93147180369123816490e-01;
    constexpr double ln2_lo = 1.90821492927058770002e-10;
    constexpr double inv_ln2 = 1.44269504088896338700;
    double j = std::nearbyint(x * inv_ln2);
    double f = (x - j * ln2_hi) - j * ln2_lo;
    return Scaled{std::exp(f), static_cast<std::int64_t>(j)}.normalized();
  }

  bool is_zero() const { return m == 0.0; }
  int sign() const { return (m > 0) - (m < 0); }
  // ln|x|; -inf for zero.
  double log_abs() const {
    constexpr double ln2 = 0.69314718055994530942;
    return is_zero() ? -HUGE_VAL : std::log(std::fabs(m)) + static_cast<double>(k) * ln2;
  }
  double value() const {
    if (is_zero()) return 0.0;
    if (k > 4000) return std::copysign(HUGE_VAL, m);
    if (k < -4000) return std::copysign(0.0, m);
    return std::ldexp(m, static_cast<int>(k));
  }

  Scaled normalized() const {
    if (m == 0.0 || !std::isfinite(m)) return {m, m == 0.0 ? 0 : k};
    int ex = 0;
    double fr = std::frexp(m, &ex);
    return {fr, k + ex};
  }
};

inline Scaled operator-(Scaled a) { return {-a.m, a.k}; }

inline Scaled operator*(Scaled a, Scaled b) { return Scaled{a.m * b.m, a.k + b.k}.normalized(); }
inline Scaled operator*(Scaled a, double b) { return a * Scaled::from(b); }
inline Scaled operator*(double b, Scaled a) { return a * b; }

inline Scaled operator/(Scaled a, Scaled b) { return Scaled{a.m / b.m, a.k - b.k}.normalized(); }
inline Scaled operator/(Scaled a, double b) { return a / Scaled::from(b); }

inline Scaled operator+(Scaled a, Scaled b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (a.k < b.k) std::swap(a, b);
  std::int64_t d = a.k - b.k;
  if (d > 1100) return a;
  return Scaled{a.m + std::ldexp(b.m, -static_cast<int>(d)), a.k}.normalized();
}

inline Scaled operator-(Scaled a, Scaled b) { return a + (-b); }

// a / b as a plain double (0 or inf when out of range).
inline double ratio(Scaled a, Scaled b) { return (a / b).value(); }

}  // namespace cfgreens
