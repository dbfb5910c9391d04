#include "cfgreens/dirac.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cfgreens/errors.hpp"

namespace cfgreens {
namespace {

using State = std::array<double, 2>;

struct Integrator {
  const PiecewiseCharge& pw;
  const RadialGrid& g;
  int kappa;
  double E;
  double alpha;

  State rhs(double tau, const State& y, int interval) const {
    const double r = g.rnt() * std::expm1(tau);
    const double drdt = r + g.rnt();
    const double Z = pw.z0(interval) + pw.z1(interval) * r;
    const double W = E + Z / r;
    const double D = 2.0 / alpha + alpha * W;
    return {drdt * (-kappa / r * y[0] + D * y[1]), drdt * (kappa / r * y[1] - alpha * W * y[0])};
  }

  int substeps(int interval) const {
    const double h = g.h();
    double lam = 0.0;
    for (int j : {interval, interval + 1}) {
      const double r = g.r(j);
      if (r <= 0.0) continue;
      const double Z = pw.z0(interval) + pw.z1(interval) * r;
      const double W = E + Z / r;
      const double k = std::sqrt(std::fabs(2.0 * W) + kappa * kappa / (r * r)) + std::abs(kappa) / r;
      lam = std::max(lam, (r + g.rnt()) * k);
    }
    return std::max(16, static_cast<int>(std::ceil(lam * h / 0.08)));
  }

  // Classical RK4 across interval [j, j+1] (dir = +1) or [j-1, j] (dir = -1).
  State step(int j, int dir, State y) const {
    const int interval = dir > 0 ? j : j - 1;
    const int ns = substeps(interval);
    const double dt = dir * g.h() / ns;
    double tau = j * g.h();
    for (int s = 0; s < ns; ++s) {
      State k1 = rhs(tau, y, interval);
      State y2{y[0] + 0.5 * dt * k1[0], y[1] + 0.5 * dt * k1[1]};
      State k2 = rhs(tau + 0.5 * dt, y2, interval);
      State y3{y[0] + 0.5 * dt * k2[0], y[1] + 0.5 * dt * k2[1]};
      State k3 = rhs(tau + 0.5 * dt, y3, interval);
      State y4{y[0] + dt * k3[0], y[1] + dt * k3[1]};
      State k4 = rhs(tau + dt, y4, interval);
      y[0] += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
      y[1] += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
      tau += dt;
    }
    return y;
  }
};

// Power series r^s sum (p_k, q_k) r^k at r for the first interval.
State origin_series(double r, double z0, double z1, double E, int kappa, double alpha) {
  const double s = std::sqrt(static_cast<double>(kappa) * kappa - alpha * alpha * z0 * z0);
  const double Wp = E + z1;
  const double az = alpha * z0;
  double p = 1.0;
  double q = kappa < 0 ? -az / (s - kappa) : (s + kappa) / az;
  double P = p;
  double Q = q;
  double rk = 1.0;
  for (int k = 1; k < 80; ++k) {
    const double A = (2.0 / alpha + alpha * Wp) * q;
    const double B = -alpha * Wp * p;
    const double det = k * (2.0 * s + k);
    const double pk = (A * (s + k - kappa) + az * B) / det;
    const double qk = ((s + k + kappa) * B - az * A) / det;
    p = pk;
    q = qk;
    rk *= r;
    P += p * rk;
    Q += q * rk;
    if (std::fabs(p * rk) < 1e-18 * std::fabs(P) && std::fabs(q * rk) < 1e-18 * std::fabs(Q)) break;
  }
  const double rs = std::pow(r, s);
  return {rs * P, rs * Q};
}

struct Shot {
  std::vector<double> P, Q;
  int nodes = 0;
  double dE = 0.0;
  double decay = 0.0;  // integral of the local decay rate from match point to the inward start
};

int sign_changes(const std::vector<double>& v, int from, int to) {
  int count = 0;
  double last = 0.0;
  double vmax = 0.0;
  for (int j = from; j <= to; ++j) vmax = std::max(vmax, std::fabs(v[static_cast<size_t>(j)]));
  for (int j = from; j <= to; ++j) {
    double x = v[static_cast<size_t>(j)];
    if (std::fabs(x) <= 1e-14 * vmax) continue;
    if (last != 0.0 && (x > 0) != (last > 0)) ++count;
    last = x;
  }
  return count;
}

Shot shoot(const PiecewiseCharge& pw, int kappa, int l, double E, const PhysicalConstants& consts) {
  const RadialGrid& g = pw.grid();
  const int mtp = g.mtp();
  const double alpha = consts.alpha();
  Integrator in{pw, g, kappa, E, alpha};

  auto local_q2 = [&](int j) {
    const double r = g.r(j);
    const double W = E + pw.at_node(j) / r - l * (l + 1) / (2.0 * r * r);
    return -2.0 * W;
  };

  int m = -1;
  for (int j = mtp - 2; j >= 2; --j)
    if (local_q2(j) < 0.0) {
      m = j;
      break;
    }
  if (m < 0) m = mtp / 2;
  m = std::clamp(m, 3, mtp - 4);

  Shot s;
  int jinf = mtp - 1;
  for (int j = m; j < mtp - 1; ++j) {
    double q2 = std::max(0.0, 0.5 * (local_q2(j) + local_q2(j + 1)));
    s.decay += std::sqrt(q2) * (g.r(j + 1) - g.r(j));
    if (s.decay > 60.0) {
      jinf = j + 1;
      break;
    }
  }
  jinf = std::max(jinf, m + 2);

  s.P.assign(static_cast<size_t>(mtp), 0.0);
  s.Q.assign(static_cast<size_t>(mtp), 0.0);
  State y = origin_series(g.r(1), pw.z0(0), pw.z1(0), E, kappa, alpha);
  s.P[1] = y[0];
  s.Q[1] = y[1];
  for (int j = 1; j < m; ++j) {
    y = in.step(j, +1, y);
    s.P[static_cast<size_t>(j + 1)] = y[0];
    s.Q[static_cast<size_t>(j + 1)] = y[1];
  }
  const double Pm = y[0];
  const double Qout = y[1];

  {
    const double r = g.r(jinf);
    const double Z = pw.at_node(jinf);
    const double W = E + Z / r;
    const double D = 2.0 / alpha + alpha * W;
    const double q = std::sqrt(std::max(local_q2(jinf), 1e-300));
    y = {1e-150, (-q + kappa / r) * 1e-150 / D};
  }
  std::vector<double> Pin(static_cast<size_t>(mtp), 0.0);
  std::vector<double> Qin(static_cast<size_t>(mtp), 0.0);
  Pin[static_cast<size_t>(jinf)] = y[0];
  Qin[static_cast<size_t>(jinf)] = y[1];
  for (int j = jinf; j > m; --j) {
    y = in.step(j, -1, y);
    Pin[static_cast<size_t>(j - 1)] = y[0];
    Qin[static_cast<size_t>(j - 1)] = y[1];
    if (std::fabs(y[0]) > 1e250) {
      for (int k = j - 1; k <= jinf; ++k) {
        Pin[static_cast<size_t>(k)] *= 1e-250;
        Qin[static_cast<size_t>(k)] *= 1e-250;
      }
      y[0] *= 1e-250;
      y[1] *= 1e-250;
    }
  }
  const double scale = Pm / Pin[static_cast<size_t>(m)];
  for (int j = m; j <= jinf; ++j) {
    s.P[static_cast<size_t>(j)] = Pin[static_cast<size_t>(j)] * scale;
    s.Q[static_cast<size_t>(j)] = Qin[static_cast<size_t>(j)] * scale;
  }
  const double Qin_m = s.Q[static_cast<size_t>(m)];
  s.nodes = sign_changes(s.P, 1, jinf);

  double norm = 0.0;
  for (int j = 0; j < mtp; ++j) {
    const size_t k = static_cast<size_t>(j);
    norm += g.weights()[k] * (s.P[k] * s.P[k] + s.Q[k] * s.Q[k]);
  }
  s.dE = consts.c * Pm * (Qout - Qin_m) / norm;
  // Q at the match point: mean of both sides.
  s.Q[static_cast<size_t>(m)] = 0.5 * (Qout + Qin_m);
  return s;
}

}  // namespace

int orbital_l(int kappa) { return kappa > 0 ? kappa : -kappa - 1; }

double sommerfeld_energy(double Z, int n, int kappa, const PhysicalConstants& consts) {
  const double alpha = consts.alpha();
  if (kappa == 0) throw DomainError("kappa must be non-zero");
  if (n < orbital_l(kappa) + 1) throw DomainError("principal quantum number too small for kappa");
  if (!(Z >= 0.0) || !(alpha * Z < std::abs(kappa)))
    throw DomainError("supercritical charge in Sommerfeld formula");
  const double s = std::sqrt(static_cast<double>(kappa) * kappa - alpha * alpha * Z * Z);
  const double x = alpha * Z / (n - std::abs(kappa) + s);
  return consts.c * consts.c * std::expm1(-0.5 * std::log1p(x * x));
}

RadialOrbital solve_bound(const PiecewiseCharge& pw, int kappa, int n, const PhysicalConstants& consts) {
  const int l = orbital_l(kappa);
  if (kappa == 0) throw DomainError("kappa must be non-zero");
  if (n < l + 1) throw DomainError("solve_bound: n must be at least l + 1");
  const int target = n - l - 1;
  const double zmax = pw.max_charge();
  if (!(consts.alpha() * pw.z0(0) < std::abs(kappa)))
    throw DomainError("solve_bound: supercritical nuclear charge");

  double lo = std::max(1.5 * sommerfeld_energy(std::min(zmax, 0.999 * consts.c * std::abs(kappa)), n,
                                               kappa, consts),
                       -1.9 * consts.c * consts.c);
  double hi = 0.0;
  double E = sommerfeld_energy(std::min(zmax, 0.999 * consts.c * std::abs(kappa)), n, kappa, consts);
  double last_decay = HUGE_VAL;
  for (int iter = 0; iter < 300; ++iter) {
    Shot s = shoot(pw, kappa, l, E, consts);
    last_decay = s.decay;
    if (s.nodes > target) {
      hi = E;
      E = 0.5 * (lo + hi);
      continue;
    }
    if (s.nodes < target) {
      lo = E;
      E = 0.5 * (lo + hi);
      continue;
    }
    if (s.dE > 0.0) lo = E;
    else hi = E;
    if (std::fabs(s.dE) < 1e-12 * std::fabs(E)) {
      E += s.dE;
      Shot fin = shoot(pw, kappa, l, E, consts);
      if (fin.nodes != target) fin = s;
      if (fin.decay < 20.0)
        throw DomainError("solve_bound: orbital not decayed at the last tabulation point; enlarge the grid");
      RadialOrbital orb;
      orb.n = n;
      orb.kappa = kappa;
      orb.energy = E;
      double norm = 0.0;
      const auto& w = pw.grid().weights();
      for (size_t k = 0; k < fin.P.size(); ++k) norm += w[k] * (fin.P[k] * fin.P[k] + fin.Q[k] * fin.Q[k]);
      const double f = 1.0 / std::sqrt(norm);
      orb.P = std::move(fin.P);
      orb.Q = std::move(fin.Q);
      for (auto& x : orb.P) x *= f;
      for (auto& x : orb.Q) x *= f;
      return orb;
    }
    double next = E + s.dE;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    E = next;
  }
  if (last_decay < 20.0)
    throw DomainError("solve_bound: orbital not decayed at the last tabulation point; enlarge the grid");
  throw Error("solve_bound: state n=" + std::to_string(n) + " kappa=" + std::to_string(kappa) +
              " not found");
}

}  // namespace cfgreens
