#include "cfgreens/greens.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <initializer_list>
#include <mutex>
#include <string>
#include <utility>

#include "cfgreens/errors.hpp"
#include "cfgreens/specfun.hpp"

namespace cfgreens {
namespace {

constexpr double kEps = 1.1102230246251565e-16;

Scaled sabs(const Scaled& x) { return {std::fabs(x.m), x.k}; }

// |a| / |b| as a double, inf when b vanishes.
double rel(const Scaled& a, const Scaled& b) {
  if (b.is_zero()) return a.is_zero() ? 0.0 : HUGE_VAL;
  return std::fabs(ratio(a, b));
}

// c1 f1 + c0 f0 together with an error estimate relative to the result.
struct Combo {
  Scaled v;
  double est = 0.0;
};

Combo combine(std::initializer_list<std::pair<double, ScaledResult>> terms) {
  Combo out;
  Scaled mag;
  Scaled err;
  for (const auto& [c, f] : terms) {
    Scaled t = f.value * c;
    out.v = out.v + t;
    mag = mag + sabs(t);
    err = err + sabs(t) * (f.est_rel_error + kEps);
  }
  err = err + mag * kEps;
  out.est = rel(err, out.v);
  return out;
}

Combo combine(double c1, const ScaledResult& f1, double c0, const ScaledResult& f0) {
  return combine({{c1, f1}, {c0, f0}});
}

ScaledResult times(const ScaledResult& f, double x) { return {f.value * x, f.est_rel_error}; }

// kappa - s for kappa > 0, kappa + s for kappa < 0, without cancellation.
double kappa_gap(const IntervalParams& p, int kappa) {
  const double a2z2 = p.alpha * p.alpha * p.z0 * p.z0;
  return kappa > 0 ? a2z2 / (kappa + p.s) : -a2z2 / (p.s - kappa);
}

LocalValue assemble(double r, const IntervalParams& p, const Combo& B, const Combo& dB) {
  Scaled pre = Scaled::exp(p.s * std::log(r)) * Scaled::exp(-p.q * r);
  LocalValue out;
  out.value = pre * B.v;
  Scaled t1 = B.v * (p.s / r - p.q);
  Scaled t2 = dB.v * (2.0 * p.q);
  Scaled d = t1 + t2;
  Scaled err = sabs(t1) * (B.est + kEps) + sabs(t2) * (dB.est + kEps) + (sabs(t1) + sabs(t2)) * kEps;
  out.deriv = pre * d;
  out.est_rel_error = std::max(B.est, rel(err, d));
  return out;
}

bool same_params(const IntervalParams& a, const IntervalParams& b) {
  return a.s == b.s && a.t == b.t && a.q == b.q && a.z0 == b.z0 && a.energy == b.energy &&
         a.alpha == b.alpha;
}

void check_trust(const LocalValue& v, int interval, const char* which) {
  if (!(v.est_rel_error <= kSpecfunTrustLimit))
    throw AccuracyError(std::string(which) + " solution on interval " + std::to_string(interval) +
                            " lost accuracy",
                        v.est_rel_error);
}

// Local solutions of every interval at both of its ends.
struct LocalTable {
  std::vector<IntervalParams> params;
  std::vector<LocalValue> reg_right, irr_right, reg_left, irr_left;
};

LocalTable make_table(const PiecewiseCharge& pw, double energy, int kappa,
                      const PhysicalConstants& consts) {
  const RadialGrid& g = pw.grid();
  const int n = pw.intervals();
  LocalTable t;
  t.params.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    try {
      t.params[static_cast<size_t>(i)] = interval_params(pw.z0(i), pw.z1(i), energy, kappa, consts);
    } catch (const DomainError& e) {
      throw DomainError("interval " + std::to_string(i) + ": " + e.what());
    }
  }
  t.reg_right.resize(static_cast<size_t>(n));
  t.irr_right.resize(static_cast<size_t>(n));
  t.reg_left.resize(static_cast<size_t>(n));
  t.irr_left.resize(static_cast<size_t>(n));

  std::exception_ptr failure;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < n; ++i) {
    try {
      const size_t k = static_cast<size_t>(i);
      const IntervalParams& p = t.params[k];
      t.reg_right[k] = coulomb_regular(g.r(i + 1), p, kappa);
      t.irr_right[k] = coulomb_irregular(g.r(i + 1), p, kappa);
      check_trust(t.reg_right[k], i, "regular");
      check_trust(t.irr_right[k], i, "irregular");
      if (i > 0 && !same_params(p, t.params[k - 1])) {
        t.reg_left[k] = coulomb_regular(g.r(i), p, kappa);
        t.irr_left[k] = coulomb_irregular(g.r(i), p, kappa);
        check_trust(t.reg_left[k], i, "regular");
        check_trust(t.irr_left[k], i, "irregular");
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (int i = 1; i < n; ++i) {
    const size_t k = static_cast<size_t>(i);
    if (same_params(t.params[k], t.params[k - 1])) {
      t.reg_left[k] = t.reg_right[k - 1];
      t.irr_left[k] = t.irr_right[k - 1];
    }
  }
  return t;
}

// Coefficients (f1, f2) with f1 M + f2 W matching value and derivative.
CoefPair match(const LocalValue& M, const LocalValue& W, const Scaled& val, const Scaled& der,
               int interval) {
  Scaled a = M.value * W.deriv;
  Scaled b = W.value * M.deriv;
  Scaled det = a - b;
  if (det.is_zero() || rel(det, sabs(a) + sabs(b)) < 1e-13)
    throw MatchingError("local solutions linearly dependent at interval " +
                            std::to_string(interval),
                        interval);
  return {(val * W.deriv - W.value * der) / det, (M.value * der - val * M.deriv) / det};
}

Scaled apply(const CoefPair& c, const Scaled& m, const Scaled& w) { return c[0] * m + c[1] * w; }

SweepResult sweep_forward(const LocalTable& t, int mtp) {
  const int n = static_cast<int>(t.params.size());
  SweepResult s;
  s.coef.resize(static_cast<size_t>(n));
  s.L.assign(static_cast<size_t>(mtp), Scaled{});
  s.Lp.assign(static_cast<size_t>(mtp), Scaled{});
  s.coef[0] = {Scaled::from(1.0), Scaled{}};
  for (int i = 0; i < n; ++i) {
    const size_t k = static_cast<size_t>(i);
    const CoefPair& c = s.coef[k];
    s.L[k + 1] = apply(c, t.reg_right[k].value, t.irr_right[k].value);
    s.Lp[k + 1] = apply(c, t.reg_right[k].deriv, t.irr_right[k].deriv);
    if (i + 1 < n)
      s.coef[k + 1] = match(t.reg_left[k + 1], t.irr_left[k + 1], s.L[k + 1], s.Lp[k + 1], i + 1);
  }
  return s;
}

SweepResult sweep_backward(const LocalTable& t, int mtp) {
  const int n = static_cast<int>(t.params.size());
  SweepResult s;
  s.coef.resize(static_cast<size_t>(n));
  s.L.assign(static_cast<size_t>(mtp), Scaled{});
  s.Lp.assign(static_cast<size_t>(mtp), Scaled{});
  s.coef[static_cast<size_t>(n - 1)] = {Scaled{}, Scaled::from(1.0)};
  for (int i = n - 1; i >= 0; --i) {
    const size_t k = static_cast<size_t>(i);
    const CoefPair& c = s.coef[k];
    s.L[k + 1] = apply(c, t.reg_right[k].value, t.irr_right[k].value);
    s.Lp[k + 1] = apply(c, t.reg_right[k].deriv, t.irr_right[k].deriv);
    if (i > 0) {
      Scaled v = apply(c, t.reg_left[k].value, t.irr_left[k].value);
      Scaled d = apply(c, t.reg_left[k].deriv, t.irr_left[k].deriv);
      s.coef[k - 1] = match(t.reg_right[k - 1], t.irr_right[k - 1], v, d, i);
    }
  }
  return s;
}

void check_energy(const PiecewiseCharge& pw, double energy, const PhysicalConstants& consts) {
  if (!(energy < 0.0)) throw DomainError("Green's function energy must be negative");
  ValidationReport rep = validate_for_energy(pw, energy, consts);
  if (!rep.ok()) throw DomainError("energy " + std::to_string(energy) + " a.u.: " + rep.describe());
}

GreensFunction finish(double energy, int kappa, const PhysicalConstants& consts,
                      const PiecewiseCharge& pw, std::vector<IntervalParams> params,
                      SweepResult fwd, SweepResult bwd) {
  const RadialGrid& g = pw.grid();
  const int mtp = g.mtp();
  if (mtp < 8) throw DomainError("Green's function needs at least 8 tabulation points");
  FundamentalPair fp;
  fp.mL = std::move(fwd.L);
  fp.mLp = std::move(fwd.Lp);
  fp.wL = std::move(bwd.L);
  fp.wLp = std::move(bwd.Lp);
  fp.fcoef = std::move(fwd.coef);
  fp.gcoef = std::move(bwd.coef);
  fp.mS.assign(static_cast<size_t>(mtp), Scaled{});
  fp.wS.assign(static_cast<size_t>(mtp), Scaled{});
  for (int j = 1; j < mtp; ++j) {
    const size_t k = static_cast<size_t>(j);
    double z = pw.at_node(j);
    fp.mS[k] = small_from_large(fp.mL[k], fp.mLp[k], g.r(j), z, energy, kappa, consts);
    fp.wS[k] = small_from_large(fp.wL[k], fp.wLp[k], g.r(j), z, energy, kappa, consts);
  }

  GreensDiagnostics diag;
  std::vector<Scaled> W(static_cast<size_t>(mtp));
  double best = -1.0;
  diag.min_independence = HUGE_VAL;
  for (int j = 5; j < mtp; ++j) {
    const size_t k = static_cast<size_t>(j);
    Scaled a = fp.wL[k] * fp.mS[k];
    Scaled b = fp.mL[k] * fp.wS[k];
    W[k] = a - b;
    double ind = rel(W[k], sabs(a) + sabs(b));
    if (!std::isfinite(ind)) ind = 0.0;
    diag.min_independence = std::min(diag.min_independence, ind);
    if (ind > best) {
      best = ind;
      diag.ref_node = j;
    }
  }
  if (diag.min_independence < 1e-9)
    throw NearPoleError("energy " + std::to_string(energy) + " a.u. lies on a bound-state pole for kappa " +
                        std::to_string(kappa));
  const size_t ref = static_cast<size_t>(diag.ref_node);
  const Scaled Wref = W[ref];
  diag.wronskian_rel_spread = 0.0;
  for (int j = 5; j < mtp; ++j)
    diag.wronskian_rel_spread =
        std::max(diag.wronskian_rel_spread, std::fabs(ratio(W[static_cast<size_t>(j)], Wref) - 1.0));
  if (!(diag.wronskian_rel_spread <= 1e-6))
    throw AccuracyError("Wronskian not constant across the grid (relative spread " +
                            std::to_string(diag.wronskian_rel_spread) + ")",
                        diag.wronskian_rel_spread);

  // Put |mL| and |wL| near 1 at the reference node.
  const Scaled ms{1.0, -fp.mL[ref].normalized().k};
  const Scaled ws{1.0, -fp.wL[ref].normalized().k};
  for (auto* v : {&fp.mL, &fp.mLp, &fp.mS})
    for (auto& x : *v) x = x * ms;
  for (auto* v : {&fp.wL, &fp.wLp, &fp.wS})
    for (auto& x : *v) x = x * ws;
  for (auto& c : fp.fcoef) c = {c[0] * ms, c[1] * ms};
  for (auto& c : fp.gcoef) c = {c[0] * ws, c[1] * ws};
  const Scaled Wn = Wref * ms * ws;
  if (std::fabs(Wn.value()) < 1e-280)
    throw NearPoleError("Wronskian vanishes: energy too close to a bound state");
  const Scaled norm = Scaled::from(consts.alpha()) / Wn;
  return GreensFunction(energy, kappa, consts, pw, std::move(params), std::move(fp), norm, diag);
}

// Linear interpolation between nodes, exact at nodes.
Scaled interp(const std::vector<Scaled>& v, const RadialGrid& g, double r) {
  int j = g.find_node(r);
  if (j >= 0) return v[static_cast<size_t>(j)];
  int i = g.interval_of(r);
  double theta = (r - g.r(i)) / (g.r(i + 1) - g.r(i));
  const Scaled& a = v[static_cast<size_t>(i)];
  const Scaled& b = v[static_cast<size_t>(i + 1)];
  return a + (b - a) * theta;
}

struct NodeSpinors {
  Scaled mL, mS, wL, wS;
};

Components assemble_components(const Scaled& c, const NodeSpinors& x, const NodeSpinors& y, int order) {
  // order < 0: r < r'; order > 0: r > r'; 0: diagonal.
  auto g = [&c](const Scaled& m, const Scaled& w) { return (c * (m * w)).value(); };
  Components out;
  if (order < 0) {
    out.gLL = g(x.mL, y.wL);
    out.gLS = g(x.mL, y.wS);
    out.gSL = g(x.mS, y.wL);
    out.gSS = g(x.mS, y.wS);
  } else if (order > 0) {
    out.gLL = g(y.mL, x.wL);
    out.gLS = g(y.mS, x.wL);
    out.gSL = g(y.mL, x.wS);
    out.gSS = g(y.mS, x.wS);
  } else {
    out.gLL = g(x.mL, x.wL);
    out.gSS = g(x.mS, x.wS);
    double avg = 0.5 * (c * (x.mL * x.wS + x.mS * x.wL)).value();
    out.gLS = avg;
    out.gSL = avg;
  }
  return out;
}

}  // namespace

IntervalParams interval_params(double z0, double z1, double energy, int kappa,
                               const PhysicalConstants& consts) {
  const double alpha = consts.alpha();
  if (kappa == 0) throw DomainError("kappa must be non-zero");
  if (!(alpha * std::fabs(z0) < std::abs(kappa)))
    throw DomainError("supercritical charge: alpha |z0| >= |kappa| (z0 = " + std::to_string(z0) + ")");
  const double ep = energy + z1;
  const double two_c2 = 2.0 * consts.c * consts.c;
  if (!(ep < 0.0 && ep > -two_c2))
    throw DomainError("energy out of range: E + z1 = " + std::to_string(ep) + " not in (-2c^2, 0)");
  IntervalParams p;
  p.z0 = z0;
  p.energy = ep;
  p.alpha = alpha;
  p.s = std::sqrt(static_cast<double>(kappa) * kappa - alpha * alpha * z0 * z0);
  const double eps = ep * alpha * alpha + 1.0;
  p.q = std::sqrt(-ep * (ep * alpha * alpha + 2.0));
  p.t = z0 * eps / p.q - p.s;
  return p;
}

LocalValue coulomb_regular(double r, const IntervalParams& p, int kappa) {
  if (!(r > 0.0)) throw DomainError("coulomb_regular: r must be positive");
  const double b = 2.0 * p.s + 1.0;
  const double x = 2.0 * p.q * r;
  const double c1 = p.t;
  const double c0 = kappa - p.z0 / p.q;
  ScaledResult m1 = kummer_m_scaled(1.0 - p.t, b, x);
  ScaledResult m0 = kummer_m_scaled(-p.t, b, x);
  ScaledResult d1 = kummer_m_deriv_scaled(1.0 - p.t, b, x);
  ScaledResult d0 = kummer_m_deriv_scaled(-p.t, b, x);
  LocalValue direct = assemble(r, p, combine(c1, m1, c0, m0), combine(c1, d1, c0, d0));
  if (direct.est_rel_error < 1e-13) return direct;

  // M(a+1, b) = M(a, b) + (x / b) M(a+1, b+1) removes the small-x cancellation for kappa > 0.
  const double lead = (kappa > 0 ? kappa_gap(p, kappa) : kappa - p.s) + p.z0 * p.energy * p.alpha * p.alpha / p.q;
  ScaledResult n1 = kummer_m_scaled(1.0 - p.t, b + 1.0, x);
  ScaledResult e1 = kummer_m_deriv_scaled(1.0 - p.t, b + 1.0, x);
  LocalValue alt = assemble(r, p, combine({{lead, m0}, {p.t / b, times(n1, x)}}),
                            combine({{lead, d0}, {p.t / b, n1}, {p.t / b, times(e1, x)}}));
  return alt.est_rel_error < direct.est_rel_error ? alt : direct;
}

LocalValue coulomb_irregular(double r, const IntervalParams& p, int kappa) {
  if (!(r > 0.0)) throw DomainError("coulomb_irregular: r must be positive");
  const double b = 2.0 * p.s + 1.0;
  const double x = 2.0 * p.q * r;
  const double c1 = kappa + p.z0 / p.q;
  ScaledResult u1 = tricomi_u_scaled(1.0 - p.t, b, x);
  ScaledResult u0 = tricomi_u_scaled(-p.t, b, x);
  ScaledResult d1 = tricomi_u_deriv_scaled(1.0 - p.t, b, x);
  ScaledResult d0 = tricomi_u_deriv_scaled(-p.t, b, x);
  LocalValue direct = assemble(r, p, combine(c1, u1, 1.0, u0), combine(c1, d1, 1.0, d0));
  if (direct.est_rel_error < 1e-13) return direct;

  // U(a, b) = a U(a+1, b) + U(a, b-1) removes the small-x cancellation for kappa < 0.
  const double lead = (kappa < 0 ? kappa_gap(p, kappa) : kappa + p.s) - p.z0 * p.energy * p.alpha * p.alpha / p.q;
  ScaledResult v0 = tricomi_u_scaled(-p.t, b - 1.0, x);
  ScaledResult e0 = tricomi_u_deriv_scaled(-p.t, b - 1.0, x);
  LocalValue alt = assemble(r, p, combine({{lead, u1}, {1.0, v0}}), combine({{lead, d1}, {1.0, e0}}));
  return alt.est_rel_error < direct.est_rel_error ? alt : direct;
}

double small_from_large(double value, double derivative, double r, double z_of_r, double energy,
                        int kappa, const PhysicalConstants& consts) {
  const double alpha = consts.alpha();
  const double D = 2.0 / alpha + alpha * z_of_r / r + alpha * energy;
  return (derivative + kappa / r * value) / D;
}

Scaled small_from_large(const Scaled& value, const Scaled& derivative, double r, double z_of_r,
                        double energy, int kappa, const PhysicalConstants& consts) {
  const double alpha = consts.alpha();
  const double D = 2.0 / alpha + alpha * z_of_r / r + alpha * energy;
  return (derivative + value * (kappa / r)) / D;
}

SweepResult forward_sweep(const PiecewiseCharge& pw, double energy, int kappa,
                          const PhysicalConstants& consts) {
  check_energy(pw, energy, consts);
  return sweep_forward(make_table(pw, energy, kappa, consts), pw.grid().mtp());
}

SweepResult backward_sweep(const PiecewiseCharge& pw, double energy, int kappa,
                           const PhysicalConstants& consts) {
  check_energy(pw, energy, consts);
  return sweep_backward(make_table(pw, energy, kappa, consts), pw.grid().mtp());
}

GreensFunction::GreensFunction(double energy, int kappa, PhysicalConstants consts, PiecewiseCharge pw,
                               std::vector<IntervalParams> params, FundamentalPair fp, Scaled norm_c,
                               GreensDiagnostics diag)
    : energy_(energy),
      kappa_(kappa),
      consts_(consts),
      pw_(std::move(pw)),
      params_(std::move(params)),
      fp_(std::move(fp)),
      norm_c_(norm_c),
      diag_(diag) {}

Components GreensFunction::at_nodes(int i, int j) const {
  const size_t a = static_cast<size_t>(i);
  const size_t b = static_cast<size_t>(j);
  NodeSpinors x{fp_.mL[a], fp_.mS[a], fp_.wL[a], fp_.wS[a]};
  NodeSpinors y{fp_.mL[b], fp_.mS[b], fp_.wL[b], fp_.wS[b]};
  return assemble_components(norm_c_, x, y, (i > j) - (i < j));
}

GreensFunction::Spinor GreensFunction::solution_at(int which, double r) const {
  if (!(r > 0.0) || r > grid().r_max()) throw DomainError("solution_at: r outside (0, r_max]");
  int i = grid().interval_of(r);
  const IntervalParams& p = params_[static_cast<size_t>(i)];
  const CoefPair& c = which == 0 ? fp_.fcoef[static_cast<size_t>(i)] : fp_.gcoef[static_cast<size_t>(i)];
  LocalValue m = coulomb_regular(r, p, kappa_);
  LocalValue w = coulomb_irregular(r, p, kappa_);
  Spinor s;
  s.L = c[0] * m.value + c[1] * w.value;
  s.Lp = c[0] * m.deriv + c[1] * w.deriv;
  s.S = small_from_large(s.L, s.Lp, r, pw_.eval(r), energy_, kappa_, consts_);
  return s;
}

GreensFunction build_greens(double energy, int kappa, const PiecewiseCharge& pw,
                            const PhysicalConstants& consts) {
  check_energy(pw, energy, consts);
  LocalTable t = make_table(pw, energy, kappa, consts);
  const int mtp = pw.grid().mtp();
  SweepResult fwd = sweep_forward(t, mtp);
  SweepResult bwd = sweep_backward(t, mtp);
  return finish(energy, kappa, consts, pw, std::move(t.params), std::move(fwd), std::move(bwd));
}

GreensFunction build_greens_single_interval(double energy, int kappa, double zeff,
                                            const RadialGrid& grid, const PhysicalConstants& consts) {
  PiecewiseCharge pw = linearize(coulomb_charge(zeff), grid);
  check_energy(pw, energy, consts);
  const IntervalParams p = interval_params(zeff, 0.0, energy, kappa, consts);
  const int mtp = grid.mtp();
  SweepResult fwd;
  SweepResult bwd;
  fwd.L.assign(static_cast<size_t>(mtp), Scaled{});
  fwd.Lp = fwd.L;
  bwd.L = fwd.L;
  bwd.Lp = fwd.L;
  for (int j = 1; j < mtp; ++j) {
    const size_t k = static_cast<size_t>(j);
    LocalValue m = coulomb_regular(grid.r(j), p, kappa);
    LocalValue w = coulomb_irregular(grid.r(j), p, kappa);
    check_trust(m, 0, "regular");
    check_trust(w, 0, "irregular");
    fwd.L[k] = m.value;
    fwd.Lp[k] = m.deriv;
    bwd.L[k] = w.value;
    bwd.Lp[k] = w.deriv;
  }
  fwd.coef.assign(static_cast<size_t>(mtp - 1), CoefPair{Scaled::from(1.0), Scaled{}});
  bwd.coef.assign(static_cast<size_t>(mtp - 1), CoefPair{Scaled{}, Scaled::from(1.0)});
  std::vector<IntervalParams> params(static_cast<size_t>(mtp - 1), p);
  return finish(energy, kappa, consts, pw, std::move(params), std::move(fwd), std::move(bwd));
}

Components eval_components(const GreensFunction& gf, double r, double rp) {
  const RadialGrid& g = gf.grid();
  if (!(r >= 0.0) || !(rp >= 0.0) || r > g.r_max() || rp > g.r_max())
    throw DomainError("eval_components: arguments outside [0, r_max]");
  int i = g.find_node(r);
  int j = g.find_node(rp);
  if (i >= 0 && j >= 0) return gf.at_nodes(i, j);
  const FundamentalPair& fp = gf.pair();
  NodeSpinors x{interp(fp.mL, g, r), interp(fp.mS, g, r), interp(fp.wL, g, r), interp(fp.wS, g, r)};
  NodeSpinors y{interp(fp.mL, g, rp), interp(fp.mS, g, rp), interp(fp.wL, g, rp),
                interp(fp.wS, g, rp)};
  return assemble_components(gf.norm_c_scaled(), x, y, (r > rp) - (r < rp));
}

namespace {

Tabulation make_tabulation(const GreensFunction& gf) {
  Tabulation t;
  t.mtp = gf.mtp();
  const size_t n = static_cast<size_t>(t.mtp);
  t.r.assign(gf.grid().nodes().begin(), gf.grid().nodes().begin() + t.mtp);
  t.gLL.resize(n * n);
  t.gLS.resize(n * n);
  t.gSL.resize(n * n);
  t.gSS.resize(n * n);
  return t;
}

void fill_row(const GreensFunction& gf, Tabulation& t, int i) {
  const size_t n = static_cast<size_t>(t.mtp);
  for (int j = 0; j < t.mtp; ++j) {
    Components c = gf.at_nodes(i, j);
    const size_t k = static_cast<size_t>(i) * n + static_cast<size_t>(j);
    t.gLL[k] = c.gLL;
    t.gLS[k] = c.gLS;
    t.gSL[k] = c.gSL;
    t.gSS[k] = c.gSS;
  }
}

}  // namespace

Tabulation tabulate(const GreensFunction& gf) {
  Tabulation t = make_tabulation(gf);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < t.mtp; ++i) fill_row(gf, t, i);
  return t;
}

Tabulation tabulate_serial(const GreensFunction& gf) {
  Tabulation t = make_tabulation(gf);
  for (int i = 0; i < t.mtp; ++i) fill_row(gf, t, i);
  return t;
}

}  // namespace cfgreens
