#include "cfgreens/verify.hpp"

#include <algorithm>
#include <cmath>

#include "cfgreens/errors.hpp"

namespace cfgreens {
namespace {

void check_inputs(const GreensFunction& gf, const RadialOrbital& orb) {
  if (orb.kappa != gf.kappa()) throw DomainError("project_orbital: kappa of orbital and Green's function differ");
  if (!(std::fabs(orb.energy - gf.energy()) > 1e-6))
    throw DomainError("project_orbital: orbital energy coincides with the Green's function energy");
  if (static_cast<int>(orb.P.size()) != gf.mtp() || static_cast<int>(orb.Q.size()) != gf.mtp())
    throw DomainError("project_orbital: orbital and Green's function live on different grids");
}

void project_column(const GreensFunction& gf, const RadialOrbital& orb, double de, int j,
                    ProjectedOrbital& out) {
  const auto& w = gf.grid().weights();
  double p = 0.0;
  double q = 0.0;
  for (int i = 0; i < gf.mtp(); ++i) {
    const size_t k = static_cast<size_t>(i);
    if (orb.P[k] == 0.0 && orb.Q[k] == 0.0) continue;
    Components c = gf.at_nodes(i, j);
    p += w[k] * (orb.P[k] * c.gLL + orb.Q[k] * c.gSL);
    q += w[k] * (orb.P[k] * c.gLS + orb.Q[k] * c.gSS);
  }
  out.P[static_cast<size_t>(j)] = de * p;
  out.Q[static_cast<size_t>(j)] = de * q;
}

std::vector<double> product(const std::vector<double>& a, const std::vector<double>& b,
                            const std::vector<double>& c, const std::vector<double>& d) {
  std::vector<double> v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] * b[i] + c[i] * d[i];
  return v;
}

constexpr int kStencil = 4;

// d/dr at node j from gLL(j + k dir, j), k = 0..3 (third-order one-sided).
double one_sided(const GreensFunction& gf, int j, int dir) {
  const RadialGrid& g = gf.grid();
  double x[kStencil];
  for (int k = 0; k < kStencil; ++k) x[k] = g.r(j + k * dir);
  double d = 0.0;
  for (int i = 0; i < kStencil; ++i) {
    double w = 0.0;
    if (i == 0) {
      for (int k = 1; k < kStencil; ++k) w += 1.0 / (x[0] - x[k]);
    } else {
      double num = 1.0;
      double den = 1.0;
      for (int k = 0; k < kStencil; ++k) {
        if (k == i) continue;
        if (k != 0) num *= x[0] - x[k];
        den *= x[i] - x[k];
      }
      w = num / den;
    }
    d += w * gf.at_nodes(j + i * dir, j).gLL;
  }
  return d;
}

}  // namespace

ProjectedOrbital project_orbital(const GreensFunction& gf, const RadialOrbital& orb) {
  check_inputs(gf, orb);
  ProjectedOrbital out;
  out.P.assign(static_cast<size_t>(gf.mtp()), 0.0);
  out.Q.assign(static_cast<size_t>(gf.mtp()), 0.0);
  const double de = orb.energy - gf.energy();
#pragma omp parallel for schedule(dynamic, 8)
  for (int j = 0; j < gf.mtp(); ++j) project_column(gf, orb, de, j, out);
  return out;
}

ProjectedOrbital project_orbital_serial(const GreensFunction& gf, const RadialOrbital& orb) {
  check_inputs(gf, orb);
  ProjectedOrbital out;
  out.P.assign(static_cast<size_t>(gf.mtp()), 0.0);
  out.Q.assign(static_cast<size_t>(gf.mtp()), 0.0);
  const double de = orb.energy - gf.energy();
  for (int j = 0; j < gf.mtp(); ++j) project_column(gf, orb, de, j, out);
  return out;
}

double overlap_integral(const RadialOrbital& orb, const ProjectedOrbital& proj, const RadialGrid& grid) {
  return grid.integrate(product(proj.P, orb.P, proj.Q, orb.Q));
}

double normalization_integral(const ProjectedOrbital& proj, const RadialGrid& grid) {
  return grid.integrate(product(proj.P, proj.P, proj.Q, proj.Q));
}

double jump_expected(const GreensFunction& gf, int j) {
  const double alpha = gf.constants().alpha();
  const double r = gf.grid().r(j);
  const double D = 2.0 / alpha + alpha * gf.charge().at_node(j) / r + alpha * gf.energy();
  return -alpha * D;
}

std::vector<double> jump_test_radii(const GreensFunction& gf) {
  const RadialGrid& g = gf.grid();
  std::vector<int> eligible;
  for (int j = 20; j + 3 < g.mtp(); ++j) {
    const IntervalParams& p = gf.params()[static_cast<size_t>(j)];
    if (p.q * (g.r(j + 3) - g.r(j - 3)) <= 0.5 && p.q * g.r(j) <= 20.0) eligible.push_back(j);
  }
  std::vector<double> radii;
  if (eligible.empty()) return radii;
  const int count = std::min<int>(10, static_cast<int>(eligible.size()));
  for (int k = 0; k < count; ++k) {
    size_t idx = count == 1 ? 0 : static_cast<size_t>(k) * (eligible.size() - 1) / static_cast<size_t>(count - 1);
    radii.push_back(g.r(eligible[idx]));
  }
  return radii;
}

double jump_diagnostic(const GreensFunction& gf, std::span<const double> radii) {
  const RadialGrid& g = gf.grid();
  double worst = 0.0;
  for (double x : radii) {
    const int j = g.find_node(x);
    if (j < kStencil - 1 || j + kStencil - 1 >= g.mtp())
      throw DomainError("jump_diagnostic: radius is not an interior grid node");
    const double left = one_sided(gf, j, -1);
    const double right = one_sided(gf, j, +1);
    const double expect = jump_expected(gf, j);
    worst = std::max(worst, std::fabs((right - left) - expect) / std::fabs(expect));
  }
  return worst;
}

double jump_diagnostic(const GreensFunction& gf) {
  std::vector<double> radii = jump_test_radii(gf);
  return jump_diagnostic(gf, radii);
}

double AccuracyReport::max_overlap_deviation() const {
  double m = 0.0;
  for (const auto& o : orbitals) m = std::max(m, std::fabs(o.overlap - 1.0));
  return m;
}

AccuracyReport check_accuracy(const GreensFunction& gf, int count) {
  AccuracyReport rep;
  rep.energy = gf.energy();
  rep.kappa = gf.kappa();
  const int l = orbital_l(gf.kappa());
  for (int k = 0; k < count; ++k) {
    RadialOrbital orb = solve_bound(gf.charge(), gf.kappa(), l + 1 + k, gf.constants());
    ProjectedOrbital proj = project_orbital(gf, orb);
    OrbitalCheck c;
    c.n = orb.n;
    c.kappa = orb.kappa;
    c.orbital_energy = orb.energy;
    c.overlap = overlap_integral(orb, proj, gf.grid());
    c.normalization = normalization_integral(proj, gf.grid());
    rep.orbitals.push_back(c);
  }
  rep.jump_max_rel_dev = jump_diagnostic(gf);
  rep.wronskian_rel_spread = gf.diagnostics().wronskian_rel_spread;
  return rep;
}

}  // namespace cfgreens
