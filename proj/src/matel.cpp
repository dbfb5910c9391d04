#include "cfgreens/matel.hpp"

#include <vector>

#include "cfgreens/errors.hpp"
#include "cfgreens/specfun.hpp"

namespace cfgreens {
namespace {

struct Prepared {
  std::vector<double> outer;  // w_i g_beta(r_i) j_Lambda(k r_i)
  std::vector<double> inner;  // w_j j_LambdaTilde(ktilde r_j) g_alpha(r_j)
};

Prepared prepare(const RadialOrbital& beta, const GreensFunction& gf, const RadialOrbital& alpha,
                 const MatrixElementSpec& spec) {
  const int mtp = gf.mtp();
  if (static_cast<int>(beta.P.size()) != mtp || static_cast<int>(alpha.P.size()) != mtp)
    throw DomainError("radial_matrix_element: orbitals and Green's function live on different grids");
  if (spec.Lambda < 0 || spec.Lambda > 20 || spec.LambdaTilde < 0 || spec.LambdaTilde > 20)
    throw DomainError("radial_matrix_element: multipole ranks must lie in [0, 20]");
  const RadialGrid& g = gf.grid();
  const auto& w = g.weights();
  const auto& gb = spec.Tbeta == Component::L ? beta.P : beta.Q;
  const auto& ga = spec.Talpha == Component::L ? alpha.P : alpha.Q;
  Prepared p;
  p.outer.resize(static_cast<size_t>(mtp));
  p.inner.resize(static_cast<size_t>(mtp));
  for (int i = 0; i < mtp; ++i) {
    const size_t k = static_cast<size_t>(i);
    p.outer[k] = w[k] * gb[k] * sph_bessel_j(spec.Lambda, spec.k * g.r(i));
    p.inner[k] = w[k] * ga[k] * sph_bessel_j(spec.LambdaTilde, spec.ktilde * g.r(i));
  }
  return p;
}

double pick(const Components& c, Component T, Component Tt) {
  if (T == Component::L) return Tt == Component::L ? c.gLL : c.gLS;
  return Tt == Component::L ? c.gSL : c.gSS;
}

double row(const GreensFunction& gf, const Prepared& p, const MatrixElementSpec& spec, int i) {
  const size_t k = static_cast<size_t>(i);
  if (p.outer[k] == 0.0) return 0.0;
  double s = 0.0;
  for (int j = 0; j < gf.mtp(); ++j) {
    const double f = p.inner[static_cast<size_t>(j)];
    if (f == 0.0) continue;
    s += pick(gf.at_nodes(i, j), spec.T, spec.Ttilde) * f;
  }
  return p.outer[k] * s;
}

}  // namespace

double radial_matrix_element(const RadialOrbital& beta, const GreensFunction& gf,
                             const RadialOrbital& alpha, const MatrixElementSpec& spec) {
  Prepared p = prepare(beta, gf, alpha, spec);
  std::vector<double> rows(static_cast<size_t>(gf.mtp()));
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < gf.mtp(); ++i) rows[static_cast<size_t>(i)] = row(gf, p, spec, i);
  double total = 0.0;
  for (double x : rows) total += x;
  return total;
}

double radial_matrix_element_serial(const RadialOrbital& beta, const GreensFunction& gf,
                                    const RadialOrbital& alpha, const MatrixElementSpec& spec) {
  Prepared p = prepare(beta, gf, alpha, spec);
  double total = 0.0;
  for (int i = 0; i < gf.mtp(); ++i) total += row(gf, p, spec, i);
  return total;
}

}  // namespace cfgreens
