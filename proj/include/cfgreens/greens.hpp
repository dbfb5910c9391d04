#pragma once

#include <array>
#include <vector>

#include "cfgreens/constants.hpp"
#include "cfgreens/potential.hpp"
#include "cfgreens/radial_grid.hpp"
#include "cfgreens/scaled.hpp"

namespace cfgreens {

// Coulomb parameters of one interval; the slope z1 enters as an energy shift.
struct IntervalParams {
  double s = 0.0;
  double t = 0.0;
  double q = 0.0;
  double z0 = 0.0;
  double energy = 0.0;  // E + z1
  double alpha = 0.0;
};

IntervalParams interval_params(double z0, double z1, double energy, int kappa,
                               const PhysicalConstants& consts = {});

// Large-component value and r-derivative of a local solution.
struct LocalValue {
  Scaled value;
  Scaled deriv;
  double est_rel_error = 0.0;

  double v() const { return value.value(); }
  double d() const { return deriv.value(); }
};

// Solution regular at the origin, built from Kummer functions.
LocalValue coulomb_regular(double r, const IntervalParams& p, int kappa);
// Solution decaying at infinity, built from Tricomi functions.
LocalValue coulomb_irregular(double r, const IntervalParams& p, int kappa);

// Small component (P' + kappa P / r) / (2/alpha + alpha Z/r + alpha E).
double small_from_large(double value, double derivative, double r, double z_of_r, double energy,
                        int kappa, const PhysicalConstants& consts = {});
Scaled small_from_large(const Scaled& value, const Scaled& derivative, double r, double z_of_r,
                        double energy, int kappa, const PhysicalConstants& consts = {});

using CoefPair = std::array<Scaled, 2>;

struct SweepResult {
  // Coefficients on the local (regular, irregular) pair for each interval.
  std::vector<CoefPair> coef;
  // Large component and derivative at nodes 0..mtp-1 (node 0 holds zero).
  std::vector<Scaled> L;
  std::vector<Scaled> Lp;
};

SweepResult forward_sweep(const PiecewiseCharge& pw, double energy, int kappa,
                          const PhysicalConstants& consts = {});
SweepResult backward_sweep(const PiecewiseCharge& pw, double energy, int kappa,
                           const PhysicalConstants& consts = {});

struct FundamentalPair {
  std::vector<Scaled> mL, mLp, mS;
  std::vector<Scaled> wL, wLp, wS;
  std::vector<CoefPair> fcoef;
  std::vector<CoefPair> gcoef;
};

struct Components {
  double gLL = 0.0;
  double gLS = 0.0;
  double gSL = 0.0;
  double gSS = 0.0;
};

struct GreensDiagnostics {
  int ref_node = 0;
  // Relative spread of wL mS - mL wS over nodes 5..mtp-1.
  double wronskian_rel_spread = 0.0;
  // Smallest |W| / (|wL mS| + |mL wS|) over the same nodes.
  double min_independence = 0.0;
};

class GreensFunction {
 public:
  GreensFunction(double energy, int kappa, PhysicalConstants consts, PiecewiseCharge pw,
                 std::vector<IntervalParams> params, FundamentalPair fp, Scaled norm_c,
                 GreensDiagnostics diag);

  double energy() const { return energy_; }
  int kappa() const { return kappa_; }
  const PhysicalConstants& constants() const { return consts_; }
  const RadialGrid& grid() const { return pw_.grid(); }
  const PiecewiseCharge& charge() const { return pw_; }
  const FundamentalPair& pair() const { return fp_; }
  const std::vector<IntervalParams>& params() const { return params_; }
  double norm_c() const { return norm_c_.value(); }
  const Scaled& norm_c_scaled() const { return norm_c_; }
  const GreensDiagnostics& diagnostics() const { return diag_; }
  int mtp() const { return grid().mtp(); }

  // All four components at nodes (i, j).
  Components at_nodes(int i, int j) const;

  // Regular (which = 0) or irregular (which = 1) solution at any r in (0, r_max],
  // evaluated analytically from the stored interval coefficients.
  struct Spinor {
    Scaled L, Lp, S;
  };
  Spinor solution_at(int which, double r) const;

 private:
  double energy_;
  int kappa_;
  PhysicalConstants consts_;
  PiecewiseCharge pw_;
  std::vector<IntervalParams> params_;
  FundamentalPair fp_;
  Scaled norm_c_;
  GreensDiagnostics diag_;
};

GreensFunction build_greens(double energy, int kappa, const PiecewiseCharge& pw,
                            const PhysicalConstants& consts = {});

// One global Coulomb pair on the whole grid, no matching.
GreensFunction build_greens_single_interval(double energy, int kappa, double zeff,
                                            const RadialGrid& grid,
                                            const PhysicalConstants& consts = {});

Components eval_components(const GreensFunction& gf, double r, double rp);

// mtp x mtp row-major tables; row index belongs to r, column to r'.
struct Tabulation {
  int mtp = 0;
  std::vector<double> r;
  std::vector<double> gLL, gLS, gSL, gSS;

  double at(const std::vector<double>& g, int i, int j) const {
    return g[static_cast<size_t>(i) * static_cast<size_t>(mtp) + static_cast<size_t>(j)];
  }
};

Tabulation tabulate(const GreensFunction& gf);
Tabulation tabulate_serial(const GreensFunction& gf);

}  // namespace cfgreens
