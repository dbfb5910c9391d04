#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfgreens/dirac.hpp"
#include "cfgreens/driver.hpp"
#include "cfgreens/errors.hpp"
#include "cfgreens/greens.hpp"
#include "cfgreens/io.hpp"
#include "cfgreens/matel.hpp"
#include "cfgreens/potential.hpp"

using namespace cfgreens;

namespace {

struct GridArgs {
  std::string text;

  void apply(double& rnt, double& h, int& n) const {
    if (text.empty()) return;
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() != 3) throw CLI::ValidationError("--grid", "expected <rnt>,<h>,<n>");
    rnt = std::stod(parts[0]);
    h = std::stod(parts[1]);
    n = std::stoi(parts[2]);
  }
};

Component component(char c) {
  if (c == 'L' || c == 'l') return Component::L;
  if (c == 'S' || c == 's') return Component::S;
  throw DomainError(std::string("component must be L or S, got '") + c + "'");
}

int run_matel(const std::string& potential, const GridArgs& grid_args, double clight, const std::string& units,
              const std::string& gf_text, const std::string& beta_label, const std::string& alpha_label,
              MatrixElementSpec spec, const std::string& comps) {
  PhysicalConstants consts;
  if (clight > 0) consts.c = clight;
  double rnt = RadialGrid::kDefaultRnt;
  double h = RadialGrid::kDefaultH;
  int n = RadialGrid::kDefaultN;
  grid_args.apply(rnt, h, n);
  if (comps.size() != 4) throw DomainError("--components needs four letters (Tbeta T Ttilde Talpha), e.g. LLLL");
  spec.Tbeta = component(comps[0]);
  spec.T = component(comps[1]);
  spec.Ttilde = component(comps[2]);
  spec.Talpha = component(comps[3]);

  PotentialSource src = parse_potential_source(potential);
  ChargeSpec charge = src.coulomb ? coulomb_charge(src.zeff) : load_pot(src.path);
  RadialGrid grid = RadialGrid::build(rnt, h, n);
  if (!src.coulomb) {
    int mtp = 0;
    while (mtp < grid.n() && grid.r(mtp) <= charge_extent(charge) * (1.0 + 1e-12)) ++mtp;
    grid = grid.with_mtp(mtp);
  }
  PiecewiseCharge pw = linearize(charge, grid);
  GfRequest req = parse_gf_request(gf_text);
  double energy = convert_energy(req.energy, parse_unit(units));
  GreensFunction gf = build_greens(energy, parse_symmetry(req.symmetry), pw, consts);
  auto [nb, kb] = parse_orbital(beta_label);
  auto [na, ka] = parse_orbital(alpha_label);
  RadialOrbital beta = solve_bound(pw, kb, nb, consts);
  RadialOrbital alpha = solve_bound(pw, ka, na, consts);
  double u = radial_matrix_element(beta, gf, alpha, spec);
  std::printf("%.15e\n", u);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic radial Green's functions for central-field potentials"};
  app.require_subcommand(1);

  std::string potential = "coulomb:79";
  GridArgs grid_args;
  double clight = 0.0;
  std::string units = "eV";
  std::vector<std::string> gfs;
  bool check = false;
  double threshold = 1e-2;
  std::string out_path;
  std::string save_pot;

  auto* run_cmd = app.add_subcommand("run", "generate, check and save Green's functions");
  run_cmd->add_option("--potential", potential, "coulomb:<Z> or file:<path.pot>");
  run_cmd->add_option("--grid", grid_args.text, "<rnt>,<h>,<n>");
  run_cmd->add_option("--clight", clight, "speed of light in atomic units");
  run_cmd->add_option("--units", units, "eV or Hartree");
  run_cmd->add_option("--gf", gfs, "<E>:<symmetry>, repeatable")->allow_extra_args(false);
  run_cmd->add_flag("--check", check, "test against bound orbitals after generation");
  run_cmd->add_option("--threshold", threshold, "largest accepted |overlap - 1|");
  run_cmd->add_option("--out", out_path, "output .rgf file");
  run_cmd->add_option("--save-pot", save_pot, "write the charge table to a .pot file");

  std::string gf_text;
  std::string beta_label = "1s";
  std::string alpha_label = "1s";
  std::string comps = "LLLL";
  MatrixElementSpec spec;
  auto* matel_cmd = app.add_subcommand("matel", "radial matrix element with spherical Bessel weights");
  matel_cmd->add_option("--potential", potential, "coulomb:<Z> or file:<path.pot>");
  matel_cmd->add_option("--grid", grid_args.text, "<rnt>,<h>,<n>");
  matel_cmd->add_option("--clight", clight, "speed of light in atomic units");
  matel_cmd->add_option("--units", units, "eV or Hartree");
  matel_cmd->add_option("--gf", gf_text, "<E>:<symmetry>")->required();
  matel_cmd->add_option("--beta", beta_label, "orbital on the left, e.g. 1s");
  matel_cmd->add_option("--alpha", alpha_label, "orbital on the right, e.g. 2p-");
  matel_cmd->add_option("--k", spec.k, "wave number k");
  matel_cmd->add_option("--ktilde", spec.ktilde, "wave number k~");
  matel_cmd->add_option("--rank", spec.Lambda, "Bessel rank for r")->check(CLI::Range(0, 20));
  matel_cmd->add_option("--rank-tilde", spec.LambdaTilde, "Bessel rank for r'")->check(CLI::Range(0, 20));
  matel_cmd->add_option("--components", comps, "Tbeta T Ttilde Talpha, e.g. LLLL");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      RunRequest req;
      req.potential = parse_potential_source(potential);
      grid_args.apply(req.rnt, req.h, req.n);
      if (clight > 0) req.consts.c = clight;
      req.unit = parse_unit(units);
      for (const auto& g : gfs) req.functions.push_back(parse_gf_request(g));
      req.check = check;
      req.check_threshold = threshold;
      req.out_path = out_path;
      req.save_pot_path = save_pot;
      return run(req, std::cout, std::cerr);
    }
    return run_matel(potential, grid_args, clight, units, gf_text, beta_label, alpha_label, spec, comps);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
