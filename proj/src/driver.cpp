#include "cfgreens/driver.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string>

#include "cfgreens/errors.hpp"
#include "cfgreens/greens.hpp"
#include "cfgreens/potential.hpp"
#include "cfgreens/verify.hpp"

namespace cfgreens {
namespace {

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double parse_number(const std::string& text, const std::string& what) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw DomainError("cannot parse " + what + " '" + text + "'");
  return v;
}

int grid_mtp(const RadialGrid& grid, const ChargeSpec& charge) {
  double extent = charge_extent(charge);
  if (std::isinf(extent)) return grid.n();
  int mtp = 0;
  while (mtp < grid.n() && grid.r(mtp) <= extent * (1.0 + 1e-12)) ++mtp;
  if (mtp < 10) throw DomainError("the charge table covers fewer than 10 grid nodes");
  return mtp;
}

}  // namespace

PotentialSource parse_potential_source(const std::string& text) {
  PotentialSource src;
  if (text.rfind("coulomb:", 0) == 0) {
    src.coulomb = true;
    src.zeff = parse_number(text.substr(8), "nuclear charge");
  } else if (text.rfind("file:", 0) == 0) {
    src.coulomb = false;
    src.path = text.substr(5);
    if (src.path.empty()) throw DomainError("empty potential file name");
  } else {
    throw DomainError("potential must be coulomb:<Z> or file:<path>, got '" + text + "'");
  }
  return src;
}

GfRequest parse_gf_request(const std::string& text) {
  size_t colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw DomainError("Green's function request must be <E>:<symmetry>, got '" + text + "'");
  GfRequest g;
  g.energy = parse_number(text.substr(0, colon), "energy");
  g.symmetry = text.substr(colon + 1);
  parse_symmetry(g.symmetry);
  return g;
}

int run(const RunRequest& request, std::ostream& out, std::ostream& err) {
  if (request.functions.empty()) {
    err << "usage error: at least one --gf <E>:<symmetry> is required\n";
    return 2;
  }

  struct Job {
    double energy;
    int kappa;
    std::string label;
    double shown;
  };
  std::vector<Job> jobs;
  try {
    for (const auto& f : request.functions) {
      double e = convert_energy(f.energy, request.unit);
      if (!(e < 0.0)) throw DomainError("energy " + std::to_string(f.energy) + " is not negative");
      jobs.push_back({e, parse_symmetry(f.symmetry), f.symmetry, f.energy});
    }
  } catch (const std::exception& ex) {
    err << "usage error: " << ex.what() << "\n";
    return 2;
  }

  ChargeSpec charge;
  RadialGrid grid = RadialGrid::build(request.rnt, request.h, request.n);
  try {
    charge = request.potential.coulomb ? coulomb_charge(request.potential.zeff)
                                       : load_pot(request.potential.path);
    grid = grid.with_mtp(grid_mtp(grid, charge));
    if (!request.save_pot_path.empty()) write_pot(request.save_pot_path, charge, grid.r_max());
  } catch (const std::exception& ex) {
    err << "error: potential: " << ex.what() << "\n";
    return 1;
  }
  PiecewiseCharge pw = linearize(charge, grid);

  const std::string unit = unit_name(request.unit);
  out << fmt("Nuclear charge Z(0) = %.2f and Z(r_max) = %.3f on %d grid points (r_max = %.6E a.u.)\n\n",
             pw.at_node(0), pw.at_node(grid.mtp() - 1), grid.mtp(), grid.r_max());
  out << fmt("     i     E (%9s)    j     overall progress\n", unit.c_str());
  out << "   ------------------------------------------------\n";

  std::vector<GreensFunction> built;
  std::vector<Tabulation> tabs;
  for (size_t i = 0; i < jobs.size(); ++i) {
    const Job& job = jobs[i];
    try {
      ValidationReport rep = validate_for_energy(pw, job.energy, request.consts);
      if (!rep.ok()) throw DomainError(rep.describe());
      built.push_back(build_greens(job.energy, job.kappa, pw, request.consts));
      tabs.push_back(tabulate(built.back()));
    } catch (const std::exception& ex) {
      err << fmt("error: E = %.7E a.u., kappa = %d: ", job.energy, job.kappa) << ex.what() << "\n";
      return 1;
    }
    int progress = static_cast<int>(100 * (i + 1) / jobs.size());
    out << fmt("%6zu%18.7E%5s%11d%%\n", i + 1, job.shown, job.label.c_str(), progress);
    out.flush();
  }

  bool within = true;
  if (request.check) {
    out << "\nTests on the accuracy of the Green's functions by means of overlap and normalization integrals:\n\n";
    out << "                                      Overlap integrals          Normalization\n";
    out << fmt("     i     E (%9s)   nj  <nj (Greens) | nj (Dirac)>      ||nj (Greens)||\n", unit.c_str());
    out << "   ----------------------------------------------------------------------------\n";
    for (size_t i = 0; i < built.size(); ++i) {
      const Job& job = jobs[i];
      AccuracyReport rep;
      try {
        rep = check_accuracy(built[i]);
      } catch (const std::exception& ex) {
        err << fmt("error: accuracy test at E = %.7E a.u., kappa = %d: ", job.energy, job.kappa) << ex.what()
            << "\n";
        return 1;
      }
      for (const auto& o : rep.orbitals) {
        std::string nj = orbital_label(o.n, o.kappa);
        out << fmt("%6zu%18.7E%5s%22.6E%26.6E\n", i + 1, job.shown, nj.c_str(), o.overlap, o.normalization);
        if (!(std::fabs(o.overlap - 1.0) < request.check_threshold)) within = false;
      }
    }
  }

  if (!request.out_path.empty()) {
    RgfFile file;
    file.comments = {
        "radial Green's functions of the Dirac equation for V(r) = -Z(r)/r, atomic units",
        "each record: r r' gLL gLS gSL gSS; at r = r' gLS and gSL hold the two-sided mean",
        fmt("grid (extension): rnt = %.15e h = %.15e n = %d", grid.rnt(), grid.h(), grid.n()),
        fmt("speed of light c = %.10f", request.consts.c)};
    for (size_t i = 0; i < built.size(); ++i) file.functions.push_back(to_rgf(built[i], tabs[i]));
    try {
      write_rgf(request.out_path, file);
    } catch (const std::exception& ex) {
      err << "error: " << ex.what() << "\n";
      return 1;
    }
    auto bytes = std::filesystem::file_size(request.out_path);
    out << "\nWrite the Green's functions to the .rgf file;\n";
    out << fmt("%3zu radial Green's functions with %llu bytes written to %s\n", built.size(),
               static_cast<unsigned long long>(bytes), request.out_path.c_str());
  }

  if (!within) {
    err << fmt("overlap deviation exceeds %.3g\n", request.check_threshold);
    return 3;
  }
  return 0;
}

}  // namespace cfgreens
