#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cfgreens/greens.hpp"
#include "cfgreens/potential.hpp"

namespace cfgreens {

enum class EnergyUnit { eV, Hartree };

inline constexpr double kHartreeInEv = 27.2113961;

// s, p-, p, d-, d, f-, f, g-, g -> kappa.
int parse_symmetry(std::string_view label);
std::string symmetry_label(int kappa);
// "1s", "2p-", ... -> (n, kappa).
std::pair<int, int> parse_orbital(std::string_view label);
std::string orbital_label(int n, int kappa);

EnergyUnit parse_unit(std::string_view name);
std::string unit_name(EnergyUnit unit);
// value in `unit` -> Hartree.
double convert_energy(double value, EnergyUnit unit);
// Hartree -> `unit`.
double energy_in_unit(double hartree, EnergyUnit unit);

struct RgfFunction {
  double energy = 0.0;
  int kappa = 0;
  int mtp = 0;
  std::vector<double> r;
  // Row-major mtp x mtp; row index belongs to r, column to r'.
  std::vector<double> gLL, gLS, gSL, gSS;
};

struct RgfFile {
  static constexpr const char* kSignature = "# DCFGF";
  int interpolation_mode = 1;
  std::vector<std::string> comments;
  std::vector<RgfFunction> functions;
};

RgfFunction to_rgf(const GreensFunction& gf, const Tabulation& tab);

void write_rgf(const std::filesystem::path& path, const RgfFile& file);
RgfFile read_rgf(const std::filesystem::path& path);

// Charge table with a "# POT" header; a Coulomb charge becomes (0, Z), (r_max, Z).
void write_pot(const std::filesystem::path& path, const ChargeSpec& charge, double r_max);
ChargeSpec read_pot(const std::filesystem::path& path);

}  // namespace cfgreens
