#include "cfgreens/io.hpp"

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>

#include "cfgreens/errors.hpp"

namespace cfgreens {
namespace {

struct SymEntry {
  const char* label;
  int kappa;
};

constexpr std::array<SymEntry, 9> kSymmetries{{{"s", -1},
                                               {"p-", 1},
                                               {"p", -2},
                                               {"d-", 2},
                                               {"d", -3},
                                               {"f-", 3},
                                               {"f", -4},
                                               {"g-", 4},
                                               {"g", -5}}};

using FilePtr = std::unique_ptr<std::FILE, int (*)(std::FILE*)>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode), &std::fclose);
  if (!f) throw Error("cannot open " + path.string());
  return f;
}

// Line reader that tracks 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path) : in_(path) {
    if (!in_) throw Error("cannot open " + path.string());
  }

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  bool next_data(std::string& line) {
    while (next(line)) {
      size_t p = line.find_first_not_of(" \t");
      if (p == std::string::npos) continue;
      if (line[p] == '#') continue;
      return true;
    }
    return false;
  }

  int line() const { return line_no_; }

 private:
  std::ifstream in_;
  int line_no_ = 0;
};

// Parses exactly `count` numbers from a line.
template <size_t N>
std::array<double, N> numbers(const std::string& line, int line_no) {
  std::array<double, N> out{};
  const char* p = line.c_str();
  for (size_t i = 0; i < N; ++i) {
    char* end = nullptr;
    errno = 0;
    out[i] = std::strtod(p, &end);
    if (end == p || (errno == ERANGE && std::fabs(out[i]) > 1.0))
      throw FormatError("expected " + std::to_string(N) + " numbers", line_no);
    p = end;
  }
  while (*p == ' ' || *p == '\t') ++p;
  if (*p != '\0') throw FormatError("trailing characters after " + std::to_string(N) + " numbers", line_no);
  return out;
}

long integer(const std::string& line, int line_no) {
  const char* p = line.c_str();
  char* end = nullptr;
  long v = std::strtol(p, &end, 10);
  if (end == p) throw FormatError("expected an integer", line_no);
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') throw FormatError("expected a single integer", line_no);
  return v;
}

}  // namespace

int parse_symmetry(std::string_view label) {
  for (const auto& e : kSymmetries)
    if (label == e.label) return e.kappa;
  throw DomainError("unknown symmetry '" + std::string(label) +
                    "'; valid labels: s, p-, p, d-, d, f-, f, g-, g");
}

std::string symmetry_label(int kappa) {
  for (const auto& e : kSymmetries)
    if (e.kappa == kappa) return e.label;
  throw DomainError("no symmetry label for kappa " + std::to_string(kappa));
}

std::pair<int, int> parse_orbital(std::string_view label) {
  size_t i = 0;
  while (i < label.size() && label[i] >= '0' && label[i] <= '9') ++i;
  if (i == 0) throw DomainError("orbital label '" + std::string(label) + "' lacks a principal quantum number");
  int n = std::stoi(std::string(label.substr(0, i)));
  int kappa = parse_symmetry(label.substr(i));
  int l = kappa > 0 ? kappa : -kappa - 1;
  if (n < l + 1) throw DomainError("orbital label '" + std::string(label) + "': n too small");
  return {n, kappa};
}

std::string orbital_label(int n, int kappa) { return std::to_string(n) + symmetry_label(kappa); }

EnergyUnit parse_unit(std::string_view name) {
  if (name == "eV" || name == "ev") return EnergyUnit::eV;
  if (name == "Hartree" || name == "hartree" || name == "au" || name == "a.u.") return EnergyUnit::Hartree;
  throw DomainError("unknown energy unit '" + std::string(name) + "'; use eV or Hartree");
}

std::string unit_name(EnergyUnit unit) { return unit == EnergyUnit::eV ? "eV" : "Hartree"; }

double convert_energy(double value, EnergyUnit unit) {
  return unit == EnergyUnit::eV ? value / kHartreeInEv : value;
}

double energy_in_unit(double hartree, EnergyUnit unit) {
  return unit == EnergyUnit::eV ? hartree * kHartreeInEv : hartree;
}

RgfFunction to_rgf(const GreensFunction& gf, const Tabulation& tab) {
  RgfFunction f;
  f.energy = gf.energy();
  f.kappa = gf.kappa();
  f.mtp = tab.mtp;
  f.r = tab.r;
  f.gLL = tab.gLL;
  f.gLS = tab.gLS;
  f.gSL = tab.gSL;
  f.gSS = tab.gSS;
  return f;
}

void write_rgf(const std::filesystem::path& path, const RgfFile& file) {
  FilePtr f = open_file(path, "w");
  std::FILE* out = f.get();
  std::fprintf(out, "%s\n", RgfFile::kSignature);
  for (const auto& c : file.comments) std::fprintf(out, "# %s\n", c.c_str());
  std::fprintf(out, "%d\n", file.interpolation_mode);
  std::fprintf(out, "%zu\n", file.functions.size());
  for (const auto& fn : file.functions) {
    const size_t n = static_cast<size_t>(fn.mtp);
    if (fn.r.size() != n || fn.gLL.size() != n * n || fn.gLS.size() != n * n || fn.gSL.size() != n * n ||
        fn.gSS.size() != n * n)
      throw DomainError("write_rgf: table sizes do not match mtp");
    std::fprintf(out, "%.15e %d %d\n", fn.energy, fn.kappa, fn.mtp);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const size_t k = i * n + j;
        std::fprintf(out, "%.15e %.15e %.15e %.15e %.15e %.15e\n", fn.r[i], fn.r[j], fn.gLL[k], fn.gLS[k],
                     fn.gSL[k], fn.gSS[k]);
      }
  }
  if (std::ferror(out)) throw Error("write error on " + path.string());
}

RgfFile read_rgf(const std::filesystem::path& path) {
  LineReader in(path);
  RgfFile file;
  std::string line;
  if (!in.next(line) || line != RgfFile::kSignature)
    throw FormatError("missing '# DCFGF' signature", in.line() == 0 ? 1 : in.line());
  // Comment lines directly after the signature belong to the header.
  std::string data;
  bool have = false;
  while (in.next(line)) {
    if (!line.empty() && line[0] == '#') {
      file.comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    data = line;
    have = true;
    break;
  }
  if (!have) throw FormatError("missing interpolation mode", in.line());
  file.interpolation_mode = static_cast<int>(integer(data, in.line()));
  if (file.interpolation_mode != 1) throw FormatError("unsupported interpolation mode", in.line());
  if (!in.next_data(line)) throw FormatError("missing function count", in.line());
  long count = integer(line, in.line());
  if (count < 0) throw FormatError("negative function count", in.line());
  for (long fidx = 0; fidx < count; ++fidx) {
    if (!in.next_data(line)) throw FormatError("truncated file: missing function header", in.line());
    RgfFunction fn;
    {
      char* end = nullptr;
      const char* p = line.c_str();
      fn.energy = std::strtod(p, &end);
      if (end == p) throw FormatError("bad function header", in.line());
      p = end;
      long kappa = std::strtol(p, &end, 10);
      if (end == p) throw FormatError("bad function header", in.line());
      p = end;
      long mtp = std::strtol(p, &end, 10);
      if (end == p || mtp <= 0) throw FormatError("bad function header", in.line());
      fn.kappa = static_cast<int>(kappa);
      fn.mtp = static_cast<int>(mtp);
    }
    const size_t n = static_cast<size_t>(fn.mtp);
    fn.r.resize(n);
    fn.gLL.resize(n * n);
    fn.gLS.resize(n * n);
    fn.gSL.resize(n * n);
    fn.gSS.resize(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (!in.next(line)) throw FormatError("truncated table", in.line() + 1);
        auto v = numbers<6>(line, in.line());
        const size_t k = i * n + j;
        if (j == 0) fn.r[i] = v[0];
        fn.gLL[k] = v[2];
        fn.gLS[k] = v[3];
        fn.gSL[k] = v[4];
        fn.gSS[k] = v[5];
      }
    file.functions.push_back(std::move(fn));
  }
  return file;
}

void write_pot(const std::filesystem::path& path, const ChargeSpec& charge, double r_max) {
  std::vector<double> r;
  std::vector<double> z;
  if (const auto* c = std::get_if<CoulombCharge>(&charge)) {
    if (!(r_max > 0.0)) throw DomainError("write_pot: r_max must be positive");
    r = {0.0, r_max};
    z = {c->zeff, c->zeff};
  } else {
    const auto& t = std::get<TabulatedCharge>(charge);
    r = t.r;
    z = t.z;
  }
  FilePtr f = open_file(path, "w");
  std::fprintf(f.get(), "# POT\n%zu\n", r.size());
  for (size_t i = 0; i < r.size(); ++i) std::fprintf(f.get(), "%.15e %.15e\n", r[i], z[i]);
  if (std::ferror(f.get())) throw Error("write error on " + path.string());
}

ChargeSpec read_pot(const std::filesystem::path& path) {
  LineReader in(path);
  std::string line;
  if (!in.next(line) || line != "# POT") throw FormatError("missing '# POT' header", 1);
  if (!in.next_data(line)) throw FormatError("missing point count", in.line());
  long n = integer(line, in.line());
  if (n < 2) throw FormatError("a charge table needs at least two points", in.line());
  std::vector<double> r;
  std::vector<double> z;
  for (long i = 0; i < n; ++i) {
    if (!in.next_data(line)) throw FormatError("truncated charge table", in.line() + 1);
    auto v = numbers<2>(line, in.line());
    r.push_back(v[0]);
    z.push_back(v[1]);
  }
  return tabulated_charge(std::move(r), std::move(z));
}

}  // namespace cfgreens
