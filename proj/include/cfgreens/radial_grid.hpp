#pragma once

#include <span>
#include <vector>

namespace cfgreens {

// Exponential grid r_i = rnt (e^{i h} - 1), i = 0..n-1, so r_0 = 0.
// Everything that integrates or tabulates stops at node mtp-1.
class RadialGrid {
 public:
  static constexpr double kDefaultRnt = 2.177968408335618e-4;
  static constexpr double kDefaultH = 0.0625;
  static constexpr int kDefaultN = 390;

  static RadialGrid build(double rnt, double h, int n, double hp = 0.0);

  RadialGrid with_mtp(int mtp) const;

  double rnt() const { return rnt_; }
  double h() const { return h_; }
  double hp() const { return 0.0; }
  int n() const { return static_cast<int>(r_.size()); }
  int mtp() const { return mtp_; }
  double r(int i) const { return r_[static_cast<size_t>(i)]; }
  const std::vector<double>& nodes() const { return r_; }
  double r_max() const { return r_[static_cast<size_t>(mtp_ - 1)]; }

  // Trapezoid weights for nodes 0..mtp-1.
  const std::vector<double>& weights() const { return w_; }

  // Integral over [0, r_max] of a function tabulated on nodes 0..mtp-1.
  double integrate(std::span<const double> values) const;

  double interp_linear(std::span<const double> values, double r) const;

  // Index i with r_i <= r < r_{i+1}, clamped to the last interval below mtp.
  int interval_of(double r) const;

  // Index of the node equal to r within a relative 1e-12, or -1.
  int find_node(double r) const;

  bool same_nodes(const RadialGrid& other) const;

 private:
  RadialGrid() = default;
  void compute_weights();

  double rnt_ = 0.0;
  double h_ = 0.0;
  int mtp_ = 0;
  std::vector<double> r_;
  std::vector<double> w_;
};

}  // namespace cfgreens
