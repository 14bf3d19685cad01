#pragma once

// Moduli of local connectivity for polygonal Jordan curves.
//
// A table g is a modulus of local connectivity at level k when any two curve
// points at distance at most 2^-g(k) are joined by a subarc of diameter
// smaller than 2^-k. Checks here are sampled: they can refute a table but
// never certify one.

#include <optional>
#include <vector>

#include "cara/geometry.hpp"
#include "cara/jordan_curve.hpp"

namespace cara {

class MLCTable {
 public:
  MLCTable() = default;
  explicit MLCTable(std::vector<int> g, std::optional<int> extension_pad = std::nullopt);

  /// g(k) = k + pad for every k.
  static MLCTable linear(int kmax, int pad);

  int kmax() const { return static_cast<int>(g_.size()) - 1; }
  const std::vector<int>& values() const { return g_; }
  std::optional<int> extension_pad() const { return pad_; }
  bool covers(long k) const;
  /// g(k); beyond kmax uses the declared linear rule g(k) = k + pad.
  long at(long k) const;
  /// Same table, extended linearly beyond kmax with pad g(kmax) - kmax.
  MLCTable with_linear_extension() const;
  bool is_increasing() const;

 private:
  std::vector<int> g_;
  std::optional<int> pad_;
};

/// A sampled pair that violates the table at level k.
struct MLCWitness {
  CurvePoint p;
  CurvePoint q;
  int k = 0;
  double pair_distance = 0.0;
  double best_arc_diameter = 0.0;
};

/// Samples the curve at `resolution` points per unit of perimeter (plus every
/// vertex) and tests every sampled pair with 0 < d <= 2^-g(k). Returns the
/// violating pair whose p comes first in traversal order, or nullopt.
std::optional<MLCWitness> check_mlc(const JordanCurve& curve, const MLCTable& table, int k,
                                    int resolution);

/// Smallest passing g(k) for each k, without padding or monotonization.
std::vector<int> estimate_mlc_raw(const JordanCurve& curve, int kmax, int resolution);

/// estimate_mlc_raw + 1, then made non-decreasing.
MLCTable estimate_mlc(const JordanCurve& curve, int kmax, int resolution);

/// Flood-fills the component of z0 in disk - curve and reports whether its
/// boundary reaches zeta0 (within one grid cell). Throws
/// "theorem hypotheses not met: ..." naming the failed clause.
bool verify_membership_theorem(const JordanCurve& curve, const MLCTable& table,
                               const Circle& disk, Point z0, CurvePoint zeta0, int k,
                               int grid_n);

}  // namespace cara
