#pragma once

// Diameter bounds and the eps -> delta construction, in log2 scale.
//
// The values here routinely sit far below the smallest positive double
// (2^-600 and less), so every threshold and delta is carried as a base-2
// exponent. The exponent term of the threshold is also computed in base 2,
// which keeps delta = 2^-k + 2^-g(k) at least one binary order below it.

#include <optional>

#include "cara/maps.hpp"
#include "cara/mlc.hpp"

namespace cara {

/// A non-negative real stored as its base-2 logarithm, or exactly zero.
class Log2Real {
 public:
  static Log2Real zero() { return Log2Real(); }
  static Log2Real from_log2(double log2_value);
  /// Throws on negative or non-finite input.
  static Log2Real from_value(double value);

  bool is_zero() const { return zero_; }
  /// -infinity for zero.
  double log2() const;
  /// The plain value when log2 > -1000 (or zero), otherwise empty.
  std::optional<double> value() const;

  friend Log2Real operator+(const Log2Real& a, const Log2Real& b);
  /// Multiplication by 2^shift.
  Log2Real scaled(double shift) const;

  friend bool operator<(const Log2Real& a, const Log2Real& b);
  friend bool operator==(const Log2Real& a, const Log2Real& b) = default;

 private:
  Log2Real() = default;
  double log2_ = 0.0;
  bool zero_ = true;
};

/// sqrt(l^2 + 4 pi lambda) with l = 1 - sqrt(r^2 - pi lambda).
/// Requires lambda > 0 and 0 < r <= 1; throws "annulus too thin for radius"
/// when r^2 < pi lambda.
double thm32_diameter_bound(double lambda, double r);

struct BoundQuery {
  MapSpec map;
  Complex zeta0;
  double eps = 0.0;
};

/// sqrt((1 - l)^2 + (eps^2 - l^2) / 4).
double eqn1_radius(double eps, double l);

/// log2 of exp(8 pi^2 / (l^2 - eps^2)) * min_inverse_distance(rho(l));
/// -infinity where rho(l) >= 1 (the minimum is then 0).
double eqn1_log2_at(const BoundQuery& q, double l, int res = 1024);

struct ThresholdResult {
  Log2Real threshold;
  double l_star = 0.0;
};

/// Maximizes eqn1_log2_at over l_i = eps i / (l_grid + 1),
/// i = 1..l_grid (smallest l wins ties), then refines around the best grid
/// point by golden-section search. Throws "unsupported epsilon" unless
/// 0 < eps < 1.
ThresholdResult eqn1_threshold(const BoundQuery& q, int l_grid = 256, int res = 1024);

/// 2 - floor(log2 threshold).
long k_of(const BoundQuery& q, int l_grid = 256, int res = 1024);
long k_from_threshold(const Log2Real& threshold);

struct DeltaResult {
  long k = 0;
  Log2Real delta = Log2Real::zero();
  double l_star = 0.0;
  Log2Real threshold = Log2Real::zero();
  long g_used = 0;
};

/// delta = 2^-k + 2^-g(k). Throws "MLC table does not cover k" and, if delta
/// does not come out below the threshold, "soundness violation".
DeltaResult delta_of(const BoundQuery& q, const MLCTable& table, int l_grid = 256,
                     int res = 1024);

/// A concrete annulus centered at zeta0 for which the diameter bound applies:
/// inner radius r0, outer radius r1 just below min |zeta0 - psi(w)| over
/// |w| <= rho, and rho^2 >= pi lambda.
struct AnnulusBound {
  double rho = 0.0;
  double r1 = 0.0;
  double lambda = 0.0;
  double bound = 0.0;
};

/// Scans rho over n_rho grid points of (0, 1) and returns the admissible
/// annulus with the smallest bound, if any.
std::optional<AnnulusBound> best_annulus_bound(const MapSpec& map, Complex zeta0, double r0,
                                               int n_rho = 256, int res = 1024);

}  // namespace cara
