#include "cara/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cara/annulus.hpp"

namespace cara {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
}  // namespace

Log2Real Log2Real::from_log2(double log2_value) {
  if (std::isnan(log2_value) || log2_value == std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("log2 value must be finite or -inf");
  }
  Log2Real out;
  if (log2_value == kNegInf) return out;
  out.log2_ = log2_value;
  out.zero_ = false;
  return out;
}

Log2Real Log2Real::from_value(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("value must be finite and non-negative");
  }
  if (value == 0.0) return zero();
  return from_log2(std::log2(value));
}

double Log2Real::log2() const { return zero_ ? kNegInf : log2_; }

std::optional<double> Log2Real::value() const {
  if (zero_) return 0.0;
  if (log2_ <= -1000.0) return std::nullopt;
  return std::exp2(log2_);
}

Log2Real operator+(const Log2Real& a, const Log2Real& b) {
  if (a.zero_) return b;
  if (b.zero_) return a;
  const double hi = std::max(a.log2_, b.log2_);
  const double lo = std::min(a.log2_, b.log2_);
  return Log2Real::from_log2(hi + std::log2(1.0 + std::exp2(lo - hi)));
}

Log2Real Log2Real::scaled(double shift) const {
  if (zero_) return *this;
  return from_log2(log2_ + shift);
}

bool operator<(const Log2Real& a, const Log2Real& b) { return a.log2() < b.log2(); }

double thm32_diameter_bound(double lambda, double r) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be positive");
  }
  if (!(r > 0.0) || r > 1.0) throw std::invalid_argument("radius must lie in (0, 1]");
  const double slack = r * r - kPi * lambda;
  if (slack < 0.0) throw std::domain_error("annulus too thin for radius");
  const double l = 1.0 - std::sqrt(slack);
  return std::sqrt(l * l + 4.0 * kPi * lambda);
}

double eqn1_radius(double eps, double l) {
  return std::sqrt((1.0 - l) * (1.0 - l) + (eps * eps - l * l) / 4.0);
}

double eqn1_log2_at(const BoundQuery& q, double l, int res) {
  const double rho = eqn1_radius(q.eps, l);
  if (rho >= 1.0) return kNegInf;
  const double exponent = 8.0 * kPi * kPi / ((l * l - q.eps * q.eps) * std::numbers::ln2);
  return exponent + std::log2(min_inverse_distance(q.map, q.zeta0, rho, res));
}

ThresholdResult eqn1_threshold(const BoundQuery& q, int l_grid, int res) {
  if (!(q.eps > 0.0 && q.eps < 1.0)) throw std::invalid_argument("unsupported epsilon");
  if (l_grid < 64) throw std::invalid_argument("l_grid must be at least 64");
  const double step = q.eps / (l_grid + 1);
  int best_i = 0;
  double best = kNegInf;
  for (int i = 1; i <= l_grid; ++i) {
    const double v = eqn1_log2_at(q, i * step, res);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  if (best_i == 0) return {Log2Real::zero(), 0.0};

  double lo = (best_i - 1) * step;
  double hi = (best_i + 1) * step;
  if (lo <= 0.0) lo = 0.5 * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = eqn1_log2_at(q, a, res);
  double fb = eqn1_log2_at(q, b, res);
  while (hi - lo > 1e-12 * q.eps) {
    if (fa >= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = eqn1_log2_at(q, a, res);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = eqn1_log2_at(q, b, res);
    }
  }
  double l_star = best_i * step;
  const double refined_l = fa >= fb ? a : b;
  const double refined = std::max(fa, fb);
  if (refined > best) {
    best = refined;
    l_star = refined_l;
  }
  return {Log2Real::from_log2(best), l_star};
}

long k_from_threshold(const Log2Real& threshold) {
  if (threshold.is_zero()) throw std::domain_error("threshold is zero");
  return 2 - static_cast<long>(std::floor(threshold.log2()));
}

long k_of(const BoundQuery& q, int l_grid, int res) {
  return k_from_threshold(eqn1_threshold(q, l_grid, res).threshold);
}

DeltaResult delta_of(const BoundQuery& q, const MLCTable& table, int l_grid, int res) {
  const ThresholdResult eq = eqn1_threshold(q, l_grid, res);
  DeltaResult out;
  out.k = k_from_threshold(eq.threshold);
  out.threshold = eq.threshold;
  out.l_star = eq.l_star;
  out.g_used = table.at(out.k);
  out.delta = Log2Real::from_log2(-static_cast<double>(out.k)) +
              Log2Real::from_log2(-static_cast<double>(out.g_used));
  if (!(out.delta < out.threshold)) throw std::logic_error("soundness violation");
  return out;
}

std::optional<AnnulusBound> best_annulus_bound(const MapSpec& map, Complex zeta0, double r0,
                                               int n_rho, int res) {
  if (!(r0 > 0.0)) throw std::invalid_argument("r0 must be positive");
  std::optional<AnnulusBound> best;
  for (int i = 1; i <= n_rho; ++i) {
    const double rho = static_cast<double>(i) / (n_rho + 1);
    // The closed annulus must miss psi of the closed rho-disk.
    const double r1 = min_inverse_distance(map, zeta0, rho, res) * (1.0 - 1e-9);
    if (!(r1 > r0)) continue;
    const double lambda = extremal_length(Annulus(to_point(zeta0), r0, r1));
    if (rho * rho < kPi * lambda) continue;
    const double bound = thm32_diameter_bound(lambda, rho);
    if (!best || bound < best->bound) best = AnnulusBound{rho, r1, lambda, bound};
  }
  return best;
}

}  // namespace cara
