#include "cara/maps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cara {

MapSpec MapSpec::identity() { return MapSpec(IdentityMap{}); }

MapSpec MapSpec::mobius(Complex a) {
  if (!(std::abs(a) < 1.0)) throw std::invalid_argument("mobius map needs |a| < 1");
  return MapSpec(MobiusMap{a});
}

MapSpec MapSpec::quadratic(Complex c) {
  if (!(std::abs(c) <= 0.5)) throw std::invalid_argument("quadratic map needs |c| <= 1/2");
  return MapSpec(QuadraticMap{c});
}

MapSpec MapSpec::affine(double scale, Complex shift, MapSpec inner) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("affine map needs a positive finite scale");
  }
  return MapSpec(AffineMap{scale, shift, std::make_shared<const MapSpec>(std::move(inner))});
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Complex MapSpec::psi(Complex w) const {
  return std::visit(
      overloaded{
          [&](const IdentityMap&) { return w; },
          [&](const MobiusMap& m) { return (w + m.a) / (1.0 + std::conj(m.a) * w); },
          [&](const QuadraticMap& m) { return w + m.c * w * w; },
          [&](const AffineMap& m) { return m.scale * m.inner->psi(w) + m.shift; },
      },
      kind_);
}

Complex MapSpec::psi_prime(Complex w) const {
  return std::visit(
      overloaded{
          [&](const IdentityMap&) { return Complex(1.0); },
          [&](const MobiusMap& m) {
            const Complex den = 1.0 + std::conj(m.a) * w;
            return (1.0 - std::norm(m.a)) / (den * den);
          },
          [&](const QuadraticMap& m) { return 1.0 + 2.0 * m.c * w; },
          [&](const AffineMap& m) { return m.scale * m.inner->psi_prime(w); },
      },
      kind_);
}

std::optional<Complex> MapSpec::phi(Complex z) const {
  return std::visit(
      overloaded{
          [&](const IdentityMap&) -> std::optional<Complex> { return z; },
          [&](const MobiusMap& m) -> std::optional<Complex> {
            const Complex den = 1.0 - std::conj(m.a) * z;
            if (den == 0.0) return std::nullopt;
            return (z - m.a) / den;
          },
          [&](const QuadraticMap& m) -> std::optional<Complex> {
            // Root of c w^2 + w - z = 0 continuous in c at c = 0, written in
            // the cancellation-free form 2z / (1 + sqrt(1 + 4cz)).
            return 2.0 * z / (1.0 + std::sqrt(1.0 + 4.0 * m.c * z));
          },
          [&](const AffineMap& m) -> std::optional<Complex> {
            return m.inner->phi((z - m.shift) / m.scale);
          },
      },
      kind_);
}

std::string MapSpec::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const IdentityMap&) { os << "identity"; },
                 [&](const MobiusMap& m) { os << "mobius(a=" << m.a << ")"; },
                 [&](const QuadraticMap& m) { os << "quad(c=" << m.c << ")"; },
                 [&](const AffineMap& m) {
                   os << "affine(s=" << m.scale << ",shift=" << m.shift << ","
                      << m.inner->describe() << ")";
                 },
             },
             kind_);
  return os.str();
}

Complex eval_inverse(const MapSpec& map, Complex w) {
  if (std::abs(w) > 1.0 + 1e-12) throw std::domain_error("outside closed disk");
  return map.psi(w);
}

Complex eval_forward(const MapSpec& map, Complex z) {
  const std::optional<Complex> w = map.phi(z);
  if (!w || !std::isfinite(w->real()) || !std::isfinite(w->imag()) ||
      std::abs(*w) > 1.0 + 1e-10) {
    throw std::domain_error("not in domain");
  }
  return *w;
}

double min_inverse_distance(const MapSpec& map, Complex zeta0, double rho, int res) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0, 1)");
  if (res < 8) throw std::invalid_argument("resolution must be at least 8");
  const std::optional<Complex> pre = map.phi(zeta0);
  if (!pre || std::abs(std::abs(*pre) - 1.0) > 1e-6) {
    throw std::invalid_argument("zeta0 is not a boundary point");
  }

  const auto f = [&](double theta) { return std::abs(zeta0 - map.psi(std::polar(rho, theta))); };
  const double step = 2.0 * std::numbers::pi / res;
  std::vector<double> values(res);
  for (int j = 0; j < res; ++j) values[j] = f(j * step);

  double best = values[0];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int j = 0; j < res; ++j) {
    const double prev = values[(j + res - 1) % res];
    const double next = values[(j + 1) % res];
    best = std::min(best, values[j]);
    if (values[j] > prev || values[j] > next) continue;
    double lo = (j - 1) * step;
    double hi = (j + 1) * step;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > 1e-13) {
      if (fc < fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - inv_phi * (hi - lo);
        fc = f(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + inv_phi * (hi - lo);
        fd = f(d);
      }
    }
    best = std::min({best, fc, fd});
  }
  return best;
}

std::vector<CatalogEntry> map_catalog() {
  return {
      {"identity", MapSpec::identity()},
      {"mobius_a0.5", MapSpec::mobius({0.5, 0.0})},
      {"mobius_a0.3+0.2i", MapSpec::mobius({0.3, 0.2})},
      {"quad_c0.25", MapSpec::quadratic({0.25, 0.0})},
      {"affine_quad_c0.2i", MapSpec::affine(2.0, {1.0, -0.5}, MapSpec::quadratic({0.0, 0.2}))},
  };
}

}  // namespace cara
