#pragma once

// Jordan domains given by closed-form conformal maps. Each MapSpec describes
// psi : closed unit disk -> closure of the domain (a univalent map) together
// with its inverse phi : domain -> unit disk.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cara/geometry.hpp"

namespace cara {

class MapSpec;

struct IdentityMap {};

/// psi(w) = (w + a) / (1 + conj(a) w), |a| < 1. A disk automorphism.
struct MobiusMap {
  Complex a;
};

/// psi(w) = w + c w^2, |c| <= 1/2 (univalent on the closed disk).
struct QuadraticMap {
  Complex c;
};

/// psi(w) = scale * inner(w) + shift.
struct AffineMap {
  double scale = 1.0;
  Complex shift;
  std::shared_ptr<const MapSpec> inner;
};

class MapSpec {
 public:
  using Kind = std::variant<IdentityMap, MobiusMap, QuadraticMap, AffineMap>;

  static MapSpec identity();
  static MapSpec mobius(Complex a);
  static MapSpec quadratic(Complex c);
  static MapSpec affine(double scale, Complex shift, MapSpec inner);

  const Kind& kind() const { return kind_; }

  /// Disk -> domain, no range check. Defined wherever the formula is.
  Complex psi(Complex w) const;
  Complex psi_prime(Complex w) const;
  /// Domain -> disk, no range check. Empty where the formula is singular.
  std::optional<Complex> phi(Complex z) const;

  std::string describe() const;

 private:
  explicit MapSpec(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// psi(w) for |w| <= 1 (+1e-12); throws "outside closed disk" otherwise.
Complex eval_inverse(const MapSpec& map, Complex w);

/// phi(z); throws "not in domain" unless the preimage has |w| <= 1 + 1e-10.
Complex eval_forward(const MapSpec& map, Complex z);

/// min |zeta0 - psi(w)| over |w| <= rho. The minimum of this distance is
/// attained on |w| = rho (maximum principle for 1/(zeta0 - psi)), so the
/// search samples `res` points of that circle and refines each local minimum
/// by golden-section search.
double min_inverse_distance(const MapSpec& map, Complex zeta0, double rho,
                            int res = 1024);

/// Boundary point psi(e^{i theta}).
inline Complex boundary_point(const MapSpec& map, double theta) {
  return map.psi(std::polar(1.0, theta));
}

struct CatalogEntry {
  std::string name;
  MapSpec map;
};

/// Jordan domains with closed-form maps used by tests and the suite.
std::vector<CatalogEntry> map_catalog();

}  // namespace cara
