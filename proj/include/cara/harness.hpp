#pragma once

// Empirical verification of continuity at a boundary point and of the
// component diameter bound, plus the configurable suite runner.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cara/bounds.hpp"
#include "cara/maps.hpp"

namespace cara {

struct VerificationReport {
  std::string kind;      // "continuity" or "diameter"
  std::string instance;  // human-readable descriptor
  long samples = 0;
  long violations = 0;
  double worst_ratio = 0.0;
  std::uint64_t seed = 0;
  long runtime_ms = 0;  // not part of serialized reports
  bool vacuous = false;
  std::string note;
  std::optional<double> diameter;
};

/// Draws points uniformly from the delta-disk at zeta0, keeps those inside
/// the domain, and counts |phi(z) - phi(zeta0)| >= eps. A delta below the
/// representable scale near zeta0 yields a vacuous report.
VerificationReport verify_continuity(const MapSpec& map, Complex zeta0, double eps,
                                     const Log2Real& delta, long n_samples, std::uint64_t seed);

/// Diameter of phi over the cell centers of C(D; zeta0, r0) on the traced
/// domain. violations is 1 when the diameter is not below eps.
VerificationReport verify_diameter(const MapSpec& map, Complex zeta0, double r0, double eps,
                                   int grid_n);

/// Uniform double in [0, 1) from 53 high bits; platform independent.
double unit_uniform(std::uint64_t bits);

struct SuiteOutcome {
  nlohmann::json report;
  bool passed = true;
};

/// Runs the criteria and instances listed in `config`.
SuiteOutcome run_suite(const nlohmann::json& config);

}  // namespace cara
