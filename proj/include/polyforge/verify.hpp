// Invariant checks run against a constructed polytope.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyforge/constructors.hpp"
#include "polyforge/lattice.hpp"

namespace polyforge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Closed-form f-vector for the named family (binomial formulas for the
/// generic families, the known tables for the exceptional objects).
std::optional<FVector> expected_f_vector(const PolytopeName& name);

/// Validity, f-vector, Euler sums, Schlafli symbol, duality, flag count vs.
/// automorphism order, the 3-d edge rule and (when present) the geometry.
std::vector<CheckResult> verify_polytope(const NamedPolytope& polytope);

/// The objects `verify all` visits.
std::vector<PolytopeName> default_verification_set();

}  // namespace polyforge
