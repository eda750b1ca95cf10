// Symmetry groups: combinatorial automorphisms of face lattices and finite
// groups of unit quaternions.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polyforge/algebras.hpp"
#include "polyforge/lattice.hpp"

namespace polyforge {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultAutomorphismCap = 6;

/// A bijection of vertex indices.
struct VertexPermutation {
  std::vector<VertexIndex> image;
  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
};

/// Every automorphism, each found as the unique extension of base flag -> some
/// flag. The identity comes first.
std::vector<VertexPermutation> automorphisms(const FaceLattice& lattice,
                                             int dimension_cap = kDefaultAutomorphismCap);

/// Order of the combinatorial automorphism group. Uses all hardware threads;
/// the result does not depend on scheduling.
std::uint64_t automorphism_order(const FaceLattice& lattice,
                                 int dimension_cap = kDefaultAutomorphismCap);

/// Half the automorphism order; throws LatticeError if that order is odd.
std::uint64_t rotation_order(const FaceLattice& lattice,
                             int dimension_cap = kDefaultAutomorphismCap);

/// |Rot| == 2 f_1 for a 3-dimensional lattice.
bool verify_edge_rule(const FaceLattice& lattice);

// ---------------------------------------------------------------------------

struct QuaternionGroup {
  /// Sorted by numeric_less.
  std::vector<Quaternion> elements;
  std::vector<Quaternion> generators;

  [[nodiscard]] std::size_t order() const { return elements.size(); }
  [[nodiscard]] bool contains(const Quaternion& q) const;
};

/// Multiplicative closure of unit-norm generators. Throws CapExceeded once
/// more than `cap` elements are found and std::invalid_argument for a
/// generator of norm != 1.
QuaternionGroup group_closure(std::span<const Quaternion> generators, std::size_t cap);

/// Closure of (1+i+j+k)/2 and i: 24 elements.
QuaternionGroup binary_tetrahedral();

/// Closure of (1+i+j+k)/2 and (phi + phi^-1 i + j)/2: the 120 icosians.
QuaternionGroup binary_icosahedral();

}  // namespace polyforge
