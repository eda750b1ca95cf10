// Graded face lattices of convex polytopes, with faces identified by their
// vertex sets.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyforge/schlafli.hpp"

namespace polyforge {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by schlafli_from_lattice when the local counts differ between flags.
class NotRegular : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

using VertexIndex = std::uint32_t;
/// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<VertexIndex>;

/// Rank -1 (the empty face) through rank n (the whole polytope). Faces in a
/// rank are kept in lexicographic order of their vertex sets, and incidence
/// between consecutive ranks is derived from vertex-set inclusion.
class FaceLattice {
 public:
  FaceLattice() = default;

  /// `ranks[k + 1]` holds the rank-k faces for k = -1..dimension. Faces are
  /// sorted and canonicalized but not validated; see validate().
  static FaceLattice from_all_ranks(int dimension, std::vector<std::vector<VertexSet>> ranks);

  /// `proper[k]` holds the rank-k faces for k = 0..dimension-1; the empty face
  /// and the whole polytope are added.
  static FaceLattice from_proper_faces(int dimension, std::vector<std::vector<VertexSet>> proper);

  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }

  /// rank in [-1, dimension]
  [[nodiscard]] const std::vector<VertexSet>& faces(int rank) const;
  [[nodiscard]] std::size_t count(int rank) const { return faces(rank).size(); }
  [[nodiscard]] const VertexSet& face(int rank, std::size_t index) const {
    return faces(rank)[index];
  }

  /// Indices of the rank-1 faces contained in the given face.
  [[nodiscard]] const std::vector<std::uint32_t>& subfaces(int rank, std::size_t index) const;
  /// Indices of the rank+1 faces containing the given face.
  [[nodiscard]] const std::vector<std::uint32_t>& superfaces(int rank, std::size_t index) const;

  [[nodiscard]] std::optional<std::size_t> find(int rank, std::span<const VertexIndex> vertices) const;

  friend bool operator==(const FaceLattice& a, const FaceLattice& b) {
    return a.dimension_ == b.dimension_ && a.ranks_ == b.ranks_;
  }

 private:
  void rebuild_incidence();

  int dimension_ = -1;
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<VertexSet>> ranks_;
  std::vector<std::vector<std::vector<std::uint32_t>>> sub_;
  std::vector<std::vector<std::vector<std::uint32_t>>> super_;
};

/// (f_0, ..., f_{n-1})
struct FVector {
  std::vector<std::uint64_t> counts;

  [[nodiscard]] FVector reversed() const;
  [[nodiscard]] std::string to_string() const;  // "24 96 96 24"
  friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const FaceLattice& lattice);

/// f_0 - f_1 + f_2 - ...
std::int64_t euler_characteristic(const FVector& f);

/// Alternating sum over every rank -1..n, improper faces included.
std::int64_t euler_characteristic_full(const FaceLattice& lattice);

/// Ranks reversed; the facets of `lattice` become the vertices of the result.
FaceLattice dual(const FaceLattice& lattice);

/// Number of maximal chains (flags).
std::uint64_t count_flags(const FaceLattice& lattice);

/// Reads {p_1, ..., p_{n-1}} off every flag and throws NotRegular unless all
/// flags agree.
SchlafliSymbol schlafli_from_lattice(const FaceLattice& lattice);

/// Rank- and incidence-preserving bijection test. Both lattices must be valid.
bool is_isomorphic(const FaceLattice& a, const FaceLattice& b);

struct ValidationReport {
  std::vector<std::string> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Gradedness, singleton vertices, inclusion consistency and the diamond
/// condition.
ValidationReport validate(const FaceLattice& lattice);

/// Throws LatticeError listing the violations if `validate` fails.
void require_valid(const FaceLattice& lattice, const std::string& what);

}  // namespace polyforge
