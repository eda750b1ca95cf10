// Flag enumeration and the flag graph of a face lattice.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "polyforge/lattice.hpp"

namespace polyforge {

/// Calls `visit` with the proper faces (rank 0..n-1, as face indices) of every
/// flag, in lexicographic order.
void for_each_flag(const FaceLattice& lattice,
                   const std::function<void(std::span<const std::uint32_t>)>& visit);

/// All flags plus, for each flag and rank i, the unique flag differing from it
/// exactly at rank i. Construction throws LatticeError if some rank-i
/// interval is not a diamond.
class FlagGraph {
 public:
  explicit FlagGraph(const FaceLattice& lattice);

  [[nodiscard]] int rank_count() const { return n_; }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] std::span<const std::uint32_t> flag(std::size_t index) const {
    return {faces_.data() + index * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  [[nodiscard]] std::uint32_t neighbor(std::size_t index, int rank) const {
    return adjacent_[index * static_cast<std::size_t>(n_) + static_cast<std::size_t>(rank)];
  }
  [[nodiscard]] std::optional<std::size_t> index_of(std::span<const std::uint32_t> flag) const;

 private:
  int n_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> faces_;
  std::vector<std::uint32_t> adjacent_;
};

/// Transports the base flag of `source` onto flags of `target` along a BFS
/// spanning tree of the source flag graph. Each target flag determines at most
/// one isomorphism sending the base flag to it; induced_map finds it.
class FlagTransport {
 public:
  FlagTransport(const FaceLattice& source, const FlagGraph& source_flags,
                const FaceLattice& target, const FlagGraph& target_flags);

  /// Vertex bijection source -> target if the candidate determined by
  /// base flag -> `target_flag` is an isomorphism, otherwise nullopt.
  [[nodiscard]] std::optional<std::vector<VertexIndex>> induced_map(std::size_t target_flag) const;

 private:
  const FaceLattice* source_;
  const FlagGraph* source_flags_;
  const FaceLattice* target_;
  const FlagGraph* target_flags_;
  std::vector<std::uint32_t> order_;   // BFS-tree ancestors of the vertex representatives
  std::vector<std::uint32_t> parent_;  // position in order_ of the tree parent
  std::vector<std::uint8_t> color_;    // rank crossed from the parent
  std::vector<std::uint32_t> vertex_rep_;  // position in order_ of a flag at each vertex
  // Order-independent facet keys: sum of per-vertex random words.
  std::vector<std::uint64_t> vertex_key_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> facet_keys_;  // sorted
};

}  // namespace polyforge
