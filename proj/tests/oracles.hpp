// Independent reference computations for the test suites. Nothing here goes
// through the library's incidence tables, flag graph or transport code: faces
// are treated as raw vertex sets and compared with std::includes.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "polyforge/algebras.hpp"
#include "polyforge/constructors.hpp"
#include "polyforge/exactnum.hpp"
#include "polyforge/lattice.hpp"

namespace oracle {

using polyforge::FaceLattice;
using polyforge::QuadExt;
using polyforge::Quaternion;
using polyforge::Rational;
using polyforge::VertexSet;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

inline std::vector<std::uint64_t> simplex_f(int n) {
  std::vector<std::uint64_t> f;
  for (int k = 0; k < n; ++k) f.push_back(binomial(n + 1, k + 1));
  return f;
}

inline std::vector<std::uint64_t> hypercube_f(int n) {
  std::vector<std::uint64_t> f;
  for (int k = 0; k < n; ++k) f.push_back(binomial(n, k) << (n - k));
  return f;
}

inline std::vector<std::uint64_t> cross_f(int n) {
  std::vector<std::uint64_t> f;
  for (int k = 0; k < n; ++k) f.push_back(binomial(n, k + 1) << (k + 1));
  return f;
}

inline bool contains(const VertexSet& big, const VertexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Rank k faces strictly between `lo` (rank k-1) and `hi` (rank k+1).
inline std::size_t between(const FaceLattice& l, int k, const VertexSet& lo, const VertexSet& hi) {
  std::size_t n = 0;
  for (const auto& h : l.faces(k)) {
    if (contains(h, lo) && contains(hi, h)) ++n;
  }
  return n;
}

// Every maximal chain from the empty face to the top, found by scanning all
// faces of the next rank for supersets.
inline std::uint64_t brute_force_flags(const FaceLattice& l) {
  const int n = l.dimension();
  std::function<std::uint64_t(int, const VertexSet&)> walk = [&](int rank, const VertexSet& cur) {
    if (rank == n - 1) return std::uint64_t{1};
    std::uint64_t total = 0;
    for (const auto& f : l.faces(rank + 1)) {
      if (f.size() > cur.size() && contains(f, cur)) total += walk(rank + 1, f);
    }
    return total;
  };
  return walk(-1, VertexSet{});
}

// Diamond condition checked over every comparable pair two ranks apart.
inline bool diamond_holds(const FaceLattice& l) {
  const int n = l.dimension();
  for (int k = 0; k < n; ++k) {
    for (const auto& lo : l.faces(k - 1)) {
      for (const auto& hi : l.faces(k + 1)) {
        if (!contains(hi, lo)) continue;
        if (between(l, k, lo, hi) != 2) return false;
      }
    }
  }
  return true;
}

// Graded: each face at rank k strictly contains some face at rank k-1 and
// lies strictly inside some face at rank k+1.
inline bool graded(const FaceLattice& l) {
  const int n = l.dimension();
  for (int k = 0; k <= n; ++k) {
    for (const auto& f : l.faces(k)) {
      bool below = false;
      for (const auto& g : l.faces(k - 1)) below = below || (g.size() < f.size() && contains(f, g));
      if (!below) return false;
    }
  }
  for (int k = -1; k < n; ++k) {
    for (const auto& f : l.faces(k)) {
      bool above = false;
      for (const auto& g : l.faces(k + 1)) above = above || (g.size() > f.size() && contains(g, f));
      if (!above) return false;
    }
  }
  return true;
}

// up[k+1][i] lists the rank k+1 faces containing face i of rank k, found by
// std::includes over raw vertex sets.
inline std::vector<std::vector<std::vector<std::uint32_t>>> superset_lists(const FaceLattice& l) {
  const int n = l.dimension();
  std::vector<std::vector<std::vector<std::uint32_t>>> up(static_cast<std::size_t>(n + 1));
  for (int k = -1; k < n; ++k) {
    auto& row = up[static_cast<std::size_t>(k + 1)];
    row.resize(l.count(k));
    for (std::size_t i = 0; i < l.count(k); ++i) {
      for (std::size_t j = 0; j < l.count(k + 1); ++j) {
        const auto& f = l.face(k + 1, j);
        if (f.size() > l.face(k, i).size() && contains(f, l.face(k, i)))
          row[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
  return up;
}

// The local Schläfli entries seen from each flag; one vector per flag.
inline std::set<std::vector<std::size_t>> local_symbols(const FaceLattice& l) {
  const int n = l.dimension();
  const auto up = superset_lists(l);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::uint32_t> chain(static_cast<std::size_t>(n + 2), 0);  // chain[r+1] = rank r face
  std::function<void(int)> walk = [&](int rank) {
    if (rank == n) {
      // Entry j counts rank j faces between the chain's rank j-1 and j+2 faces.
      std::vector<std::size_t> entries;
      for (int j = 0; j + 2 <= n; ++j) {
        const VertexSet& hi = l.face(j + 2, chain[static_cast<std::size_t>(j + 3)]);
        std::size_t count = 0;
        for (auto h : up[static_cast<std::size_t>(j)][chain[static_cast<std::size_t>(j)]]) {
          if (contains(hi, l.face(j, h))) ++count;
        }
        entries.push_back(count);
      }
      seen.insert(entries);
      return;
    }
    for (auto next : up[static_cast<std::size_t>(rank + 1)][chain[static_cast<std::size_t>(rank + 1)]]) {
      chain[static_cast<std::size_t>(rank + 2)] = next;
      walk(rank + 1);
    }
  };
  walk(-1);
  return seen;
}

// Face counts over ranks -1..n, recomputed from the recurrences for the three
// operators.
inline std::vector<std::uint64_t> full_counts(const FaceLattice& l) {
  std::vector<std::uint64_t> c;
  for (int k = -1; k <= l.dimension(); ++k) c.push_back(l.count(k));
  return c;
}

// at(c, k) reads rank k from a full_counts vector, zero outside -1..n.
inline std::uint64_t at(const std::vector<std::uint64_t>& c, int k) {
  const int idx = k + 1;
  return idx < 0 || idx >= static_cast<int>(c.size()) ? 0 : c[static_cast<std::size_t>(idx)];
}

inline std::vector<std::uint64_t> pyramid_counts(const std::vector<std::uint64_t>& c) {
  const int n = static_cast<int>(c.size()) - 2;
  std::vector<std::uint64_t> out{1};
  for (int k = 0; k <= n + 1; ++k) out.push_back(at(c, k) + at(c, k - 1));
  return out;
}

inline std::vector<std::uint64_t> prism_counts(const std::vector<std::uint64_t>& c) {
  const int n = static_cast<int>(c.size()) - 2;
  std::vector<std::uint64_t> out{1};
  for (int k = 0; k <= n; ++k) out.push_back(2 * at(c, k) + (k >= 1 ? at(c, k - 1) : 0));
  out.push_back(1);
  return out;
}

inline std::vector<std::uint64_t> bipyramid_counts(const std::vector<std::uint64_t>& c) {
  const int n = static_cast<int>(c.size()) - 2;
  std::vector<std::uint64_t> out{1};
  for (int k = 0; k <= n; ++k) out.push_back((k <= n - 1 ? at(c, k) : 0) + 2 * at(c, k - 1));
  out.push_back(1);
  return out;
}

// ---------------------------------------------------------------------------
// Random exact elements.

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline QuadExt random_quad(std::mt19937_64& rng) {
  return QuadExt(random_rational(rng), random_rational(rng));
}

inline Quaternion random_quaternion(std::mt19937_64& rng) {
  return {random_quad(rng), random_quad(rng), random_quad(rng), random_quad(rng)};
}

inline polyforge::Octonion random_octonion(std::mt19937_64& rng) {
  polyforge::Octonion o;
  for (auto& c : o.c) c = random_rational(rng);
  return o;
}

// ---------------------------------------------------------------------------
// The 120 icosians, listed directly rather than generated: the 24 elements
// of the binary tetrahedral group plus the 96 even permutations of
// (0, ±1, ±phi^-1, ±phi)/2.

inline std::vector<std::array<QuadExt, 4>> tetrahedral_units() {
  std::vector<std::array<QuadExt, 4>> out;
  for (int axis = 0; axis < 4; ++axis) {
    for (int s : {1, -1}) {
      std::array<QuadExt, 4> v{QuadExt(0), QuadExt(0), QuadExt(0), QuadExt(0)};
      v[static_cast<std::size_t>(axis)] = QuadExt(s);
      out.push_back(v);
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::array<QuadExt, 4> v;
    for (int b = 0; b < 4; ++b) v[static_cast<std::size_t>(b)] = QuadExt(Rational((mask >> b) & 1 ? -1 : 1, 2));
    out.push_back(v);
  }
  return out;
}

inline std::vector<std::array<QuadExt, 4>> icosian_units() {
  auto out = tetrahedral_units();
  const QuadExt half(Rational(1, 2));
  const std::array<QuadExt, 4> base{QuadExt(0), half, half * QuadExt::phi_inverse(),
                                    half * QuadExt::phi()};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    if (inversions % 2 != 0) continue;
    for (int mask = 0; mask < 8; ++mask) {
      std::array<QuadExt, 4> v;
      for (int slot = 0; slot < 4; ++slot) {
        const int src = perm[static_cast<std::size_t>(slot)];
        QuadExt value = base[static_cast<std::size_t>(src)];
        if (src > 0 && ((mask >> (src - 1)) & 1)) value = -value;
        v[static_cast<std::size_t>(slot)] = value;
      }
      out.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::array<QuadExt, 4> as_array(const Quaternion& q) { return q.components(); }

struct ArrayLess {
  bool operator()(const std::array<QuadExt, 4>& a, const std::array<QuadExt, 4>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        polyforge::StructuralLess{});
  }
};

using PointSet = std::set<std::vector<QuadExt>, std::function<bool(const std::vector<QuadExt>&,
                                                                  const std::vector<QuadExt>&)>>;

inline PointSet make_point_set() {
  return PointSet([](const std::vector<QuadExt>& a, const std::vector<QuadExt>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        polyforge::StructuralLess{});
  });
}

}  // namespace oracle
