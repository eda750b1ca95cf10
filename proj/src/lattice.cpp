#include "polyforge/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "polyforge/flags.hpp"

namespace polyforge {

namespace {

std::size_t slot(int rank) { return static_cast<std::size_t>(rank + 1); }

bool lex_less(std::span<const VertexIndex> a, std::span<const VertexIndex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool contains(const VertexSet& outer, const VertexSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

/// For one rank, the faces containing each vertex, plus the faces with no
/// vertices at all.
struct VertexIndexOfRank {
  std::vector<std::vector<std::uint32_t>> by_vertex;
  std::vector<std::uint32_t> empty_faces;

  VertexIndexOfRank(const std::vector<VertexSet>& faces, std::size_t vertex_count)
      : by_vertex(vertex_count) {
    for (std::uint32_t i = 0; i < faces.size(); ++i) {
      if (faces[i].empty()) empty_faces.push_back(i);
      for (VertexIndex v : faces[i]) by_vertex[v].push_back(i);
    }
  }

  /// Indices (ascending) of the faces that are subsets of `outer`.
  std::vector<std::uint32_t> contained_in(const VertexSet& outer, const std::vector<VertexSet>& faces,
                                          std::vector<std::uint32_t>& stamp,
                                          std::uint32_t tick) const {
    std::vector<std::uint32_t> out = empty_faces;
    for (VertexIndex v : outer) {
      for (std::uint32_t h : by_vertex[v]) {
        if (stamp[h] == tick) continue;
        stamp[h] = tick;
        if (contains(outer, faces[h])) out.push_back(h);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

FaceLattice FaceLattice::from_all_ranks(int dimension, std::vector<std::vector<VertexSet>> ranks) {
  if (dimension < 0) throw LatticeError("lattice dimension must be >= 0");
  if (ranks.size() != slot(dimension) + 1) {
    throw LatticeError("expected " + std::to_string(dimension + 2) + " ranks, got " +
                       std::to_string(ranks.size()));
  }
  FaceLattice out;
  out.dimension_ = dimension;
  std::size_t max_vertex = 0;
  bool any_vertex = false;
  for (auto& rank : ranks) {
    for (auto& face : rank) {
      std::sort(face.begin(), face.end());
      face.erase(std::unique(face.begin(), face.end()), face.end());
      if (!face.empty()) {
        any_vertex = true;
        max_vertex = std::max<std::size_t>(max_vertex, face.back());
      }
    }
    std::sort(rank.begin(), rank.end());
  }
  out.vertex_count_ = any_vertex ? max_vertex + 1 : 0;
  out.ranks_ = std::move(ranks);
  out.rebuild_incidence();
  return out;
}

FaceLattice FaceLattice::from_proper_faces(int dimension,
                                           std::vector<std::vector<VertexSet>> proper) {
  if (dimension < 0) throw LatticeError("lattice dimension must be >= 0");
  if (proper.size() != static_cast<std::size_t>(dimension)) {
    throw LatticeError("expected " + std::to_string(dimension) + " proper ranks, got " +
                       std::to_string(proper.size()));
  }
  std::size_t vertex_count = dimension == 0 ? 1 : proper[0].size();
  VertexSet all(vertex_count);
  std::iota(all.begin(), all.end(), VertexIndex{0});

  std::vector<std::vector<VertexSet>> ranks;
  ranks.reserve(proper.size() + 2);
  ranks.push_back({VertexSet{}});
  for (auto& r : proper) ranks.push_back(std::move(r));
  ranks.push_back({std::move(all)});
  return from_all_ranks(dimension, std::move(ranks));
}

const std::vector<VertexSet>& FaceLattice::faces(int rank) const {
  if (rank < -1 || rank > dimension_) throw LatticeError("rank out of range");
  return ranks_[slot(rank)];
}

const std::vector<std::uint32_t>& FaceLattice::subfaces(int rank, std::size_t index) const {
  if (rank < 0 || rank > dimension_) throw LatticeError("no subfaces below rank -1");
  return sub_[slot(rank)][index];
}

const std::vector<std::uint32_t>& FaceLattice::superfaces(int rank, std::size_t index) const {
  if (rank < -1 || rank >= dimension_) throw LatticeError("no superfaces above the top rank");
  return super_[slot(rank)][index];
}

std::optional<std::size_t> FaceLattice::find(int rank, std::span<const VertexIndex> vertices) const {
  const auto& rk = faces(rank);
  auto it = std::lower_bound(rk.begin(), rk.end(), vertices,
                             [](const VertexSet& f, std::span<const VertexIndex> v) {
                               return lex_less(f, v);
                             });
  if (it == rk.end() || !std::equal(it->begin(), it->end(), vertices.begin(), vertices.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - rk.begin());
}

void FaceLattice::rebuild_incidence() {
  const std::size_t rank_slots = ranks_.size();
  sub_.assign(rank_slots, {});
  super_.assign(rank_slots, {});
  for (std::size_t s = 0; s < rank_slots; ++s) {
    sub_[s].assign(ranks_[s].size(), {});
    super_[s].assign(ranks_[s].size(), {});
  }
  for (std::size_t lower = 0; lower + 1 < rank_slots; ++lower) {
    const auto& lo = ranks_[lower];
    const auto& hi = ranks_[lower + 1];
    VertexIndexOfRank index(lo, vertex_count_);
    std::vector<std::uint32_t> stamp(lo.size(), 0);
    for (std::uint32_t g = 0; g < hi.size(); ++g) {
      auto subs = index.contained_in(hi[g], lo, stamp, g + 1);
      for (std::uint32_t h : subs) super_[lower][h].push_back(g);
      sub_[lower + 1][g] = std::move(subs);
    }
  }
}

// ---------------------------------------------------------------------------

FVector FVector::reversed() const {
  FVector r{counts};
  std::reverse(r.counts.begin(), r.counts.end());
  return r;
}

std::string FVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? " " : "") << counts[i];
  return os.str();
}

FVector f_vector(const FaceLattice& lattice) {
  FVector f;
  for (int k = 0; k < lattice.dimension(); ++k) f.counts.push_back(lattice.count(k));
  return f;
}

std::int64_t euler_characteristic(const FVector& f) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < f.counts.size(); ++k) {
    const auto c = static_cast<std::int64_t>(f.counts[k]);
    sum += (k % 2 == 0) ? c : -c;
  }
  return sum;
}

std::int64_t euler_characteristic_full(const FaceLattice& lattice) {
  std::int64_t sum = 0;
  for (int k = -1; k <= lattice.dimension(); ++k) {
    const auto c = static_cast<std::int64_t>(lattice.count(k));
    sum += (k % 2 == 0) ? c : -c;
  }
  return sum;
}

FaceLattice dual(const FaceLattice& lattice) {
  const int n = lattice.dimension();
  // cofacets[r + 1][i]: indices of the facets containing face i of rank r.
  std::vector<std::vector<VertexSet>> cofacets(slot(n) + 1);
  cofacets[slot(n)].assign(lattice.count(n), VertexSet{});
  const std::size_t facet_count = lattice.count(n - 1);
  cofacets[slot(n - 1)].resize(facet_count);
  for (std::size_t j = 0; j < facet_count; ++j) {
    cofacets[slot(n - 1)][j] = {static_cast<VertexIndex>(j)};
  }
  for (int r = n - 2; r >= -1; --r) {
    auto& level = cofacets[slot(r)];
    level.resize(lattice.count(r));
    for (std::size_t i = 0; i < level.size(); ++i) {
      VertexSet acc;
      for (std::uint32_t up : lattice.superfaces(r, i)) {
        const auto& add = cofacets[slot(r + 1)][up];
        acc.insert(acc.end(), add.begin(), add.end());
      }
      std::sort(acc.begin(), acc.end());
      acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
      level[i] = std::move(acc);
    }
  }
  std::vector<std::vector<VertexSet>> ranks(slot(n) + 1);
  for (int k = -1; k <= n; ++k) ranks[slot(k)] = std::move(cofacets[slot(n - 1 - k)]);
  return FaceLattice::from_all_ranks(n, std::move(ranks));
}

std::uint64_t count_flags(const FaceLattice& lattice) {
  const int n = lattice.dimension();
  if (n == 0) return 1;
  std::vector<std::uint64_t> above(lattice.count(n - 1), 1);
  for (int r = n - 2; r >= 0; --r) {
    std::vector<std::uint64_t> here(lattice.count(r), 0);
    for (std::size_t i = 0; i < here.size(); ++i) {
      for (std::uint32_t up : lattice.superfaces(r, i)) here[i] += above[up];
    }
    above = std::move(here);
  }
  return std::accumulate(above.begin(), above.end(), std::uint64_t{0});
}

SchlafliSymbol schlafli_from_lattice(const FaceLattice& lattice) {
  const int n = lattice.dimension();
  if (n < 1) throw LatticeError("Schlafli symbol needs dimension >= 1");
  if (n == 1) return SchlafliSymbol{};

  static const VertexSet kEmpty;
  std::vector<int> reference;
  std::vector<int> entries(static_cast<std::size_t>(n - 1));
  bool first = true;
  for_each_flag(lattice, [&](std::span<const std::uint32_t> flag) {
    for (int i = 1; i <= n - 1; ++i) {
      const VertexSet& lower = (i == 1) ? kEmpty : lattice.face(i - 2, flag[i - 2]);
      const std::size_t upper = (i + 1 == n) ? 0 : flag[i + 1];
      int between = 0;
      for (std::uint32_t h : lattice.subfaces(i + 1, upper)) {
        if (contains(lattice.face(i, h), lower)) ++between;
      }
      entries[static_cast<std::size_t>(i - 1)] = between;
    }
    if (first) {
      reference = entries;
      first = false;
    } else if (entries != reference) {
      throw NotRegular("local face counts differ between flags");
    }
  });
  for (int p : reference) {
    if (p < 3) throw NotRegular("local face count " + std::to_string(p) + " < 3");
  }
  return SchlafliSymbol(reference);
}

bool is_isomorphic(const FaceLattice& a, const FaceLattice& b) {
  if (a.dimension() != b.dimension()) return false;
  require_valid(a, "is_isomorphic (first argument)");
  require_valid(b, "is_isomorphic (second argument)");
  if (f_vector(a) != f_vector(b)) return false;
  if (a.dimension() == 0) return true;

  const FlagGraph fa(a);
  const FlagGraph fb(b);
  if (fa.size() != fb.size()) return false;
  const FlagTransport transport(a, fa, b, fb);
  for (std::size_t t = 0; t < fb.size(); ++t) {
    if (transport.induced_map(t)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

ValidationReport validate(const FaceLattice& lattice) {
  ValidationReport report;
  constexpr std::size_t kMaxMessages = 64;
  auto fail = [&](const std::string& msg) {
    if (report.violations.size() < kMaxMessages) report.violations.push_back(msg);
  };
  const int n = lattice.dimension();
  const std::size_t vcount = lattice.count(0);

  // improper faces
  if (lattice.count(-1) != 1 || !lattice.face(-1, 0).empty()) {
    fail("gradedness: rank -1 must hold exactly the empty face");
  }
  if (lattice.count(n) != 1) {
    fail("gradedness: rank " + std::to_string(n) + " must hold exactly one (top) face, found " +
         std::to_string(lattice.count(n)));
  } else if (lattice.face(n, 0).size() != vcount ||
             (vcount > 0 && lattice.face(n, 0).back() != vcount - 1)) {
    if (n > 0) fail("gradedness: top face must contain every vertex");
  }

  // vertices
  for (std::size_t i = 0; i < vcount; ++i) {
    const auto& f = lattice.face(0, i);
    if (f.size() != 1 || f[0] != i) {
      fail("vertices: rank-0 faces must be the singletons {0}..{V-1}");
      break;
    }
  }
  if (lattice.vertex_count() != vcount && n > 0) {
    fail("vertices: faces mention vertex indices outside 0..V-1");
  }

  for (int k = -1; k <= n; ++k) {
    const auto& rk = lattice.faces(k);
    for (std::size_t i = 1; i < rk.size(); ++i) {
      if (rk[i] == rk[i - 1]) fail("duplicate face at rank " + std::to_string(k));
    }
  }

  // covering relations between consecutive ranks
  for (int k = -1; k <= n; ++k) {
    for (std::size_t i = 0; i < lattice.count(k); ++i) {
      const auto& f = lattice.face(k, i);
      if (k >= 0) {
        const auto& subs = lattice.subfaces(k, i);
        if (subs.empty()) {
          fail("gradedness: rank-" + std::to_string(k) + " face has no subface at rank " +
               std::to_string(k - 1));
        }
        VertexSet united;
        for (std::uint32_t s : subs) {
          const auto& sf = lattice.face(k - 1, s);
          if (sf.size() >= f.size()) {
            fail("inclusion: rank-" + std::to_string(k) + " face equals a subface");
          }
          united.insert(united.end(), sf.begin(), sf.end());
        }
        std::sort(united.begin(), united.end());
        united.erase(std::unique(united.begin(), united.end()), united.end());
        if (k >= 1 && united != f) {
          fail("inclusion: rank-" + std::to_string(k) +
               " face is not the union of its subfaces");
        }
      }
      if (k < n && lattice.superfaces(k, i).empty()) {
        fail("gradedness: rank-" + std::to_string(k) + " face has no superface at rank " +
             std::to_string(k + 1));
      }
    }
  }

  // diamond: every (k-1) <= (k+1) interval holds exactly two k-faces
  for (int k = 0; k < n; ++k) {
    const auto& lower = lattice.faces(k - 1);
    VertexIndexOfRank index(lower, lattice.vertex_count());
    std::vector<std::uint32_t> stamp(lower.size(), 0);
    std::vector<int> between(lower.size(), 0);
    for (std::uint32_t g = 0; g < lattice.count(k + 1); ++g) {
      const auto below = index.contained_in(lattice.face(k + 1, g), lower, stamp, g + 1);
      for (std::uint32_t f : below) between[f] = 0;
      for (std::uint32_t h : lattice.subfaces(k + 1, g)) {
        for (std::uint32_t f : lattice.subfaces(k, h)) ++between[f];
      }
      for (std::uint32_t f : below) {
        if (between[f] != 2) {
          fail("diamond: interval between rank-" + std::to_string(k - 1) + " face and rank-" +
               std::to_string(k + 1) + " face holds " + std::to_string(between[f]) +
               " faces of rank " + std::to_string(k));
        }
      }
    }
  }
  return report;
}

void require_valid(const FaceLattice& lattice, const std::string& what) {
  const auto report = validate(lattice);
  if (report.ok()) return;
  std::string msg = what + ": invalid face lattice";
  for (const auto& v : report.violations) msg += "\n  " + v;
  throw LatticeError(msg);
}

// ---------------------------------------------------------------------------

void for_each_flag(const FaceLattice& lattice,
                   const std::function<void(std::span<const std::uint32_t>)>& visit) {
  const int n = lattice.dimension();
  std::vector<std::uint32_t> flag(static_cast<std::size_t>(n));
  if (n == 0) {
    visit(flag);
    return;
  }
  std::function<void(int)> descend = [&](int rank) {
    if (rank == n - 1) {
      visit(flag);
      return;
    }
    for (std::uint32_t up : lattice.superfaces(rank, flag[static_cast<std::size_t>(rank)])) {
      flag[static_cast<std::size_t>(rank + 1)] = up;
      descend(rank + 1);
    }
  };
  for (std::uint32_t v = 0; v < lattice.count(0); ++v) {
    flag[0] = v;
    descend(0);
  }
}

FlagGraph::FlagGraph(const FaceLattice& lattice) : n_(lattice.dimension()) {
  for_each_flag(lattice, [&](std::span<const std::uint32_t> f) {
    faces_.insert(faces_.end(), f.begin(), f.end());
    ++size_;
  });
  const auto n = static_cast<std::size_t>(n_);
  adjacent_.assign(size_ * n, 0);
  std::vector<std::uint32_t> scratch(n);
  std::vector<std::uint32_t> candidates;
  for (std::size_t idx = 0; idx < size_; ++idx) {
    const auto f = flag(idx);
    for (int i = 0; i < n_; ++i) {
      candidates.clear();
      const bool below_is_empty = (i == 0);
      const bool above_is_top = (i == n_ - 1);
      if (above_is_top && below_is_empty) {
        for (std::uint32_t v = 0; v < lattice.count(0); ++v) candidates.push_back(v);
      } else if (above_is_top) {
        candidates = lattice.superfaces(i - 1, f[static_cast<std::size_t>(i - 1)]);
      } else if (below_is_empty) {
        candidates = lattice.subfaces(1, f[1]);
      } else {
        const auto& up = lattice.superfaces(i - 1, f[static_cast<std::size_t>(i - 1)]);
        const auto& down = lattice.subfaces(i + 1, f[static_cast<std::size_t>(i + 1)]);
        std::set_intersection(up.begin(), up.end(), down.begin(), down.end(),
                              std::back_inserter(candidates));
      }
      if (candidates.size() != 2) {
        throw LatticeError("flag graph: rank-" + std::to_string(i) + " interval is not a diamond");
      }
      std::copy(f.begin(), f.end(), scratch.begin());
      const auto cur = f[static_cast<std::size_t>(i)];
      scratch[static_cast<std::size_t>(i)] = candidates[0] == cur ? candidates[1] : candidates[0];
      const auto other = index_of(scratch);
      if (!other) throw LatticeError("flag graph: adjacent chain is not a flag");
      adjacent_[idx * n + static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(*other);
    }
  }
}

std::optional<std::size_t> FlagGraph::index_of(std::span<const std::uint32_t> target) const {
  std::size_t lo = 0;
  std::size_t hi = size_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto f = flag(mid);
    if (std::lexicographical_compare(f.begin(), f.end(), target.begin(), target.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size_) {
    const auto f = flag(lo);
    if (std::equal(f.begin(), f.end(), target.begin(), target.end())) return lo;
  }
  return std::nullopt;
}

FlagTransport::FlagTransport(const FaceLattice& source, const FlagGraph& source_flags,
                             const FaceLattice& target, const FlagGraph& target_flags)
    : source_(&source),
      source_flags_(&source_flags),
      target_(&target),
      target_flags_(&target_flags) {
  const int n = source_flags.rank_count();
  const std::size_t vcount = source.count(0);
  if (n == 0) return;

  std::mt19937_64 rng(0x5eed'f1a9'0b5e'55edULL);
  vertex_key_.resize(target.count(0));
  for (auto& k : vertex_key_) k = rng();
  if (target.dimension() == n) {
    for (std::uint32_t i = 0; i < target.count(n - 1); ++i) {
      std::uint64_t key = 0;
      for (VertexIndex v : target.face(n - 1, i)) key += vertex_key_[v];
      facet_keys_.emplace_back(key, i);
    }
    std::sort(facet_keys_.begin(), facet_keys_.end());
  }
  vertex_rep_.assign(vcount, UINT32_MAX);
  std::vector<std::uint32_t> position(source_flags.size(), UINT32_MAX);
  std::size_t covered = 0;
  std::deque<std::uint32_t> queue{0};
  position[0] = 0;
  order_.push_back(0);
  parent_.push_back(0);
  color_.push_back(0);
  std::size_t last_needed = 0;
  while (!queue.empty() && covered < vcount) {
    const std::uint32_t f = queue.front();
    queue.pop_front();
    const std::uint32_t v = source_flags.flag(f)[0];
    if (vertex_rep_[v] == UINT32_MAX) {
      vertex_rep_[v] = position[f];
      last_needed = std::max<std::size_t>(last_needed, position[f]);
      ++covered;
    }
    for (int c = 0; c < n; ++c) {
      const std::uint32_t g = source_flags.neighbor(f, c);
      if (position[g] != UINT32_MAX) continue;
      position[g] = static_cast<std::uint32_t>(order_.size());
      order_.push_back(g);
      parent_.push_back(position[f]);
      color_.push_back(static_cast<std::uint8_t>(c));
      queue.push_back(g);
    }
  }
  if (covered < vcount) throw LatticeError("flag graph is disconnected");

  // Keep only the BFS-tree ancestors of the vertex representatives.
  std::vector<char> needed(last_needed + 1, 0);
  for (std::uint32_t rep : vertex_rep_) {
    for (std::uint32_t p = rep; !needed[p]; p = parent_[p]) {
      needed[p] = 1;
      if (p == 0) break;
    }
  }
  std::vector<std::uint32_t> renumber(last_needed + 1, UINT32_MAX);
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> color;
  for (std::size_t p = 0; p <= last_needed; ++p) {
    if (!needed[p]) continue;
    renumber[p] = static_cast<std::uint32_t>(order.size());
    order.push_back(order_[p]);
    parent.push_back(p == 0 ? 0 : renumber[parent_[p]]);
    color.push_back(color_[p]);
  }
  for (auto& rep : vertex_rep_) rep = renumber[rep];
  order_ = std::move(order);
  parent_ = std::move(parent);
  color_ = std::move(color);
}

std::optional<std::vector<VertexIndex>> FlagTransport::induced_map(std::size_t target_flag) const {
  const FaceLattice& source = *source_;
  const FaceLattice& target = *target_;
  const FlagGraph& target_flags = *target_flags_;
  const int n = source.dimension();
  if (target.dimension() != n || target.count(0) != source.count(0)) return std::nullopt;
  if (n == 0) return std::vector<VertexIndex>{0};
  if (target.count(n - 1) != source.count(n - 1)) return std::nullopt;

  std::vector<std::uint32_t> image(order_.size());
  image[0] = static_cast<std::uint32_t>(target_flag);
  for (std::size_t p = 1; p < order_.size(); ++p) {
    image[p] = target_flags.neighbor(image[parent_[p]], color_[p]);
  }

  const std::size_t vcount = source.count(0);
  std::vector<VertexIndex> map(vcount);
  std::vector<char> hit(vcount, 0);
  for (std::size_t v = 0; v < vcount; ++v) {
    const std::uint32_t tv = target_flags.flag(image[vertex_rep_[v]])[0];
    const VertexIndex w = target.face(0, tv)[0];
    if (hit[w]) return std::nullopt;
    hit[w] = 1;
    map[v] = w;
  }

  VertexSet mapped;
  const auto base = source_flags_->flag(0);
  const auto goal = target_flags.flag(target_flag);
  for (int k = 1; k < n; ++k) {
    mapped.clear();
    for (VertexIndex v : source.face(k, base[static_cast<std::size_t>(k)])) mapped.push_back(map[v]);
    std::sort(mapped.begin(), mapped.end());
    const auto found = target.find(k, mapped);
    if (!found || *found != goal[static_cast<std::size_t>(k)]) return std::nullopt;
  }

  // Each source facet must land on a target facet: find the candidate by key,
  // then confirm membership exactly.
  for (const auto& facet : source.faces(n - 1)) {
    std::uint64_t key = 0;
    for (VertexIndex v : facet) key += vertex_key_[map[v]];
    auto it = std::lower_bound(facet_keys_.begin(), facet_keys_.end(),
                               std::pair<std::uint64_t, std::uint32_t>{key, 0});
    bool matched = false;
    for (; !matched && it != facet_keys_.end() && it->first == key; ++it) {
      const VertexSet& candidate = target.face(n - 1, it->second);
      matched = candidate.size() == facet.size() &&
                std::all_of(facet.begin(), facet.end(), [&](VertexIndex v) {
                  return std::binary_search(candidate.begin(), candidate.end(), map[v]);
                });
    }
    if (!matched) return std::nullopt;
  }
  return map;
}

}  // namespace polyforge
