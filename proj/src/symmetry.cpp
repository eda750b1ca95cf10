#include "polyforge/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <thread>

#include "polyforge/flags.hpp"

namespace polyforge {

namespace {

void check_cap(const FaceLattice& lattice, int cap) {
  if (lattice.dimension() > cap) {
    throw CapExceeded("automorphism search is capped at dimension " + std::to_string(cap) +
                      ", got " + std::to_string(lattice.dimension()));
  }
}

}  // namespace

std::vector<VertexPermutation> automorphisms(const FaceLattice& lattice, int dimension_cap) {
  check_cap(lattice, dimension_cap);
  require_valid(lattice, "automorphisms");
  if (lattice.dimension() == 0) return {VertexPermutation{{0}}};
  const FlagGraph flags(lattice);
  const FlagTransport transport(lattice, flags, lattice, flags);
  std::vector<VertexPermutation> out;
  for (std::size_t t = 0; t < flags.size(); ++t) {
    if (auto map = transport.induced_map(t)) out.push_back({std::move(*map)});
  }
  return out;
}

std::uint64_t automorphism_order(const FaceLattice& lattice, int dimension_cap) {
  check_cap(lattice, dimension_cap);
  require_valid(lattice, "automorphism_order");
  if (lattice.dimension() == 0) return 1;
  const FlagGraph flags(lattice);
  const FlagTransport transport(lattice, flags, lattice, flags);

  const std::size_t total = flags.size();
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16));
  if (workers == 1 || total < 4096) {
    std::uint64_t count = 0;
    for (std::size_t t = 0; t < total; ++t) count += transport.induced_map(t) ? 1 : 0;
    return count;
  }
  std::atomic<std::uint64_t> count{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::uint64_t local = 0;
      for (std::size_t t = w; t < total; t += workers) {
        local += transport.induced_map(t) ? 1 : 0;
      }
      count += local;
    });
  }
  pool.clear();
  return count.load();
}

std::uint64_t rotation_order(const FaceLattice& lattice, int dimension_cap) {
  if (lattice.dimension() < 2) throw LatticeError("rotation order needs dimension >= 2");
  const std::uint64_t full = automorphism_order(lattice, dimension_cap);
  if (full % 2 != 0) throw LatticeError("odd automorphism order " + std::to_string(full));
  return full / 2;
}

bool verify_edge_rule(const FaceLattice& lattice) {
  if (lattice.dimension() != 3) throw LatticeError("edge rule applies to dimension 3 only");
  return rotation_order(lattice) == 2 * lattice.count(1);
}

// ---------------------------------------------------------------------------

bool QuaternionGroup::contains(const Quaternion& q) const {
  return std::binary_search(elements.begin(), elements.end(), q, numeric_less);
}

QuaternionGroup group_closure(std::span<const Quaternion> generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (qnorm(g) != QuadExt(1)) {
      throw std::invalid_argument("group generator " + g.to_string() + " is not a unit quaternion");
    }
  }
  std::set<Quaternion, QuaternionLess> seen{Quaternion::one()};
  std::deque<Quaternion> frontier{Quaternion::one()};
  while (!frontier.empty()) {
    const Quaternion cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Quaternion next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw CapExceeded("quaternion closure exceeded " + std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  QuaternionGroup group;
  group.elements.assign(seen.begin(), seen.end());
  std::sort(group.elements.begin(), group.elements.end(), numeric_less);
  group.generators.assign(generators.begin(), generators.end());
  return group;
}

namespace {

Quaternion half(QuadExt w, QuadExt x, QuadExt y, QuadExt z) {
  const QuadExt h(Rational(1, 2));
  return {h * w, h * x, h * y, h * z};
}

}  // namespace

QuaternionGroup binary_tetrahedral() {
  const Quaternion gens[] = {half(1, 1, 1, 1), Quaternion::i()};
  return group_closure(gens, 24);
}

QuaternionGroup binary_icosahedral() {
  const Quaternion gens[] = {half(1, 1, 1, 1),
                             half(QuadExt::phi(), QuadExt::phi_inverse(), 1, 0)};
  return group_closure(gens, 120);
}

}  // namespace polyforge
