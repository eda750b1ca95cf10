#include "polyforge/verify.hpp"

#include <exception>

#include "polyforge/symmetry.hpp"

namespace polyforge {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

constexpr std::uint64_t kMaxFlagsForIsomorphism = 50000;

}  // namespace

std::optional<FVector> expected_f_vector(const PolytopeName& name) {
  const int n = name.parameter;
  FVector f;
  switch (name.family) {
    case Family::Segment: return FVector{{2}};
    case Family::Polygon:
      return FVector{{static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n)}};
    case Family::Simplex:
      for (int k = 0; k < n; ++k) f.counts.push_back(binomial(n + 1, k + 1));
      return f;
    case Family::Hypercube:
      for (int k = 0; k < n; ++k) f.counts.push_back((std::uint64_t{1} << (n - k)) * binomial(n, k));
      return f;
    case Family::Cross:
      for (int k = 0; k < n; ++k) f.counts.push_back((std::uint64_t{1} << (k + 1)) * binomial(n, k + 1));
      return f;
    case Family::Icosahedron: return FVector{{12, 30, 20}};
    case Family::Dodecahedron: return FVector{{20, 30, 12}};
    case Family::Cell24: return FVector{{24, 96, 96, 24}};
    case Family::Cell600: return FVector{{120, 720, 1200, 600}};
    case Family::Cell120: return FVector{{600, 1200, 720, 120}};
  }
  return std::nullopt;
}

std::vector<CheckResult> verify_polytope(const NamedPolytope& polytope) {
  std::vector<CheckResult> out;
  const FaceLattice& lattice = polytope.lattice;
  const int n = lattice.dimension();
  auto check = [&](std::string name, auto&& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  };

  const bool valid = validate(lattice).ok();
  check("lattice is valid (graded, diamond, inclusion)", [&](std::string& d) {
    const auto report = validate(lattice);
    if (!report.ok()) d = report.violations.front();
    return report.ok();
  });
  const FVector f = f_vector(lattice);
  check("f-vector", [&](std::string& d) {
    d = f.to_string();
    const auto want = expected_f_vector(polytope.name);
    if (want && *want != f) d += " (expected " + want->to_string() + ")";
    return !want || *want == f;
  });
  check("euler characteristic of the boundary", [&](std::string& d) {
    const auto chi = euler_characteristic(f);
    const std::int64_t want = (n - 1) % 2 == 0 ? 2 : 0;
    d = std::to_string(chi);
    return chi == want;
  });
  check("euler characteristic over all ranks is 0", [&](std::string& d) {
    const auto chi = euler_characteristic_full(lattice);
    d = std::to_string(chi);
    return chi == 0;
  });
  if (!valid) return out;

  if (n >= 1) {
    check("schlafli symbol read from every flag", [&](std::string& d) {
      const auto s = schlafli_from_lattice(lattice);
      d = s.to_string();
      return s == polytope.symbol;
    });
  }
  const FaceLattice dl = dual(lattice);
  check("dual reverses the f-vector", [&](std::string& d) {
    d = f_vector(dl).to_string();
    return f_vector(dl) == f.reversed();
  });
  if (n >= 2) {
    check("dual symbol", [&](std::string& d) {
      const auto s = schlafli_from_lattice(dl);
      d = s.to_string();
      return s == dual_symbol(polytope.symbol);
    });
  }
  const std::uint64_t flags = count_flags(lattice);
  if (flags <= kMaxFlagsForIsomorphism) {
    check("dual of dual is isomorphic", [&](std::string&) { return is_isomorphic(dual(dl), lattice); });
    if (polytope.symbol == dual_symbol(polytope.symbol)) {
      check("self-dual", [&](std::string&) { return is_isomorphic(dl, lattice); });
    }
  }
  if (n <= kDefaultAutomorphismCap) {
    check("flag count equals automorphism order", [&](std::string& d) {
      const auto aut = automorphism_order(lattice);
      d = "flags=" + std::to_string(flags) + " automorphisms=" + std::to_string(aut);
      return aut == flags;
    });
  }
  if (polytope.name.family == Family::Polygon) {
    check("dihedral group order 2p", [&](std::string& d) {
      const auto aut = automorphism_order(lattice);
      d = std::to_string(aut);
      return aut == 2 * static_cast<std::uint64_t>(polytope.name.parameter);
    });
  }
  if (n == 3) {
    check("rotation order is twice the edge count", [&](std::string& d) {
      d = std::to_string(rotation_order(lattice)) + " = 2*" + std::to_string(lattice.count(1));
      return verify_edge_rule(lattice);
    });
  }
  if (polytope.geometry) {
    const Geometry& g = *polytope.geometry;
    check("vertices share one circumradius", [&](std::string& d) {
      d = "r^2=" + squared_circumradius(g).to_string();
      return g.vertices.size() == lattice.count(0);
    });
    if (n >= 2) {
      check("minimal-distance edges match the lattice", [&](std::string&) {
        return minimal_distance_edges(g) == lattice.faces(1);
      });
    }
    if (polytope.name.family == Family::Cross && n >= 2) {
      check("clique reconstruction is isomorphic", [&](std::string&) {
        return is_isomorphic(lattice_from_geometry(g, FaceMethod::SimplicialCliques), lattice);
      });
    }
  }
  return out;
}

std::vector<PolytopeName> default_verification_set() {
  std::vector<PolytopeName> set{{Family::Segment, 1}};
  for (int p : {3, 4, 5, 6, 12}) set.push_back({Family::Polygon, p});
  for (int n = 2; n <= 5; ++n) set.push_back({Family::Simplex, n});
  for (int n = 2; n <= 5; ++n) set.push_back({Family::Hypercube, n});
  for (int n = 2; n <= 5; ++n) set.push_back({Family::Cross, n});
  for (Family family : {Family::Icosahedron, Family::Dodecahedron, Family::Cell24, Family::Cell600,
                        Family::Cell120}) {
    set.push_back({family, family == Family::Icosahedron || family == Family::Dodecahedron ? 3 : 4});
  }
  return set;
}

}  // namespace polyforge
