#include <doctest.h>

#include <bit>
#include <functional>
#include <set>

#include "oracles.hpp"
#include "polyforge/constructors.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/verify.hpp"

using namespace polyforge;

namespace {

std::vector<std::uint64_t> fvec(const NamedPolytope& p) { return f_vector(p.lattice).counts; }

FaceLattice apply(int op, const FaceLattice& l) {
  switch (op) {
    case 0: return pyramid(l);
    case 1: return prism(l);
    default: return bipyramid(l);
  }
}

std::vector<std::uint64_t> predicted(int op, const std::vector<std::uint64_t>& c) {
  switch (op) {
    case 0: return oracle::pyramid_counts(c);
    case 1: return oracle::prism_counts(c);
    default: return oracle::bipyramid_counts(c);
  }
}

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("operator examples") {
  const FaceLattice seg = segment().lattice;
  CHECK(f_vector(pyramid(point_lattice())).counts == std::vector<std::uint64_t>{2});
  CHECK(f_vector(pyramid(seg)).counts == std::vector<std::uint64_t>{3, 3});
  CHECK(f_vector(pyramid(pyramid(seg))).counts == std::vector<std::uint64_t>{4, 6, 4});
  CHECK(f_vector(prism(seg)).counts == std::vector<std::uint64_t>{4, 4});
  CHECK(f_vector(prism(prism(seg))).counts == std::vector<std::uint64_t>{8, 12, 6});
  CHECK(f_vector(prism(hypercube(3).lattice)).counts == std::vector<std::uint64_t>{16, 32, 24, 8});
  CHECK(is_isomorphic(bipyramid(seg), polygon(4).lattice));
  CHECK(f_vector(bipyramid(polygon(4).lattice)).counts == std::vector<std::uint64_t>{6, 12, 8});
  CHECK(f_vector(bipyramid(cross_polytope(4).lattice)).counts ==
        std::vector<std::uint64_t>{10, 40, 80, 80, 32});
}

TEST_CASE("recurrences hold for every operator sequence of length up to 5") {
  int checked = 0;
  std::function<void(const FaceLattice&, int)> grow = [&](const FaceLattice& l, int depth) {
    if (depth == 5) return;
    for (int op = 0; op < 3; ++op) {
      const FaceLattice next = apply(op, l);
      REQUIRE(oracle::full_counts(next) == predicted(op, oracle::full_counts(l)));
      REQUIRE(validate(next).ok());
      if (next.dimension() <= 3) {
        CHECK(oracle::diamond_holds(next));
        CHECK(oracle::graded(next));
      }
      ++checked;
      grow(next, depth + 1);
    }
  };
  grow(point_lattice(), 0);
  CHECK(checked == 3 + 9 + 27 + 81 + 243);
}

TEST_CASE("recurrences on the exceptional inputs") {
  for (const FaceLattice& l : {icosahedron().lattice, dodecahedron().lattice, polygon(7).lattice}) {
    for (int op = 0; op < 3; ++op) {
      const FaceLattice next = apply(op, l);
      CHECK(oracle::full_counts(next) == predicted(op, oracle::full_counts(l)));
      CHECK(validate(next).ok());
    }
  }
}

TEST_CASE("simplex faces are exactly the vertex subsets") {
  const FaceLattice l = simplex(5).lattice;
  CHECK(fvec(simplex(5)) == std::vector<std::uint64_t>{6, 15, 20, 15, 6});
  for (int k = 0; k < 5; ++k) {
    std::set<VertexSet> expected;
    for (unsigned mask = 1; mask < 64; ++mask) {
      if (std::popcount(mask) != k + 1) continue;
      VertexSet s;
      for (VertexIndex v = 0; v < 6; ++v)
        if (mask & (1U << v)) s.push_back(v);
      expected.insert(s);
    }
    const std::set<VertexSet> actual(l.faces(k).begin(), l.faces(k).end());
    CHECK(actual == expected);
  }
}

TEST_CASE("family face counts") {
  CHECK(fvec(simplex(4)) == std::vector<std::uint64_t>{5, 10, 10, 5});
  CHECK(fvec(simplex(3)) == std::vector<std::uint64_t>{4, 6, 4});
  CHECK(fvec(hypercube(4)) == std::vector<std::uint64_t>{16, 32, 24, 8});
  CHECK(fvec(cross_polytope(5)) == std::vector<std::uint64_t>{10, 40, 80, 80, 32});
  CHECK(fvec(cross_polytope(3)) == std::vector<std::uint64_t>{6, 12, 8});
  CHECK(fvec(polygon(5)) == std::vector<std::uint64_t>{5, 5});
  for (int n = 1; n <= 7; ++n) {
    CHECK(fvec(simplex(n)) == oracle::simplex_f(n));
    CHECK(fvec(hypercube(n)) == oracle::hypercube_f(n));
    CHECK(fvec(cross_polytope(n)) == oracle::cross_f(n));
  }
}

TEST_CASE("family dualities") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(is_isomorphic(dual(hypercube(n).lattice), cross_polytope(n).lattice));
    CHECK(is_isomorphic(dual(simplex(n).lattice), simplex(n).lattice));
  }
  for (int p = 3; p <= 10; ++p) CHECK(is_isomorphic(dual(polygon(p).lattice), polygon(p).lattice));
  CHECK(is_isomorphic(simplex(2).lattice, polygon(3).lattice));
  CHECK(is_isomorphic(hypercube(2).lattice, polygon(4).lattice));
  CHECK(is_isomorphic(dual(icosahedron().lattice), dodecahedron().lattice));
}

TEST_CASE("exceptional objects") {
  CHECK(fvec(icosahedron()) == std::vector<std::uint64_t>{12, 30, 20});
  CHECK(fvec(dodecahedron()) == std::vector<std::uint64_t>{20, 30, 12});
  const NamedPolytope c24 = cell24();
  CHECK(fvec(c24) == std::vector<std::uint64_t>{24, 96, 96, 24});
  CHECK(c24.geometry->vertices.size() == 8 + 16);
  CHECK(is_isomorphic(c24.lattice, dual(c24.lattice)));
  const NamedPolytope c600 = cell600();
  CHECK(fvec(c600) == std::vector<std::uint64_t>{120, 720, 1200, 600});
  CHECK(fvec(cell120()) == std::vector<std::uint64_t>{600, 1200, 720, 120});
  CHECK(schlafli_from_lattice(c600.lattice) == SchlafliSymbol{3, 3, 5});
  CHECK(schlafli_from_lattice(cell120().lattice) == SchlafliSymbol{5, 3, 3});
  CHECK(c600.symbol == SchlafliSymbol{3, 3, 5});
}

TEST_CASE("600-cell edges join unit quaternions with inner product phi/2") {
  const NamedPolytope c600 = cell600();
  const auto& v = c600.geometry->vertices;
  const QuadExt target = QuadExt(Rational(1, 2)) * QuadExt::phi();
  std::set<VertexSet> close;
  for (VertexIndex a = 0; a < v.size(); ++a) {
    for (VertexIndex b = a + 1; b < v.size(); ++b) {
      QuadExt dot(0);
      for (int k = 0; k < 4; ++k) dot += v[a][static_cast<std::size_t>(k)] * v[b][static_cast<std::size_t>(k)];
      if (dot == target) close.insert({a, b});
    }
  }
  CHECK(close.size() == 720);
  const std::set<VertexSet> edges(c600.lattice.faces(1).begin(), c600.lattice.faces(1).end());
  CHECK(close == edges);
  CHECK(maximal_clique_sizes(*c600.geometry) == std::vector<std::size_t>{4});
}

TEST_CASE("geometry: circumradius and edge recovery") {
  for (const NamedPolytope& p : {segment(), hypercube(3), hypercube(5), cross_polytope(4), icosahedron(),
                                 cell24(), cell600()}) {
    REQUIRE(p.geometry);
    const QuadExt r2 = squared_circumradius(*p.geometry);
    CHECK(r2 > QuadExt(0));
    if (p.lattice.dimension() >= 2) {
      const auto edges = minimal_distance_edges(*p.geometry);
      CHECK(std::set<VertexSet>(edges.begin(), edges.end()) ==
            std::set<VertexSet>(p.lattice.faces(1).begin(), p.lattice.faces(1).end()));
    }
  }
  CHECK(squared_circumradius(*cell24().geometry) == QuadExt(4));
  CHECK(squared_circumradius(*icosahedron().geometry) == QuadExt(1) + QuadExt::phi() * QuadExt::phi());
  Geometry off{2, {{QuadExt(1), QuadExt(0)}, {QuadExt(0), QuadExt(2)}, {QuadExt(-1), QuadExt(0)}}};
  CHECK_THROWS_AS(squared_circumradius(off), ConstructionError);
  Geometry dup{1, {{QuadExt(1)}, {QuadExt(1)}}};
  CHECK_THROWS_AS(squared_circumradius(dup), ConstructionError);
}

TEST_CASE("reconstruction from coordinates") {
  Geometry square{2, {{QuadExt(1), QuadExt(1)}, {QuadExt(-1), QuadExt(1)}, {QuadExt(-1), QuadExt(-1)},
                      {QuadExt(1), QuadExt(-1)}}};
  const FaceLattice sq = lattice_from_geometry(square, FaceMethod::SimplicialCliques);
  CHECK(f_vector(sq).counts == std::vector<std::uint64_t>{4, 4});
  CHECK(f_vector(lattice_from_geometry(*icosahedron().geometry, FaceMethod::SimplicialCliques)).counts ==
        std::vector<std::uint64_t>{12, 30, 20});
  CHECK(f_vector(lattice_from_geometry(*cell24().geometry, FaceMethod::OctahedralCells)).counts ==
        std::vector<std::uint64_t>{24, 96, 96, 24});
  for (int n = 2; n <= 5; ++n) {
    const NamedPolytope x = cross_polytope(n);
    CHECK(is_isomorphic(lattice_from_geometry(*x.geometry, FaceMethod::SimplicialCliques), x.lattice));
  }
  CHECK_THROWS_AS(lattice_from_geometry(*hypercube(3).geometry, FaceMethod::SimplicialCliques), ValidationFailed);
  CHECK_THROWS_AS(lattice_from_geometry(*icosahedron().geometry, FaceMethod::OctahedralCells), ValidationFailed);
}

TEST_CASE("caps, names and symbols") {
  CHECK_THROWS_AS(polygon(2), ConstructionError);
  CHECK_THROWS_AS(simplex(0), ConstructionError);
  CHECK_THROWS_AS(hypercube(9), ConstructionError);
  CHECK_THROWS_AS(cross_polytope(4, 3), ConstructionError);
  CHECK_NOTHROW(simplex(8));
  CHECK(PolytopeName{Family::Polygon, 5}.to_string() == "polygon(5)");
  CHECK(PolytopeName{Family::Cell600, 4}.to_string() == "cell600");
  CHECK(from_symbol({3, 4, 3}).name.family == Family::Cell24);
  CHECK(from_symbol({5, 3, 3}).name.family == Family::Cell120);
  CHECK(from_symbol({4, 3, 3, 3}).name == PolytopeName{Family::Hypercube, 5});
  CHECK(from_symbol({3, 3, 3, 4}).name == PolytopeName{Family::Cross, 5});
  CHECK(from_symbol({7}).name == PolytopeName{Family::Polygon, 7});
  CHECK(from_symbol(SchlafliSymbol{}).name.family == Family::Segment);
  CHECK_THROWS_AS(from_symbol({3, 6}), ConstructionError);
  CHECK_THROWS_AS(from_symbol({3, 5, 3}), ConstructionError);
  CHECK_THROWS_AS(from_symbol({3, 3, 3, 3, 3, 3, 3, 3}), ConstructionError);
  for (int d = 1; d <= 6; ++d) {
    for (const auto& s : spherical_catalog(d).symbols) {
      const NamedPolytope p = from_symbol(s);
      CHECK(p.symbol == s);
      CHECK(schlafli_from_lattice(p.lattice) == s);
    }
  }
}

TEST_CASE("verification suite passes on the default set") {
  for (const PolytopeName& name : default_verification_set()) {
    if (name.family == Family::Cell600 || name.family == Family::Cell120) continue;  // covered by acceptance
    const auto results = verify_polytope(build(name));
    CHECK(!results.empty());
    for (const auto& r : results) {
      INFO(name.to_string() << ": " << r.name << " " << r.detail);
      CHECK(r.passed);
    }
  }
}

}
