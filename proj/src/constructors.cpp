#include "polyforge/constructors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "polyforge/symmetry.hpp"

namespace polyforge {

namespace {

using Ranks = std::vector<std::vector<VertexSet>>;

std::size_t slot(int rank) { return static_cast<std::size_t>(rank + 1); }

VertexSet with(VertexSet face, std::initializer_list<VertexIndex> extra) {
  face.insert(face.end(), extra.begin(), extra.end());
  std::sort(face.begin(), face.end());
  return face;
}

VertexSet shifted(const VertexSet& face, VertexIndex offset) {
  VertexSet out;
  out.reserve(face.size());
  for (VertexIndex v : face) out.push_back(v + offset);
  return out;
}

VertexIndex top_size(const FaceLattice& lattice) {
  return static_cast<VertexIndex>(lattice.face(lattice.dimension(), 0).size());
}

void check_family_dimension(const char* family, int n, int cap) {
  if (n < 1) throw ConstructionError(std::string(family) + " dimension must be >= 1");
  if (n > cap) {
    throw ConstructionError(std::string(family) + " dimension " + std::to_string(n) +
                            " exceeds the cap " + std::to_string(cap));
  }
}

NamedPolytope make(Family family, int parameter, FaceLattice lattice, SchlafliSymbol symbol,
                   std::optional<Geometry> geometry = std::nullopt) {
  return {PolytopeName{family, parameter}, std::move(lattice), std::move(geometry),
          std::move(symbol)};
}

using Adjacency = std::vector<std::vector<char>>;

struct EdgeGraph {
  Adjacency adjacent;
  std::vector<std::vector<VertexIndex>> neighbors;
  QuadExt min_squared;
};

EdgeGraph edge_graph(const Geometry& g) {
  const std::size_t v = g.vertices.size();
  EdgeGraph out;
  out.adjacent.assign(v, std::vector<char>(v, 0));
  out.neighbors.assign(v, {});
  std::vector<std::vector<QuadExt>> dist(v, std::vector<QuadExt>(v));
  bool first = true;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      dist[a][b] = squared_distance(g.vertices[a], g.vertices[b]);
      if (first || dist[a][b] < out.min_squared) {
        out.min_squared = dist[a][b];
        first = false;
      }
    }
  }
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (dist[a][b] == out.min_squared) {
        out.adjacent[a][b] = out.adjacent[b][a] = 1;
        out.neighbors[a].push_back(static_cast<VertexIndex>(b));
        out.neighbors[b].push_back(static_cast<VertexIndex>(a));
      }
    }
  }
  for (auto& list : out.neighbors) std::sort(list.begin(), list.end());
  return out;
}

/// All cliques of exactly `size` vertices, each sorted, in lexicographic order.
std::vector<VertexSet> cliques(const EdgeGraph& graph, std::size_t size) {
  std::vector<VertexSet> out;
  VertexSet current;
  std::function<void(const std::vector<VertexIndex>&)> extend =
      [&](const std::vector<VertexIndex>& candidates) {
        if (current.size() == size) {
          out.push_back(current);
          return;
        }
        for (VertexIndex c : candidates) {
          std::vector<VertexIndex> next;
          for (VertexIndex d : candidates) {
            if (d > c && graph.adjacent[c][d]) next.push_back(d);
          }
          if (current.size() + 1 + next.size() < size) continue;
          current.push_back(c);
          extend(next);
          current.pop_back();
        }
      };
  std::vector<VertexIndex> all(graph.adjacent.size());
  std::iota(all.begin(), all.end(), VertexIndex{0});
  extend(all);
  return out;
}

std::vector<VertexSet> singletons(std::size_t count) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back({static_cast<VertexIndex>(i)});
  return out;
}

std::vector<VertexSet> octahedral_cells(const Geometry& g, const EdgeGraph& graph) {
  const QuadExt diagonal = QuadExt(2) * graph.min_squared;
  const std::size_t v = g.vertices.size();
  auto opposite = [&](VertexIndex a, VertexIndex b) {
    return squared_distance(g.vertices[a], g.vertices[b]) == diagonal;
  };
  std::set<VertexSet> cells;
  for (VertexIndex a = 0; a < v; ++a) {
    for (VertexIndex a2 = a + 1; a2 < v; ++a2) {
      if (!opposite(a, a2)) continue;
      std::vector<VertexIndex> common;
      std::set_intersection(graph.neighbors[a].begin(), graph.neighbors[a].end(),
                            graph.neighbors[a2].begin(), graph.neighbors[a2].end(),
                            std::back_inserter(common));
      std::vector<std::pair<VertexIndex, VertexIndex>> diagonals;
      for (std::size_t s = 0; s < common.size(); ++s) {
        for (std::size_t t = s + 1; t < common.size(); ++t) {
          if (opposite(common[s], common[t])) diagonals.emplace_back(common[s], common[t]);
        }
      }
      for (std::size_t s = 0; s < diagonals.size(); ++s) {
        for (std::size_t t = s + 1; t < diagonals.size(); ++t) {
          const auto [b, b2] = diagonals[s];
          const auto [c, c2] = diagonals[t];
          if (b == c || b == c2 || b2 == c || b2 == c2) continue;
          const auto& adj = graph.adjacent;
          if (adj[b][c] && adj[b][c2] && adj[b2][c] && adj[b2][c2]) {
            VertexSet cell{a, a2, b, b2, c, c2};
            std::sort(cell.begin(), cell.end());
            cells.insert(std::move(cell));
          }
        }
      }
    }
  }
  return {cells.begin(), cells.end()};
}

}  // namespace

QuadExt squared_distance(std::span<const QuadExt> a, std::span<const QuadExt> b) {
  if (a.size() != b.size()) throw ConstructionError("points of different dimension");
  QuadExt sum;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const QuadExt d = a[t] - b[t];
    sum += d * d;
  }
  return sum;
}

QuadExt squared_circumradius(const Geometry& g) {
  if (g.vertices.empty()) throw ConstructionError("geometry has no vertices");
  const auto dim = static_cast<std::size_t>(g.dimension);
  Point centroid(dim);
  std::set<Point, std::function<bool(const Point&, const Point&)>> distinct(
      [](const Point& p, const Point& q) {
        return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end(),
                                            StructuralLess{});
      });
  for (const auto& p : g.vertices) {
    if (p.size() != dim) throw ConstructionError("vertex of wrong dimension");
    if (!distinct.insert(p).second) throw ConstructionError("duplicate vertex");
    for (std::size_t t = 0; t < dim; ++t) centroid[t] += p[t];
  }
  const QuadExt scale = QuadExt(Rational(1, static_cast<long>(g.vertices.size())));
  for (auto& c : centroid) c *= scale;
  const QuadExt r2 = squared_distance(g.vertices.front(), centroid);
  for (const auto& p : g.vertices) {
    if (squared_distance(p, centroid) != r2) {
      throw ConstructionError("vertices do not lie on a common sphere");
    }
  }
  return r2;
}

std::string PolytopeName::to_string() const {
  switch (family) {
    case Family::Segment: return "segment";
    case Family::Polygon: return "polygon(" + std::to_string(parameter) + ")";
    case Family::Simplex: return "simplex(" + std::to_string(parameter) + ")";
    case Family::Hypercube: return "hypercube(" + std::to_string(parameter) + ")";
    case Family::Cross: return "cross(" + std::to_string(parameter) + ")";
    case Family::Icosahedron: return "icosahedron";
    case Family::Dodecahedron: return "dodecahedron";
    case Family::Cell24: return "cell24";
    case Family::Cell600: return "cell600";
    case Family::Cell120: return "cell120";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

FaceLattice point_lattice() { return FaceLattice::from_all_ranks(0, {{VertexSet{}}, {{0}}}); }

FaceLattice pyramid(const FaceLattice& lattice) {
  const int n = lattice.dimension();
  const VertexIndex apex = top_size(lattice);
  Ranks ranks(slot(n + 1) + 1);
  for (int k = -1; k <= n + 1; ++k) {
    auto& out = ranks[slot(k)];
    if (k <= n) out = lattice.faces(k);
    if (k >= 0) {
      for (const auto& f : lattice.faces(k - 1)) out.push_back(with(f, {apex}));
    }
  }
  return FaceLattice::from_all_ranks(n + 1, std::move(ranks));
}

FaceLattice prism(const FaceLattice& lattice) {
  const int n = lattice.dimension();
  const VertexIndex v = top_size(lattice);
  Ranks ranks(slot(n + 1) + 1);
  ranks[slot(-1)] = {VertexSet{}};
  for (int k = 0; k <= n + 1; ++k) {
    auto& out = ranks[slot(k)];
    if (k <= n) {
      for (const auto& f : lattice.faces(k)) {
        out.push_back(f);
        out.push_back(shifted(f, v));
      }
    }
    if (k >= 1) {
      for (const auto& f : lattice.faces(k - 1)) {
        VertexSet joined = f;
        const VertexSet top = shifted(f, v);
        joined.insert(joined.end(), top.begin(), top.end());
        out.push_back(std::move(joined));
      }
    }
  }
  return FaceLattice::from_all_ranks(n + 1, std::move(ranks));
}

FaceLattice bipyramid(const FaceLattice& lattice) {
  const int n = lattice.dimension();
  // A point has no proper vertices; its bipyramid is just the two apexes.
  const VertexIndex kept = n >= 1 ? top_size(lattice) : 0;
  const VertexIndex a = kept;
  const VertexIndex b = kept + 1;
  Ranks ranks(slot(n + 1) + 1);
  for (int k = -1; k <= n; ++k) {
    auto& out = ranks[slot(k)];
    if (k <= n - 1) out = lattice.faces(k);
    if (k >= 0) {
      for (const auto& f : lattice.faces(k - 1)) {
        out.push_back(with(f, {a}));
        out.push_back(with(f, {b}));
      }
    }
  }
  VertexSet all(kept + 2);
  std::iota(all.begin(), all.end(), VertexIndex{0});
  ranks[slot(n + 1)] = {std::move(all)};
  return FaceLattice::from_all_ranks(n + 1, std::move(ranks));
}

// ---------------------------------------------------------------------------

NamedPolytope segment() {
  Geometry g{1, {{QuadExt(-1)}, {QuadExt(1)}}};
  return make(Family::Segment, 1, pyramid(point_lattice()), SchlafliSymbol{}, std::move(g));
}

NamedPolytope polygon(int p) {
  if (p < 3) throw ConstructionError("polygon needs p >= 3, got " + std::to_string(p));
  std::vector<VertexSet> edges;
  for (int i = 0; i < p; ++i) {
    VertexSet e{static_cast<VertexIndex>(i), static_cast<VertexIndex>((i + 1) % p)};
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  auto lattice = FaceLattice::from_proper_faces(2, {singletons(static_cast<std::size_t>(p)), edges});
  return make(Family::Polygon, p, std::move(lattice), SchlafliSymbol{p});
}

NamedPolytope simplex(int n, int dimension_cap) {
  check_family_dimension("simplex", n, dimension_cap);
  FaceLattice lattice = point_lattice();
  for (int i = 0; i < n; ++i) lattice = pyramid(lattice);
  return make(Family::Simplex, n, std::move(lattice), simplex_symbol(n - 1));
}

NamedPolytope hypercube(int n, int dimension_cap) {
  check_family_dimension("hypercube", n, dimension_cap);
  FaceLattice lattice = point_lattice();
  for (int i = 0; i < n; ++i) lattice = prism(lattice);
  // prism puts the new copy at offset V, so bit k of a vertex index is its k-th coordinate
  Geometry g{n, {}};
  for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
    Point p;
    for (int k = 0; k < n; ++k) p.emplace_back(((idx >> k) & 1U) ? 1 : -1);
    g.vertices.push_back(std::move(p));
  }
  return make(Family::Hypercube, n, std::move(lattice), hypercube_symbol(n - 1), std::move(g));
}

NamedPolytope cross_polytope(int n, int dimension_cap) {
  check_family_dimension("cross-polytope", n, dimension_cap);
  FaceLattice lattice = point_lattice();
  for (int i = 0; i < n; ++i) lattice = bipyramid(lattice);
  // step m adds apexes 2m and 2m+1 at +2 e_m and -2 e_m
  Geometry g{n, {}};
  for (int m = 0; m < n; ++m) {
    for (int s : {2, -2}) {
      Point p(static_cast<std::size_t>(n));
      p[static_cast<std::size_t>(m)] = QuadExt(s);
      g.vertices.push_back(std::move(p));
    }
  }
  return make(Family::Cross, n, std::move(lattice), cross_symbol(n - 1), std::move(g));
}

NamedPolytope icosahedron() {
  const QuadExt phi = QuadExt::phi();
  Geometry g{3, {}};
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const QuadExt one(s1);
      const QuadExt gold = QuadExt(s2) * phi;
      g.vertices.push_back({QuadExt(0), one, gold});
      g.vertices.push_back({one, gold, QuadExt(0)});
      g.vertices.push_back({gold, QuadExt(0), one});
    }
  }
  auto lattice = lattice_from_geometry(g, FaceMethod::SimplicialCliques);
  return make(Family::Icosahedron, 3, std::move(lattice), SchlafliSymbol{3, 5}, std::move(g));
}

NamedPolytope dodecahedron() {
  return make(Family::Dodecahedron, 3, dual(icosahedron().lattice), SchlafliSymbol{5, 3});
}

NamedPolytope cell24() {
  Geometry g{4, {}};
  for (std::size_t idx = 0; idx < 16; ++idx) {
    Point p;
    for (int k = 0; k < 4; ++k) p.emplace_back(((idx >> k) & 1U) ? 1 : -1);
    g.vertices.push_back(std::move(p));
  }
  for (int m = 0; m < 4; ++m) {
    for (int s : {2, -2}) {
      Point p(4);
      p[static_cast<std::size_t>(m)] = QuadExt(s);
      g.vertices.push_back(std::move(p));
    }
  }
  auto lattice = lattice_from_geometry(g, FaceMethod::OctahedralCells);
  return make(Family::Cell24, 4, std::move(lattice), SchlafliSymbol{3, 4, 3}, std::move(g));
}

NamedPolytope cell600() {
  Geometry g{4, {}};
  for (const auto& q : binary_icosahedral().elements) {
    const auto c = q.components();
    g.vertices.emplace_back(c.begin(), c.end());
  }
  auto lattice = lattice_from_geometry(g, FaceMethod::SimplicialCliques);
  return make(Family::Cell600, 4, std::move(lattice), SchlafliSymbol{3, 3, 5}, std::move(g));
}

NamedPolytope cell120() {
  return make(Family::Cell120, 4, dual(cell600().lattice), SchlafliSymbol{5, 3, 3});
}

NamedPolytope build(const PolytopeName& name, int dimension_cap) {
  switch (name.family) {
    case Family::Segment: return segment();
    case Family::Polygon: return polygon(name.parameter);
    case Family::Simplex: return simplex(name.parameter, dimension_cap);
    case Family::Hypercube: return hypercube(name.parameter, dimension_cap);
    case Family::Cross: return cross_polytope(name.parameter, dimension_cap);
    case Family::Icosahedron: return icosahedron();
    case Family::Dodecahedron: return dodecahedron();
    case Family::Cell24: return cell24();
    case Family::Cell600: return cell600();
    case Family::Cell120: return cell120();
  }
  throw ConstructionError("unknown polytope family");
}

NamedPolytope from_symbol(const SchlafliSymbol& symbol, int dimension_cap) {
  if (classify(symbol) != SymbolClass::SphericalPolytope) {
    throw ConstructionError(symbol.to_string() + " does not name a convex regular polytope");
  }
  const int length = static_cast<int>(symbol.length());
  const int n = symbol.dimension();
  if (length == 0) return segment();
  if (length == 1) {
    const int p = symbol.entries()[0];
    return p == 3 ? simplex(2, dimension_cap) : (p == 4 ? hypercube(2, dimension_cap) : polygon(p));
  }
  if (symbol == simplex_symbol(length)) return simplex(n, dimension_cap);
  if (symbol == hypercube_symbol(length)) return hypercube(n, dimension_cap);
  if (symbol == cross_symbol(length)) return cross_polytope(n, dimension_cap);
  const std::map<SchlafliSymbol, NamedPolytope (*)()> exceptional = {
      {SchlafliSymbol{3, 5}, &icosahedron},  {SchlafliSymbol{5, 3}, &dodecahedron},
      {SchlafliSymbol{3, 4, 3}, &cell24},    {SchlafliSymbol{3, 3, 5}, &cell600},
      {SchlafliSymbol{5, 3, 3}, &cell120},
  };
  if (auto it = exceptional.find(symbol); it != exceptional.end()) return it->second();
  throw ConstructionError("no constructor for " + symbol.to_string());
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> minimal_distance_edges(const Geometry& geometry) {
  if (geometry.vertices.size() < 2) return {};
  return cliques(edge_graph(geometry), 2);
}

std::vector<std::size_t> maximal_clique_sizes(const Geometry& geometry) {
  const EdgeGraph graph = edge_graph(geometry);
  std::set<std::size_t> sizes;
  // Bron-Kerbosch without pivoting; graphs here have at most a few hundred vertices.
  std::function<void(std::vector<VertexIndex>&, std::vector<VertexIndex>, std::vector<VertexIndex>)>
      expand = [&](std::vector<VertexIndex>& r, std::vector<VertexIndex> p,
                   std::vector<VertexIndex> x) {
        if (p.empty() && x.empty()) {
          sizes.insert(r.size());
          return;
        }
        while (!p.empty()) {
          const VertexIndex v = p.back();
          std::vector<VertexIndex> np;
          std::vector<VertexIndex> nx;
          for (VertexIndex u : p) {
            if (graph.adjacent[v][u]) np.push_back(u);
          }
          for (VertexIndex u : x) {
            if (graph.adjacent[v][u]) nx.push_back(u);
          }
          r.push_back(v);
          expand(r, std::move(np), std::move(nx));
          r.pop_back();
          p.pop_back();
          x.push_back(v);
        }
      };
  std::vector<VertexIndex> r;
  std::vector<VertexIndex> all(geometry.vertices.size());
  std::iota(all.begin(), all.end(), VertexIndex{0});
  expand(r, all, {});
  return {sizes.begin(), sizes.end()};
}

FaceLattice lattice_from_geometry(const Geometry& geometry, FaceMethod method) {
  squared_circumradius(geometry);
  const int n = geometry.dimension;
  if (n < 1) throw ConstructionError("geometry dimension must be >= 1");
  const EdgeGraph graph = edge_graph(geometry);
  Ranks proper(static_cast<std::size_t>(n));
  proper[0] = singletons(geometry.vertices.size());
  switch (method) {
    case FaceMethod::SimplicialCliques:
      for (int k = 1; k < n; ++k) {
        proper[static_cast<std::size_t>(k)] = cliques(graph, static_cast<std::size_t>(k + 1));
      }
      break;
    case FaceMethod::OctahedralCells:
      if (n != 4) throw ValidationFailed("octahedral cell reconstruction needs 4-d geometry");
      proper[1] = cliques(graph, 2);
      proper[2] = cliques(graph, 3);
      proper[3] = octahedral_cells(geometry, graph);
      break;
  }
  auto lattice = FaceLattice::from_proper_faces(n, std::move(proper));
  const auto report = validate(lattice);
  if (!report.ok()) {
    std::string msg = "reconstructed lattice is invalid";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw ValidationFailed(msg);
  }
  return lattice;
}

}  // namespace polyforge
