// Constructions of every regular convex polytope: the recursive pyramid /
// prism / bipyramid families, exact coordinates for the icosahedral objects,
// and face reconstruction from coordinates.
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyforge/exactnum.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/schlafli.hpp"

namespace polyforge {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The assembled lattice failed validate(): the reconstruction method does
/// not apply to the given coordinates.
class ValidationFailed : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

inline constexpr int kDefaultDimensionCap = 8;

using Point = std::vector<QuadExt>;

/// Vertex coordinates in Q(sqrt5)^n.
struct Geometry {
  int dimension = 0;
  std::vector<Point> vertices;

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

QuadExt squared_distance(std::span<const QuadExt> a, std::span<const QuadExt> b);

/// Exact squared distance from the centroid shared by all vertices. Throws
/// ConstructionError if the vertices are not on a common sphere, or are not
/// distinct.
QuadExt squared_circumradius(const Geometry& g);

enum class Family {
  Segment,
  Polygon,
  Simplex,
  Hypercube,
  Cross,
  Icosahedron,
  Dodecahedron,
  Cell24,
  Cell600,
  Cell120,
};

struct PolytopeName {
  Family family = Family::Segment;
  int parameter = 0;  // p for polygons, n for the generic families

  /// "segment", "polygon(5)", "simplex(4)", "cell600", ...
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const PolytopeName&, const PolytopeName&) = default;
};

struct NamedPolytope {
  PolytopeName name;
  FaceLattice lattice;
  std::optional<Geometry> geometry;
  SchlafliSymbol symbol;
};

/// The 0-dimensional polytope: one vertex.
FaceLattice point_lattice();

/// Cone over L: adds one apex. f_k -> f_k + f_{k-1}.
FaceLattice pyramid(const FaceLattice& lattice);
/// L x segment. f_k -> 2 f_k + f_{k-1}.
FaceLattice prism(const FaceLattice& lattice);
/// Double cone over the proper faces of L. f_k -> f_k + 2 f_{k-1}.
FaceLattice bipyramid(const FaceLattice& lattice);

NamedPolytope segment();
NamedPolytope polygon(int p);
NamedPolytope simplex(int n, int dimension_cap = kDefaultDimensionCap);
NamedPolytope hypercube(int n, int dimension_cap = kDefaultDimensionCap);
NamedPolytope cross_polytope(int n, int dimension_cap = kDefaultDimensionCap);
NamedPolytope icosahedron();
NamedPolytope dodecahedron();
NamedPolytope cell24();
NamedPolytope cell600();
NamedPolytope cell120();

/// Dispatches on the name; parameter ignored for the fixed objects.
NamedPolytope build(const PolytopeName& name, int dimension_cap = kDefaultDimensionCap);

/// The polytope a spherical symbol names. Throws ConstructionError for
/// symbols that are not spherical.
NamedPolytope from_symbol(const SchlafliSymbol& symbol, int dimension_cap = kDefaultDimensionCap);

enum class FaceMethod {
  /// Rank-k faces are the (k+1)-cliques of the edge graph (simplicial polytopes).
  SimplicialCliques,
  /// 4-d only: triangles are 3-cliques, cells are induced octahedra (24-cell).
  OctahedralCells,
};

/// Edges are vertex pairs at minimal squared distance; higher faces per method.
/// Throws ValidationFailed if the result is not a valid lattice.
FaceLattice lattice_from_geometry(const Geometry& geometry, FaceMethod method);

/// Edges of the minimal-distance graph, as sorted pairs in lexicographic order.
std::vector<VertexSet> minimal_distance_edges(const Geometry& geometry);

/// All maximal cliques' sizes of the minimal-distance graph (sorted, unique).
std::vector<std::size_t> maximal_clique_sizes(const Geometry& geometry);

}  // namespace polyforge
