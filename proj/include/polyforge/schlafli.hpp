// Schlafli symbols and their spherical / Euclidean / hyperbolic classification.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyforge {

class SymbolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {p, q, r, ...}; every entry >= 3. The empty symbol names the segment.
class SchlafliSymbol {
 public:
  SchlafliSymbol() = default;
  explicit SchlafliSymbol(std::vector<int> entries);
  SchlafliSymbol(std::initializer_list<int> entries)
      : SchlafliSymbol(std::vector<int>(entries)) {}

  /// Parses "{3,4,3}". Whitespace around entries is tolerated; "{}" is the segment.
  static SchlafliSymbol parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
  [[nodiscard]] std::size_t length() const { return entries_.size(); }
  [[nodiscard]] int dimension() const { return static_cast<int>(entries_.size()) + 1; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SchlafliSymbol&, const SchlafliSymbol&) = default;
  friend auto operator<=>(const SchlafliSymbol&, const SchlafliSymbol&) = default;

 private:
  std::vector<int> entries_;
};

enum class SymbolClass { SphericalPolytope, EuclideanHoneycomb, Hyperbolic, NotRecognized };

/// "spherical", "euclidean", "hyperbolic", "not-recognized"
std::string_view to_string(SymbolClass c);

SymbolClass classify(const SchlafliSymbol& s);

/// Reverses the entries.
SchlafliSymbol dual_symbol(const SchlafliSymbol& s);

struct SphericalCatalog {
  int dimension = 0;
  /// True in dimension 2, where {p} exists for every p >= 3; `symbols` then
  /// lists only {3} .. {polygon_bound}.
  bool infinite_polygon_family = false;
  std::vector<SchlafliSymbol> symbols;
};

inline constexpr int kDefaultPolygonBound = 8;

/// All regular convex polytopes of the given dimension (>= 1).
SphericalCatalog spherical_catalog(int dimension, int polygon_bound = kDefaultPolygonBound);

/// {3,...,3}, {4,3,...,3}, {3,...,3,4} with `length` entries.
SchlafliSymbol simplex_symbol(int length);
SchlafliSymbol hypercube_symbol(int length);
SchlafliSymbol cross_symbol(int length);

}  // namespace polyforge
