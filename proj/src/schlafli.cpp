#include "polyforge/schlafli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "polyforge/exactnum.hpp"

namespace polyforge {

namespace {

bool all_threes(const std::vector<int>& e, std::size_t from, std::size_t to) {
  return std::all_of(e.begin() + static_cast<long>(from), e.begin() + static_cast<long>(to),
                     [](int x) { return x == 3; });
}

bool is_simplex(const std::vector<int>& e) { return all_threes(e, 0, e.size()); }

bool is_hypercube(const std::vector<int>& e) {
  return !e.empty() && e.front() == 4 && all_threes(e, 1, e.size());
}

bool is_cross(const std::vector<int>& e) {
  return !e.empty() && e.back() == 4 && all_threes(e, 0, e.size() - 1);
}

bool is_cubic_honeycomb(const std::vector<int>& e) {
  return e.size() >= 2 && e.front() == 4 && e.back() == 4 && all_threes(e, 1, e.size() - 1);
}

}  // namespace

SchlafliSymbol::SchlafliSymbol(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int p : entries_) {
    if (p < 3) throw SymbolError("Schlafli entries must be >= 3, got " + std::to_string(p));
  }
}

SchlafliSymbol SchlafliSymbol::parse(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw SymbolError("symbol must be written as {p,q,...}: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> entries;
  bool blank = std::all_of(body.begin(), body.end(), is_space);
  while (!blank) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw SymbolError("bad symbol entry '" + std::string(item) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return SchlafliSymbol(std::move(entries));
}

std::string SchlafliSymbol::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += '}';
  return out;
}

std::string_view to_string(SymbolClass c) {
  switch (c) {
    case SymbolClass::SphericalPolytope: return "spherical";
    case SymbolClass::EuclideanHoneycomb: return "euclidean";
    case SymbolClass::Hyperbolic: return "hyperbolic";
    case SymbolClass::NotRecognized: return "not-recognized";
  }
  return "not-recognized";
}

SymbolClass classify(const SchlafliSymbol& s) {
  const auto& e = s.entries();
  switch (e.size()) {
    case 0:
    case 1:
      return SymbolClass::SphericalPolytope;
    case 2: {
      const Rational lhs = Rational(1, e[0]) + Rational(1, e[1]);
      const Rational half(1, 2);
      if (lhs > half) return SymbolClass::SphericalPolytope;
      if (lhs == half) return SymbolClass::EuclideanHoneycomb;
      return SymbolClass::Hyperbolic;
    }
    case 3: {
      static const std::vector<std::vector<int>> kSpherical = {
          {3, 3, 3}, {4, 3, 3}, {3, 3, 4}, {3, 4, 3}, {3, 3, 5}, {5, 3, 3}};
      if (std::find(kSpherical.begin(), kSpherical.end(), e) != kSpherical.end()) {
        return SymbolClass::SphericalPolytope;
      }
      if (e == std::vector<int>{4, 3, 4}) return SymbolClass::EuclideanHoneycomb;
      return SymbolClass::NotRecognized;
    }
    case 4:
      if (is_simplex(e) || is_hypercube(e) || is_cross(e)) return SymbolClass::SphericalPolytope;
      if (is_cubic_honeycomb(e) || e == std::vector<int>{3, 4, 3, 3} ||
          e == std::vector<int>{3, 3, 4, 3}) {
        return SymbolClass::EuclideanHoneycomb;
      }
      return SymbolClass::NotRecognized;
    default:
      if (is_simplex(e) || is_hypercube(e) || is_cross(e)) return SymbolClass::SphericalPolytope;
      if (is_cubic_honeycomb(e)) return SymbolClass::EuclideanHoneycomb;
      return SymbolClass::NotRecognized;
  }
}

SchlafliSymbol dual_symbol(const SchlafliSymbol& s) {
  std::vector<int> e = s.entries();
  std::reverse(e.begin(), e.end());
  return SchlafliSymbol(std::move(e));
}

SchlafliSymbol simplex_symbol(int length) {
  return SchlafliSymbol(std::vector<int>(static_cast<std::size_t>(length), 3));
}

SchlafliSymbol hypercube_symbol(int length) {
  std::vector<int> e(static_cast<std::size_t>(length), 3);
  if (!e.empty()) e.front() = 4;
  return SchlafliSymbol(std::move(e));
}

SchlafliSymbol cross_symbol(int length) {
  std::vector<int> e(static_cast<std::size_t>(length), 3);
  if (!e.empty()) e.back() = 4;
  return SchlafliSymbol(std::move(e));
}

SphericalCatalog spherical_catalog(int dimension, int polygon_bound) {
  if (dimension < 1) throw SymbolError("catalog dimension must be >= 1");
  SphericalCatalog cat;
  cat.dimension = dimension;
  switch (dimension) {
    case 1:
      cat.symbols = {SchlafliSymbol{}};
      break;
    case 2:
      cat.infinite_polygon_family = true;
      for (int p = 3; p <= polygon_bound; ++p) cat.symbols.push_back(SchlafliSymbol{p});
      break;
    case 3:
      cat.symbols = {{3, 3}, {4, 3}, {3, 4}, {3, 5}, {5, 3}};
      break;
    case 4:
      cat.symbols = {{3, 3, 3}, {4, 3, 3}, {3, 3, 4}, {3, 4, 3}, {3, 3, 5}, {5, 3, 3}};
      break;
    default:
      cat.symbols = {simplex_symbol(dimension - 1), hypercube_symbol(dimension - 1),
                     cross_symbol(dimension - 1)};
      break;
  }
  return cat;
}

}  // namespace polyforge
