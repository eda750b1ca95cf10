#include "polyforge/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyforge/algebras.hpp"
#include "polyforge/constructors.hpp"
#include "polyforge/io.hpp"
#include "polyforge/schlafli.hpp"
#include "polyforge/symmetry.hpp"
#include "polyforge/verify.hpp"

namespace polyforge::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int dimension_cap() {
  const char* env = std::getenv("POLYFORGE_DIM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultDimensionCap;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::string(env).size() || cap < 1) throw std::invalid_argument(env);
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string("POLYFORGE_DIM_CAP must be a positive integer, got '") + env + "'");
  }
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
}

/// "<name>", "<name> <n>", "<name>(<n>)" or a symbol such as "{3,3,5}".
NamedPolytope resolve(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing polytope name");
  const int cap = dimension_cap();
  if (!args[0].empty() && args[0].front() == '{') {
    if (args.size() != 1) throw UsageError("unexpected argument after symbol");
    return from_symbol(SchlafliSymbol::parse(args[0]), cap);
  }
  static const std::vector<std::string> kParametric = {"polygon", "simplex", "hypercube", "cross"};
  const bool parametric =
      std::find(kParametric.begin(), kParametric.end(), args[0]) != kParametric.end();
  if (parametric) {
    if (args.size() != 2) throw UsageError(args[0] + " needs one integer parameter");
    return build(PolytopeName{parse_polytope_name(args[0] + "(1)").family,
                              parse_int(args[1], "parameter")},
                 cap);
  }
  if (args.size() != 1) throw UsageError("unexpected argument after " + args[0]);
  PolytopeName name;
  try {
    name = parse_polytope_name(args[0]);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  return build(name, cap);
}

Json approx_rows(const std::vector<Point>& points) {
  Json rows = Json::array();
  for (const auto& p : points) {
    Json row = Json::array();
    for (const auto& c : p) row.push_back(c.to_double());
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_generate(const std::vector<std::string>& args, bool fvector, bool json, bool geometry,
                 bool approx, std::ostream& out) {
  const NamedPolytope p = resolve(args);
  if (fvector) {
    out << f_vector(p.lattice).to_string() << '\n';
  } else if (json) {
    Json j = polytope_to_json(p);
    if (approx && p.geometry) j["geometry_approx"] = approx_rows(p.geometry->vertices);
    out << dump(j) << '\n';
  } else if (geometry) {
    if (!p.geometry) throw LatticeError(p.name.to_string() + " has no exact coordinates");
    Json j = geometry_to_json(*p.geometry);
    if (approx) j["approx"] = approx_rows(p.geometry->vertices);
    out << dump(j) << '\n';
  } else {
    out << "name=" << p.name.to_string() << " symbol=" << p.symbol.to_string()
        << " fvector=" << f_vector(p.lattice).to_string() << '\n';
  }
  return kExitOk;
}

int cmd_classify(const std::string& symbol, std::ostream& out) {
  out << to_string(classify(SchlafliSymbol::parse(symbol))) << '\n';
  return kExitOk;
}

int cmd_dual(const std::vector<std::string>& args, std::ostream& out) {
  FaceLattice lattice;
  if (args.size() == 1 && std::filesystem::is_regular_file(args[0])) {
    std::ifstream in(args[0]);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("cannot parse ") + args[0] + ": " + e.what());
    }
    lattice = lattice_from_json(j.contains("lattice") ? j.at("lattice") : j);
    require_valid(lattice, args[0]);
  } else {
    lattice = resolve(args).lattice;
  }
  out << dump(lattice_to_json(dual(lattice))) << '\n';
  return kExitOk;
}

int cmd_euler(const std::vector<std::string>& args, std::ostream& out) {
  const NamedPolytope p = resolve(args);
  out << "euler=" << euler_characteristic(f_vector(p.lattice))
      << " full=" << euler_characteristic_full(p.lattice) << '\n';
  return kExitOk;
}

int cmd_flags(const std::vector<std::string>& args, std::ostream& out) {
  out << count_flags(resolve(args).lattice) << '\n';
  return kExitOk;
}

int cmd_group_order(const std::vector<std::string>& args, std::ostream& out) {
  const NamedPolytope p = resolve(args);
  const auto full = automorphism_order(p.lattice);
  out << "isometry=" << full;
  if (p.lattice.dimension() >= 2) {
    // Same rule as rotation_order, without a second search.
    if (full % 2 != 0) throw LatticeError("odd automorphism order " + std::to_string(full));
    out << " rotation=" << full / 2;
  }
  out << '\n';
  return kExitOk;
}

int cmd_binary_group(const std::string& which, bool json, bool approx, std::ostream& out) {
  QuaternionGroup g;
  if (which == "tetrahedral") {
    g = binary_tetrahedral();
  } else if (which == "icosahedral") {
    g = binary_icosahedral();
  } else {
    throw UsageError("binary-group expects 'tetrahedral' or 'icosahedral'");
  }
  if (json) {
    Json j = group_to_json(g);
    if (approx) {
      std::vector<Point> rows;
      for (const auto& q : g.elements) {
        const auto c = q.components();
        rows.emplace_back(c.begin(), c.end());
      }
      j["approx"] = approx_rows(rows);
    }
    out << dump(j) << '\n';
  } else {
    out << "order=" << g.order() << '\n';
  }
  return kExitOk;
}

int print_checks(const std::string& subject, const std::vector<CheckResult>& checks,
                 std::ostream& out, std::size_t& failures) {
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << subject << ": " << c.name;
    if (!c.detail.empty()) out << " [" << c.detail << ']';
    out << '\n';
    if (!c.passed) ++failures;
  }
  return static_cast<int>(checks.size());
}

int cmd_algebra(const std::string& what, std::ostream& out) {
  if (what == "table") {
    out << dump(octonion_table_to_json(octonion_table())) << '\n';
    return kExitOk;
  }
  if (what != "check") throw UsageError("algebra expects 'table' or 'check'");

  std::vector<CheckResult> checks;
  auto add = [&](std::string name, bool ok) { checks.push_back({std::move(name), ok, {}}); };
  const auto e = [](int k) { return Octonion::unit(k); };
  add("e1 e2 = e4", omul(e(1), e(2)) == e(4));
  add("e2 e3 = e5", omul(e(2), e(3)) == e(5));
  add("e3 e1 = e6", omul(e(3), e(1)) == e(6));
  add("e1 (e2 e3) = e7", omul(e(1), omul(e(2), e(3))) == e(7));
  add("(e1 e2) e3 = -e7", omul(omul(e(1), e(2)), e(3)) == Rational(-1) * e(7));
  add("associator(e1, e2, e3) = -2 e7", associator(e(1), e(2), e(3)) == Rational(-2) * e(7));
  bool squares = true;
  bool anti = true;
  for (int i = 1; i < 8; ++i) {
    squares = squares && omul(e(i), e(i)) == Rational(-1) * e(0);
    for (int j = 1; j < 8; ++j) {
      if (i != j) anti = anti && omul(e(i), e(j)) == Rational(-1) * omul(e(j), e(i));
    }
  }
  add("e_i^2 = -1", squares);
  add("distinct imaginary units anticommute", anti);
  bool quaternion_assoc = true;
  const Quaternion basis[] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      for (const auto& c : basis) quaternion_assoc = quaternion_assoc && (a * b) * c == a * (b * c);
    }
  }
  add("quaternion basis associators vanish", quaternion_assoc);
  add("i j = k, j i = -k", Quaternion::i() * Quaternion::j() == Quaternion::k() &&
                               Quaternion::j() * Quaternion::i() == -Quaternion::k());
  std::size_t failures = 0;
  print_checks("algebra", checks, out, failures);
  return failures == 0 ? kExitOk : kExitDomainError;
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<NamedPolytope> targets;
  if (args.size() == 1 && args[0] == "all") {
    for (const auto& name : default_verification_set()) targets.push_back(build(name, dimension_cap()));
  } else {
    targets.push_back(resolve(args));
  }
  std::size_t failures = 0;
  std::size_t total = 0;
  for (const auto& t : targets) {
    total += static_cast<std::size_t>(print_checks(t.name.to_string(), verify_polytope(t), out, failures));
  }
  out << "verify: " << (total - failures) << '/' << total << " checks passed\n";
  return failures == 0 ? kExitOk : kExitDomainError;
}

int cmd_catalog(const std::string& dim, int max_p, std::ostream& out) {
  const auto cat = spherical_catalog(parse_int(dim, "dimension"), max_p);
  if (cat.infinite_polygon_family) out << "# {p} for every p >= 3; listing p <= " << max_p << '\n';
  for (const auto& s : cat.symbols) out << s.to_string() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions of the regular convex polytopes", "polyforge"};
  app.require_subcommand(1);
  bool approx = false;
  app.add_flag("--approx", approx, "Also print decimal approximations (display only)");

  std::vector<std::string> target;
  bool want_fvector = false;
  bool want_json = false;
  bool want_geometry = false;
  auto* generate = app.add_subcommand("generate", "Build a polytope by name or symbol");
  generate->add_option("target", target, "name [param] or {p,q,...}")->required();
  auto* fv = generate->add_flag("--fvector", want_fvector, "Print the f-vector");
  auto* js = generate->add_flag("--json", want_json, "Print the polytope as JSON");
  auto* geo = generate->add_flag("--geometry", want_geometry, "Print exact coordinates as JSON");
  fv->excludes(js)->excludes(geo);
  js->excludes(geo);
  generate->add_flag("--approx", approx, "Add decimal coordinates");

  std::string symbol;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a Schlafli symbol");
  classify_cmd->add_option("symbol", symbol, "{p,q,...}")->required();

  auto* dual_cmd = app.add_subcommand("dual", "Dual lattice of a JSON file or named polytope");
  dual_cmd->add_option("target", target, "file.json | name [param]")->required();

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristics");
  euler_cmd->add_option("target", target)->required();

  auto* flags_cmd = app.add_subcommand("flags", "Number of flags");
  flags_cmd->add_option("target", target)->required();

  auto* group_cmd = app.add_subcommand("group-order", "Automorphism and rotation orders");
  group_cmd->add_option("target", target)->required();

  std::string which;
  bool group_json = false;
  auto* binary_cmd = app.add_subcommand("binary-group", "Binary polyhedral quaternion groups");
  binary_cmd->add_option("kind", which, "tetrahedral | icosahedral")->required();
  binary_cmd->add_flag("--json", group_json, "Print every element");
  binary_cmd->add_flag("--approx", approx, "Add decimal components");

  std::string algebra_what;
  auto* algebra_cmd = app.add_subcommand("algebra", "Octonion table and division-algebra checks");
  algebra_cmd->add_option("what", algebra_what, "table | check")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("target", target, "name [param] | all")->required();

  std::string catalog_dim;
  int max_p = kDefaultPolygonBound;
  auto* catalog_cmd = app.add_subcommand("catalog", "Regular convex polytopes of a dimension");
  catalog_cmd->add_option("dimension", catalog_dim)->required();
  catalog_cmd->add_option("--max-p", max_p, "Largest polygon listed in dimension 2");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(target, want_fvector, want_json, want_geometry, approx, out);
    if (*classify_cmd) return cmd_classify(symbol, out);
    if (*dual_cmd) return cmd_dual(target, out);
    if (*euler_cmd) return cmd_euler(target, out);
    if (*flags_cmd) return cmd_flags(target, out);
    if (*group_cmd) return cmd_group_order(target, out);
    if (*binary_cmd) return cmd_binary_group(which, group_json, approx, out);
    if (*algebra_cmd) return cmd_algebra(algebra_what, out);
    if (*verify_cmd) return cmd_verify(target, out);
    if (*catalog_cmd) return cmd_catalog(catalog_dim, max_p, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const SymbolError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace polyforge::cli
