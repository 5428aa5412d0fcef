/**
 * gaugecalc — command-line front end for the gauge-group homotopy calculator.
 *
 * Subcommands:
 *   validate      check a surface type (g,r,a) against the realizability
 *                 constraints; prints "valid" or "invalid: <reason>".
 *   enumerate     list all valid surface types with genus up to --g-max.
 *   canonicalize  reduce a bundle class to its canonical representative.
 *   decompose     rewrite a gauge group as a product of loop spaces of
 *                 classical groups and residual factors.
 *   explain       decompose, always printing the rewrite-rule provenance.
 *   pi            evaluate a homotopy group pi_i of a gauge group.
 *   table         emit the summary tables (--which 1|2|3) comparing the
 *                 engine's answers against the closed formulas.
 *
 * Common flags: --family real|quat, --flavor unpointed|single|multi,
 * --type g,r,a, --rank N, --class SPEC, --degree I, --at-prime P, --json,
 * --explain.  Class spec grammar: Real classes are written "c:w1w2...wr"
 * (an integer, a colon, then one 0/1 digit per fixed circle; the digits are
 * omitted when r = 0); Quaternionic classes are a bare even integer.
 *
 * Exit codes: 0 success; 2 invalid input (malformed flags, invalid surface
 * type or class); 3 structurally valid but unsupported query.
 *
 * Output is deterministic: identical invocations produce identical bytes.
 * Data goes to stdout, diagnostics to stderr.
 */

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gauge/decompose.hpp"
#include "gauge/homotopy.hpp"
#include "gauge/json_io.hpp"
#include "gauge/tables.hpp"

namespace {

using namespace gauge;
using nlohmann::json;

/// Parses "g,r,a" into three integers without validating the type itself.
std::array<int, 3> parse_type_spec(const std::string& spec) {
  std::array<int, 3> out{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? spec.find(',', start) : spec.size();
    if (end == std::string::npos)
      throw UsageError("--type: expected g,r,a (three comma-separated integers), got '" + spec +
                       "'");
    const std::string piece = spec.substr(start, end - start);
    try {
      std::size_t used = 0;
      out[i] = std::stoi(piece, &used);
      if (used != piece.size() || piece.empty()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError("--type: expected g,r,a (three comma-separated integers), got '" + spec +
                       "'");
    }
    start = end + 1;
  }
  if (spec.find(',', start) != std::string::npos)
    throw UsageError("--type: expected exactly three components, got '" + spec + "'");
  return out;
}

std::int64_t parse_integer(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const std::int64_t value = std::stoll(text, &used);
    if (used != text.size() || text.empty()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
}

/**
 * Parses a --class spec.  Real: "c:w1w2...wr" (bare "c" and "c:" are
 * accepted when r = 0).  Quaternionic: bare integer.
 */
BundleClass parse_class_spec(Family family, const SurfaceType& t, const std::string& spec) {
  if (family == Family::Quaternionic) return QuatClass{parse_integer("--class", spec)};
  std::string head = spec;
  std::string tail;
  if (const std::size_t colon = spec.find(':'); colon != std::string::npos) {
    head = spec.substr(0, colon);
    tail = spec.substr(colon + 1);
  }
  const std::int64_t c = parse_integer("--class", head);
  std::vector<int> w;
  for (char ch : tail) {
    if (ch != '0' && ch != '1')
      throw UsageError("--class: monodromy digits must be 0 or 1, got '" + spec + "'");
    w.push_back(ch - '0');
  }
  if (static_cast<int>(w.size()) != t.r)
    throw UsageError("--class: expected " + std::to_string(t.r) +
                     " monodromy digits after ':', got " + std::to_string(w.size()));
  return RealClass{c, w};
}

void print_provenance(const SpaceExpr& expr) {
  if (expr.provenance.empty()) {
    std::cout << "provenance: (none; already in terminal form)\n";
    return;
  }
  std::cout << "provenance:\n";
  for (const RuleApplication& r : expr.provenance) {
    std::cout << "  " << r.rule;
    if (!r.conditions_checked.empty()) {
      std::cout << "  [";
      bool first = true;
      for (const auto& [text, held] : r.conditions_checked) {
        if (!first) std::cout << "; ";
        first = false;
        std::cout << text << ": " << (held ? "yes" : "no");
      }
      std::cout << "]";
    }
    std::cout << "\n";
  }
}

struct Options {
  std::string family_str;
  std::string flavor_str;
  std::string type_str;
  std::string class_str;
  int rank = 0;
  int degree = -1;
  std::int64_t at_prime = 0;
  int g_max = 6;
  int which = 0;
  int j = 0;
  bool as_json = false;
  bool explain = false;
};

GaugeGroupId build_id(const Options& opt) {
  const auto [g, r, a] = parse_type_spec(opt.type_str);
  const SurfaceType t = SurfaceType::make(g, r, a);
  const Family family = jsonio::parse_family(opt.family_str);
  const Flavor flavor = jsonio::parse_flavor(opt.flavor_str);
  BundleClass cls;
  if (opt.class_str.empty()) {
    if (family == Family::Real)
      cls = RealClass{0, std::vector<int>(static_cast<std::size_t>(t.r), 0)};
    else
      cls = QuatClass{0};
  } else {
    cls = parse_class_spec(family, t, opt.class_str);
  }
  if (family == Family::Real) {
    const RealClass& rc = std::get<RealClass>(cls);
    return make_real_id(flavor, t, rc.c, rc.w, opt.rank);
  }
  return make_quat_id(flavor, t, std::get<QuatClass>(cls).c, opt.rank);
}

LocalityRequest build_request(const Options& opt, bool prime_given) {
  if (!prime_given) return LocalityRequest::integral();
  return LocalityRequest::at_prime(opt.at_prime);
}

int run_validate(const Options& opt) {
  const auto [g, r, a] = parse_type_spec(opt.type_str);
  const SurfaceValidity v = validate_surface(g, r, a);
  if (opt.as_json) {
    std::cout << json{{"valid", v.valid}, {"reason", v.reason}}.dump(2) << "\n";
  } else if (v.valid) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid: " << v.reason << "\n";
  }
  return v.valid ? 0 : 2;
}

int run_enumerate(const Options& opt) {
  if (opt.g_max < 0) throw UsageError("--g-max: must be nonnegative");
  const std::vector<SurfaceType> types = enumerate_surfaces(opt.g_max);
  if (opt.as_json) {
    json out = json::array();
    for (const SurfaceType& t : types) out.push_back(jsonio::encode(t));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const SurfaceType& t : types) std::cout << render(t) << "\n";
  }
  return 0;
}

int run_canonicalize(const Options& opt) {
  const GaugeGroupId id = build_id(opt);
  const CanonicalClass cc = canonical_class(id);
  if (opt.as_json) {
    json out = {{"class", jsonio::encode(cc.cls)},
                {"justification", cc.justification},
                {"rendered", render(cc.cls)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render(cc.cls) << "\n";
    if (!cc.justification.empty()) {
      std::cout << "via:";
      for (const std::string& rule : cc.justification) std::cout << " " << rule;
      std::cout << "\n";
    }
  }
  return 0;
}

int run_decompose(const Options& opt, bool prime_given, bool force_explain) {
  const GaugeGroupId id = build_id(opt);
  const SpaceExpr expr = decompose(id, build_request(opt, prime_given));
  if (opt.as_json) {
    std::cout << jsonio::encode(expr).dump(2) << "\n";
  } else {
    std::cout << render(expr) << "\n";
    if (opt.explain || force_explain) print_provenance(expr);
  }
  return 0;
}

int run_pi(const Options& opt, bool prime_given) {
  if (opt.degree < 0) throw UsageError("--degree: must be nonnegative");
  const GaugeGroupId id = build_id(opt);
  const LocalityRequest req = build_request(opt, prime_given);
  const bool quat = id.family == Family::Quaternionic;
  const GroupAnswer answer = pi(id, opt.degree, req);
  if (opt.as_json) {
    json out = jsonio::encode(answer, quat);
    out["degree"] = opt.degree;
    std::cout << out.dump(2) << "\n";
  } else {
    if (opt.explain) {
      const SpaceExpr expr = decompose(id, req);
      std::cout << render(expr) << "\n";
      print_provenance(expr);
    }
    std::cout << render(answer, quat) << "\n";
  }
  return 0;
}

int run_table(const Options& opt, bool family_given) {
  if (opt.which == 1) {
    if (!family_given) throw UsageError("--family: required for --which 1");
    const Family family = jsonio::parse_family(opt.family_str);
    const Table1 table = emit_table1(family, opt.rank, opt.g_max);
    if (opt.as_json)
      std::cout << jsonio::encode(table).dump(2) << "\n";
    else
      std::cout << render_markdown(table);
    return 0;
  }
  const auto [g, r, a] = parse_type_spec(opt.type_str);
  const SurfaceType t = SurfaceType::make(g, r, a);
  const Family implied = opt.which == 2 ? Family::Real : Family::Quaternionic;
  if (family_given && jsonio::parse_family(opt.family_str) != implied)
    throw UsageError("--family: table " + std::to_string(opt.which) + " is " +
                     (implied == Family::Real ? std::string("Real") : std::string("Quaternionic")) +
                     "-only");
  const TableInstance table = opt.which == 2 ? emit_table2_instance(t, opt.rank, opt.j)
                                             : emit_table3_instance(t, opt.rank, opt.j);
  if (opt.as_json)
    std::cout << jsonio::encode(table).dump(2) << "\n";
  else
    std::cout << render_markdown(table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Symbolic homotopy calculator for gauge groups of Real and Quaternionic bundles "
               "over Real surfaces."};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.as_json, "emit JSON"); };
  auto add_id_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", opt.family_str, "real | quat")->required();
    cmd->add_option("--flavor", opt.flavor_str, "unpointed | single | multi")->required();
    cmd->add_option("--type", opt.type_str, "surface type g,r,a")->required();
    cmd->add_option("--rank", opt.rank, "bundle rank (Quaternionic: even)")->required();
    cmd->add_option("--class", opt.class_str,
                    "class spec (Real \"c:w1..wr\"; Quaternionic bare integer; default 0)");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a surface type");
  validate->add_option("--type", opt.type_str, "surface type g,r,a")->required();
  add_json(validate);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list valid surface types");
  enumerate->add_option("--g-max", opt.g_max, "maximum genus")->required();
  add_json(enumerate);

  CLI::App* canonicalize = app.add_subcommand("canonicalize", "canonicalize a bundle class");
  add_id_flags(canonicalize);
  add_json(canonicalize);

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "decompose a gauge group");
  add_id_flags(decompose_cmd);
  CLI::Option* dec_prime =
      decompose_cmd->add_option("--at-prime", opt.at_prime, "decompose p-locally at this prime");
  decompose_cmd->add_flag("--explain", opt.explain, "print rewrite-rule provenance");
  add_json(decompose_cmd);

  CLI::App* explain = app.add_subcommand("explain", "decompose with provenance");
  add_id_flags(explain);
  CLI::Option* exp_prime =
      explain->add_option("--at-prime", opt.at_prime, "decompose p-locally at this prime");
  add_json(explain);

  CLI::App* pi_cmd = app.add_subcommand("pi", "evaluate a homotopy group");
  add_id_flags(pi_cmd);
  pi_cmd->add_option("--degree", opt.degree, "homotopy degree i >= 0")->required();
  CLI::Option* pi_prime =
      pi_cmd->add_option("--at-prime", opt.at_prime, "evaluate p-locally at this prime");
  pi_cmd->add_flag("--explain", opt.explain, "print the decomposition and provenance first");
  add_json(pi_cmd);

  CLI::App* table = app.add_subcommand("table", "emit a summary table");
  table->add_option("--which", opt.which, "1 | 2 | 3")->required()->check(CLI::Range(1, 3));
  CLI::Option* table_family = table->add_option("--family", opt.family_str, "real | quat");
  table->add_option("--rank", opt.rank, "bundle rank")->required();
  table->add_option("--g-max", opt.g_max, "maximum genus (table 1; default 6)");
  table->add_option("--type", opt.type_str, "surface type g,r,a (tables 2 and 3)");
  table->add_option("--j", opt.j, "degree block: rows cover degrees 8j..8j+7 (default 0)");
  add_json(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(opt);
    if (app.got_subcommand(enumerate)) return run_enumerate(opt);
    if (app.got_subcommand(canonicalize)) return run_canonicalize(opt);
    if (app.got_subcommand(decompose_cmd))
      return run_decompose(opt, dec_prime->count() > 0, false);
    if (app.got_subcommand(explain)) return run_decompose(opt, exp_prime->count() > 0, true);
    if (app.got_subcommand(pi_cmd)) return run_pi(opt, pi_prime->count() > 0);
    if (app.got_subcommand(table)) return run_table(opt, table_family->count() > 0);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedQuery& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
