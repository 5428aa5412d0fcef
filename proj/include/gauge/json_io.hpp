#pragma once

/**
 * @file json_io.hpp
 * @brief Stable JSON encodings of the calculator's value types.
 *
 * Schemas (stable across releases):
 *   group     {"free_rank": n, "torsion": [[p, e], ...]}
 *   surface   {"g": g, "r": r, "a": a}
 *   class     {"c": c, "w": [w1, ...]} (Real) | {"c": c} (Quaternionic)
 *   locality  {"kind": "integral"} |
 *             {"kind": "p_local", "constraint": {"exclude_two": b,
 *              "coprime_to_rank": b, "equals_rank": b}}
 *   factor    {"atom": "...", "loops": k, "mult": m, "locality": ...}
 *   expr      {"family": "...", "rank": n, "factors": [...], "rendered": "..."}
 *   answer    {"terms": [{"group": ..., "locality": ...}],
 *              "unknowns": [{"atom": "...", "degree": d, "reason": "..."}],
 *              "rendered": "..."}
 *
 * Residual atoms are encoded structurally:
 *   {"residual": {"family": ..., "flavor": ..., "surface": ..., "class": ...}}
 * while stable atoms are encoded as their name string.
 */

#include <nlohmann/json.hpp>

#include "gauge/spaces.hpp"
#include "gauge/tables.hpp"

namespace gauge::jsonio {

using nlohmann::json;

json encode(const FgAbGroup& g);
json encode(const SurfaceType& t);
json encode(const BundleClass& cls);
json encode(const PrimeConstraint& c);
json encode(const Locality& loc);
json encode(const Atom& atom);
json encode(const Factor& f, bool quaternionic);
json encode(const RuleApplication& rule);
json encode(const SpaceExpr& e);
json encode(const GroupAnswer& a, bool quaternionic);
json encode(const Table1& t);
json encode(const TableInstance& t);

FgAbGroup decode_group(const json& j);
SurfaceType decode_surface(const json& j);
BundleClass decode_class(const json& j, Family family);
PrimeConstraint decode_constraint(const json& j);
Locality decode_locality(const json& j);
Atom decode_atom(const json& j);
Factor decode_factor(const json& j);
RuleApplication decode_rule(const json& j);
SpaceExpr decode_expr(const json& j);
GroupAnswer decode_answer(const json& j);

std::string family_name(Family f);
Family parse_family(const std::string& s);
std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

}  // namespace gauge::jsonio
