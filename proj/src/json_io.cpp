#include "gauge/json_io.hpp"

namespace gauge::jsonio {

namespace {

std::string reason_name(UnknownReason r) {
  switch (r) {
    case UnknownReason::NoIntegralData: return "NoIntegralData";
    case UnknownReason::OutOfStableRange: return "OutOfStableRange";
    case UnknownReason::ConditionsUnsatisfied: return "ConditionsUnsatisfied";
  }
  return "?";
}

UnknownReason parse_reason(const std::string& s) {
  if (s == "NoIntegralData") return UnknownReason::NoIntegralData;
  if (s == "OutOfStableRange") return UnknownReason::OutOfStableRange;
  if (s == "ConditionsUnsatisfied") return UnknownReason::ConditionsUnsatisfied;
  throw UsageError("unknown reason: " + s);
}

const char* basic_atom_name(BasicAtom a) {
  switch (a) {
    case BasicAtom::U: return "U";
    case BasicAtom::O: return "O";
    case BasicAtom::SO: return "SO";
    case BasicAtom::Sp: return "Sp";
    case BasicAtom::UmodO: return "U/O";
    case BasicAtom::UmodSO: return "U/SO";
    case BasicAtom::UmodSp: return "U/Sp";
    case BasicAtom::Circle: return "S1";
  }
  return "?";
}

BasicAtom parse_basic_atom(const std::string& s) {
  for (BasicAtom a : {BasicAtom::U, BasicAtom::O, BasicAtom::SO, BasicAtom::Sp, BasicAtom::UmodO,
                      BasicAtom::UmodSO, BasicAtom::UmodSp, BasicAtom::Circle})
    if (s == basic_atom_name(a)) return a;
  throw UsageError("unknown atom: " + s);
}

}  // namespace

std::string family_name(Family f) { return f == Family::Real ? "real" : "quaternionic"; }

Family parse_family(const std::string& s) {
  if (s == "real") return Family::Real;
  if (s == "quaternionic" || s == "quat") return Family::Quaternionic;
  throw UsageError("unknown family: " + s + " (expected real or quat)");
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Unpointed: return "unpointed";
    case Flavor::SinglePointed: return "single";
    case Flavor::MultiPointed: return "multi";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "unpointed") return Flavor::Unpointed;
  if (s == "single") return Flavor::SinglePointed;
  if (s == "multi") return Flavor::MultiPointed;
  throw UsageError("unknown flavor: " + s + " (expected unpointed, single, or multi)");
}

json encode(const FgAbGroup& g) {
  json torsion = json::array();
  for (const TorsionPiece& t : g.torsion) torsion.push_back({t.prime, t.exponent});
  return {{"free_rank", g.free_rank}, {"torsion", torsion}};
}

json encode(const SurfaceType& t) { return {{"g", t.g}, {"r", t.r}, {"a", t.a}}; }

json encode(const BundleClass& cls) {
  if (const RealClass* rc = std::get_if<RealClass>(&cls)) return {{"c", rc->c}, {"w", rc->w}};
  return {{"c", std::get<QuatClass>(cls).c}};
}

json encode(const PrimeConstraint& c) {
  return {{"exclude_two", c.exclude_two},
          {"coprime_to_rank", c.coprime_to_rank},
          {"equals_rank", c.equals_rank}};
}

json encode(const Locality& loc) {
  if (loc.is_integral()) return {{"kind", "integral"}};
  return {{"kind", "p_local"}, {"constraint", encode(loc.constraint)}};
}

json encode(const Atom& atom) {
  if (const BasicAtom* basic = std::get_if<BasicAtom>(&atom)) return basic_atom_name(*basic);
  const ResidualAtom& res = std::get<ResidualAtom>(atom);
  return {{"residual",
           {{"family", family_name(res.family)},
            {"flavor", flavor_name(res.flavor)},
            {"surface", encode(res.surface)},
            {"class", encode(res.cls)}}}};
}

json encode(const Factor& f, bool quaternionic) {
  json out = {{"atom", encode(f.atom)},
              {"loops", f.loops},
              {"mult", f.mult},
              {"locality", encode(f.locality)}};
  if (!f.locality.is_integral())
    out["constraint_rendered"] = render(f.locality.constraint, quaternionic);
  return out;
}

json encode(const RuleApplication& rule) {
  json conds = json::array();
  for (const auto& [text, held] : rule.conditions_checked) conds.push_back({text, held});
  return {{"rule", rule.rule}, {"conditions", conds}};
}

json encode(const SpaceExpr& e) {
  json factors = json::array();
  const bool quat = e.family == Family::Quaternionic;
  for (const Factor& f : e.factors) factors.push_back(encode(f, quat));
  json provenance = json::array();
  json rules = json::array();
  for (const RuleApplication& r : e.provenance) {
    provenance.push_back(r.rule);
    rules.push_back(encode(r));
  }
  return {{"family", family_name(e.family)},
          {"rank", e.rank},
          {"factors", factors},
          {"provenance", provenance},
          {"rules", rules},
          {"rendered", render(e)}};
}

json encode(const GroupAnswer& a, bool quaternionic) {
  json terms = json::array();
  for (const auto& [group, locality] : a.terms)
    terms.push_back({{"group", encode(group)}, {"locality", encode(locality)}});
  json unknowns = json::array();
  for (const UnknownSummand& u : a.unknowns)
    unknowns.push_back({{"atom", u.atom}, {"degree", u.degree}, {"reason", reason_name(u.reason)}});
  return {{"terms", terms}, {"unknowns", unknowns}, {"rendered", render(a, quaternionic)}};
}

json encode(const Table1& t) {
  const bool quat = t.family == Family::Quaternionic;
  auto cell = [&](const Table1Cell& c) {
    return json{{"answer", encode(c.answer, quat)},
                {"paper", encode(c.paper)},
                {"annotation", c.annotation}};
  };
  json rows = json::array();
  for (const Table1Row& row : t.rows) {
    rows.push_back({{"type", encode(row.type)},
                    {"pi0_multi", cell(row.pi0_multi)},
                    {"pi0_unpointed", cell(row.pi0_unpointed)},
                    {"pi1_multi", cell(row.pi1_multi)},
                    {"pi1_unpointed", cell(row.pi1_unpointed)}});
  }
  return {{"family", family_name(t.family)},
          {"rank", t.rank},
          {"rows", rows},
          {"low_rank_notes", t.low_rank_notes}};
}

json encode(const TableInstance& t) {
  const bool quat = t.family == Family::Quaternionic;
  auto cell = [&](const InstanceCell& c) {
    return json{{"engine", encode(c.engine, quat)},
                {"formula",
                 {{"integral", encode(c.formula.integral)}, {"p_local", encode(c.formula.p_local)}}},
                {"match", render(c.match)}};
  };
  json rows = json::array();
  for (const InstanceRow& row : t.rows) {
    rows.push_back({{"degree", row.degree},
                    {"within_caption_bound", row.within_caption_bound},
                    {"multi", cell(row.multi)},
                    {"unpointed", cell(row.unpointed)}});
  }
  return {{"family", family_name(t.family)},
          {"type", encode(t.type)},
          {"rank", t.rank},
          {"j", t.j},
          {"prime", t.prime},
          {"rows", rows}};
}

FgAbGroup decode_group(const json& j) {
  FgAbGroup g;
  g.free_rank = j.at("free_rank").get<int>();
  for (const json& t : j.at("torsion"))
    g.torsion.push_back({t.at(0).get<std::int64_t>(), t.at(1).get<int>()});
  g.normalize();
  return g;
}

SurfaceType decode_surface(const json& j) {
  return SurfaceType::make(j.at("g").get<int>(), j.at("r").get<int>(), j.at("a").get<int>());
}

BundleClass decode_class(const json& j, Family family) {
  if (family == Family::Real)
    return RealClass{j.at("c").get<std::int64_t>(), j.at("w").get<std::vector<int>>()};
  return QuatClass{j.at("c").get<std::int64_t>()};
}

PrimeConstraint decode_constraint(const json& j) {
  PrimeConstraint c;
  c.exclude_two = j.at("exclude_two").get<bool>();
  c.coprime_to_rank = j.at("coprime_to_rank").get<bool>();
  c.equals_rank = j.at("equals_rank").get<bool>();
  return c;
}

Locality decode_locality(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "integral") return Locality::integral();
  if (kind == "p_local") return Locality::p_local(decode_constraint(j.at("constraint")));
  throw UsageError("unknown locality kind: " + kind);
}

Atom decode_atom(const json& j) {
  if (j.is_string()) return parse_basic_atom(j.get<std::string>());
  const json& res = j.at("residual");
  ResidualAtom atom;
  atom.family = parse_family(res.at("family").get<std::string>());
  atom.flavor = parse_flavor(res.at("flavor").get<std::string>());
  atom.surface = decode_surface(res.at("surface"));
  atom.cls = decode_class(res.at("class"), atom.family);
  return atom;
}

Factor decode_factor(const json& j) {
  Factor f;
  f.atom = decode_atom(j.at("atom"));
  f.loops = j.at("loops").get<int>();
  f.mult = j.at("mult").get<int>();
  f.locality = decode_locality(j.at("locality"));
  return f;
}

RuleApplication decode_rule(const json& j) {
  RuleApplication rule;
  rule.rule = j.at("rule").get<std::string>();
  for (const json& c : j.at("conditions"))
    rule.conditions_checked.emplace_back(c.at(0).get<std::string>(), c.at(1).get<bool>());
  return rule;
}

SpaceExpr decode_expr(const json& j) {
  SpaceExpr e = SpaceExpr::point(parse_family(j.at("family").get<std::string>()),
                                 j.at("rank").get<int>());
  for (const json& f : j.at("factors")) e.factors.push_back(decode_factor(f));
  if (j.contains("rules"))
    for (const json& r : j.at("rules")) e.provenance.push_back(decode_rule(r));
  e.normalize();
  return e;
}

GroupAnswer decode_answer(const json& j) {
  GroupAnswer a;
  for (const json& t : j.at("terms"))
    a.terms.emplace_back(decode_group(t.at("group")), decode_locality(t.at("locality")));
  for (const json& u : j.at("unknowns"))
    a.unknowns.push_back({u.at("atom").get<std::string>(), u.at("degree").get<int>(),
                          parse_reason(u.at("reason").get<std::string>())});
  a.normalize();
  return a;
}

}  // namespace gauge::jsonio
