#include "gauge/groups.hpp"

#include <algorithm>
#include <tuple>
#include <map>
#include <sstream>

namespace gauge {

std::int64_t TorsionPiece::order() const {
  std::int64_t q = 1;
  for (int i = 0; i < exponent; ++i) q *= prime;
  return q;
}

FgAbGroup FgAbGroup::zero() { return {}; }

FgAbGroup FgAbGroup::free(int rank) {
  if (rank < 0) throw UsageError("free rank must be non-negative");
  FgAbGroup g;
  g.free_rank = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(std::int64_t q) {
  if (q <= 0) throw UsageError("cyclic order must be positive (free summands go through free_rank)");
  FgAbGroup g;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    g.torsion.push_back({p, e});
  }
  if (q > 1) g.torsion.push_back({q, 1});
  g.normalize();
  return g;
}

bool FgAbGroup::is_trivial() const { return free_rank == 0 && torsion.empty(); }

void FgAbGroup::normalize() { std::sort(torsion.begin(), torsion.end()); }

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  FgAbGroup out;
  out.free_rank = a.free_rank + b.free_rank;
  out.torsion = a.torsion;
  out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
  out.normalize();
  return out;
}

FgAbGroup direct_power(const FgAbGroup& g, int k) {
  if (k < 0) throw UsageError("direct power requires a non-negative multiplicity");
  FgAbGroup out;
  out.free_rank = g.free_rank * k;
  out.torsion.reserve(g.torsion.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    out.torsion.insert(out.torsion.end(), g.torsion.begin(), g.torsion.end());
  out.normalize();
  return out;
}

FgAbGroup from_invariant_factors(const std::vector<std::int64_t>& factors, int free_rank) {
  FgAbGroup out = FgAbGroup::free(free_rank);
  for (std::int64_t f : factors) {
    if (f == 0) throw UsageError("invariant factor 0 is not allowed; use free_rank for free summands");
    if (f < 0) throw UsageError("invariant factors must be positive");
    out = direct_sum(out, FgAbGroup::cyclic(f));
  }
  return out;
}

FgAbGroup localize(const FgAbGroup& g, std::int64_t p) {
  if (p < 2) throw UsageError("localization prime must be at least 2");
  FgAbGroup out = FgAbGroup::free(g.free_rank);
  for (const TorsionPiece& t : g.torsion)
    if (t.prime == p) out.torsion.push_back(t);
  out.normalize();
  return out;
}

std::string render(const FgAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " x ";
    first = false;
  };
  if (g.free_rank > 0) {
    sep();
    os << "Z";
    if (g.free_rank > 1) os << "^" << g.free_rank;
  }
  for (const TorsionPiece& t : g.torsion) {
    sep();
    os << "Z/" << t.order();
  }
  return os.str();
}

std::string render_collapsed(const FgAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& base, int count) {
    if (!first) os << " x ";
    first = false;
    os << base;
    if (count > 1) os << "^" << count;
  };
  if (g.free_rank > 0) emit("Z", g.free_rank);
  for (std::size_t i = 0; i < g.torsion.size();) {
    std::size_t j = i;
    while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
    emit("Z/" + std::to_string(g.torsion[i].order()), static_cast<int>(j - i));
    i = j;
  }
  return os.str();
}

PrimeConstraint PrimeConstraint::merged_with(const PrimeConstraint& other) const {
  PrimeConstraint out;
  out.exclude_two = exclude_two || other.exclude_two;
  out.coprime_to_rank = coprime_to_rank || other.coprime_to_rank;
  out.equals_rank = equals_rank || other.equals_rank;
  if (out.coprime_to_rank && out.equals_rank)
    throw UsageError("inconsistent prime constraints: p coprime to the rank and p equal to the rank");
  return out;
}

Locality Locality::integral() { return {}; }

Locality Locality::p_local(PrimeConstraint c) {
  Locality loc;
  loc.kind = Kind::PLocal;
  loc.constraint = c;
  return loc;
}

void GroupAnswer::add(const FgAbGroup& g, const Locality& loc) {
  for (auto& [group, locality] : terms) {
    if (locality == loc) {
      group = direct_sum(group, g);
      return;
    }
  }
  terms.emplace_back(g, loc);
}

void GroupAnswer::add_unknown(UnknownSummand u) { unknowns.push_back(std::move(u)); }

void GroupAnswer::normalize() {
  // Merge terms sharing a locality, then sort: integral first, p-local by
  // constraint.  Trivial p-local terms are deliberately retained.
  std::vector<std::pair<FgAbGroup, Locality>> merged;
  for (auto& [group, locality] : terms) {
    bool found = false;
    for (auto& [mg, ml] : merged) {
      if (ml == locality) {
        mg = direct_sum(mg, group);
        found = true;
        break;
      }
    }
    if (!found) merged.emplace_back(group, locality);
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  terms = std::move(merged);
  std::sort(unknowns.begin(), unknowns.end(), [](const UnknownSummand& a, const UnknownSummand& b) {
    return std::tie(a.degree, a.atom, a.reason) < std::tie(b.degree, b.atom, b.reason);
  });
}

bool GroupAnswer::is_trivial() const {
  if (!unknowns.empty()) return false;
  for (const auto& [group, locality] : terms)
    if (!group.is_trivial()) return false;
  return true;
}

FgAbGroup GroupAnswer::integral_part() const {
  FgAbGroup out;
  for (const auto& [group, locality] : terms)
    if (locality.is_integral()) out = direct_sum(out, group);
  return out;
}

FgAbGroup GroupAnswer::p_local_part() const {
  FgAbGroup out;
  for (const auto& [group, locality] : terms)
    if (!locality.is_integral()) out = direct_sum(out, group);
  return out;
}

std::string describe(UnknownReason r) {
  switch (r) {
    case UnknownReason::NoIntegralData: return "no integral data";
    case UnknownReason::OutOfStableRange: return "out of stable range";
    case UnknownReason::ConditionsUnsatisfied: return "conditions unsatisfied";
  }
  return "unknown";
}

std::string render(const PrimeConstraint& c, bool quaternionic) {
  std::vector<std::string> parts;
  if (c.exclude_two) parts.emplace_back("p≠2");
  if (c.coprime_to_rank) parts.emplace_back(quaternionic ? "p∤2n" : "p∤n");
  if (c.equals_rank) parts.emplace_back("p=n");
  if (parts.empty()) return "any p";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

std::string render(const GroupAnswer& a, bool quaternionic) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (const auto& [group, locality] : a.terms) {
    sep();
    if (locality.is_integral()) {
      os << render_collapsed(group);
    } else {
      os << "(" << render_collapsed(group) << ")_{" << render(locality.constraint, quaternionic)
         << "}";
    }
  }
  for (const UnknownSummand& u : a.unknowns) {
    sep();
    os << "? pi_" << u.degree << "(" << u.atom << ") [" << describe(u.reason) << "]";
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gauge
