#include "gauge/spaces.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace gauge {

std::string render(BasicAtom a) {
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

bool operator==(const Atom& a, const Atom& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<BasicAtom>(a))
    return std::get<BasicAtom>(a) == std::get<BasicAtom>(b);
  return std::get<ResidualAtom>(a) == std::get<ResidualAtom>(b);
}

namespace {

std::tuple<int, int, std::int64_t, std::string> residual_key(const ResidualAtom& r) {
  // Order residuals by flavor, surface, then rendered class (classes have
  // no natural order across the Real/Quaternionic variants).
  return {static_cast<int>(r.flavor),
          r.surface.g * 16 + r.surface.r * 4 + r.surface.a,
          static_cast<std::int64_t>(r.family),
          render(r.cls)};
}

}  // namespace

bool atom_less(const Atom& a, const Atom& b) {
  const bool a_res = std::holds_alternative<ResidualAtom>(a);
  const bool b_res = std::holds_alternative<ResidualAtom>(b);
  if (a_res != b_res) return a_res;  // residuals first
  if (a_res) return residual_key(std::get<ResidualAtom>(a)) < residual_key(std::get<ResidualAtom>(b));
  return static_cast<int>(std::get<BasicAtom>(a)) < static_cast<int>(std::get<BasicAtom>(b));
}

std::string render(const Atom& a) {
  if (const BasicAtom* basic = std::get_if<BasicAtom>(&a)) return render(*basic);
  const ResidualAtom& res = std::get<ResidualAtom>(a);
  std::ostringstream os;
  os << "G";
  if (res.family == Family::Quaternionic) os << "_Q";
  if (res.flavor == Flavor::SinglePointed) os << "*";
  os << "(" << render(res.surface) << ";" << render(res.cls) << ")";
  return os.str();
}

SpaceExpr SpaceExpr::point(Family family, int rank) {
  SpaceExpr e;
  e.family = family;
  e.rank = rank;
  return e;
}

void SpaceExpr::push(Factor f) {
  if (f.mult < 0) throw UsageError("factor multiplicity must be non-negative");
  if (f.loops < 0) throw UsageError("loop degree must be non-negative");
  if (f.mult == 0) return;  // empty products contribute nothing
  factors.push_back(std::move(f));
  normalize();
}

void SpaceExpr::normalize() {
  std::vector<Factor> merged;
  for (const Factor& f : factors) {
    bool found = false;
    for (Factor& m : merged) {
      if (m.atom == f.atom && m.loops == f.loops && m.locality == f.locality) {
        m.mult += f.mult;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(f);
  }
  std::sort(merged.begin(), merged.end(), [](const Factor& a, const Factor& b) {
    const bool a_res = std::holds_alternative<ResidualAtom>(a.atom);
    const bool b_res = std::holds_alternative<ResidualAtom>(b.atom);
    if (a_res != b_res) return a_res;
    if (a.loops != b.loops) return a.loops > b.loops;
    if (!(a.atom == b.atom)) return atom_less(a.atom, b.atom);
    return a.locality < b.locality;
  });
  factors = std::move(merged);
}

bool SpaceExpr::same_factors(const SpaceExpr& other) const {
  return family == other.family && rank == other.rank && factors == other.factors;
}

SpaceExpr product(const SpaceExpr& a, const SpaceExpr& b) {
  if (a.family != b.family || a.rank != b.rank)
    throw UsageError("product requires matching ambient family and rank");
  SpaceExpr out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  out.provenance.insert(out.provenance.end(), b.provenance.begin(), b.provenance.end());
  out.normalize();
  return out;
}

SpaceExpr loop(const SpaceExpr& e) {
  SpaceExpr out = e;
  for (Factor& f : out.factors) ++f.loops;
  out.normalize();
  return out;
}

std::string render(const SpaceExpr& e) {
  if (e.factors.empty()) return "point";
  std::ostringstream os;
  bool first = true;
  for (const Factor& f : e.factors) {
    if (!first) os << " x ";
    first = false;
    const std::string atom = render(f.atom);
    if (f.loops == 0) {
      os << atom;
      if (f.mult > 1) os << "^" << f.mult;
    } else if (f.loops == 1) {
      // Single loops always print their multiplicity: "(OU)^3", "(OO)^1".
      const bool composite = atom.find('/') != std::string::npos;
      os << "(O" << (composite ? "(" + atom + ")" : atom) << ")^" << f.mult;
    } else {
      os << "O^" << f.loops << "(" << atom << ")";
      if (f.mult > 1) os << "^" << f.mult;
    }
    if (!f.locality.is_integral())
      os << " (p-local: " << render(f.locality.constraint, e.family == Family::Quaternionic)
         << ")";
  }
  return os.str();
}

}  // namespace gauge
