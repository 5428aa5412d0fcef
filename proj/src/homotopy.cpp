#include "gauge/homotopy.hpp"

namespace gauge {

namespace {

FgAbGroup Z() { return FgAbGroup::free(1); }
FgAbGroup Z2() { return FgAbGroup::cyclic(2); }
FgAbGroup trivial() { return FgAbGroup::zero(); }

AtomPiTable make_table(BasicAtom atom, int period, std::array<FgAbGroup, 8> entries,
                       FgAbGroup pi0) {
  AtomPiTable t;
  t.atom = atom;
  t.period = period;
  t.entries = std::move(entries);
  t.pi0 = std::move(pi0);
  return t;
}

}  // namespace

const AtomPiTable& atom_table(BasicAtom a) {
  // Degree classes are listed as entries[d % 8] (period-2 U repeats its two
  // values); the separate pi0 field covers the groups whose component group
  // differs from the degree-8 class.
  static const AtomPiTable u = make_table(
      BasicAtom::U, 2, {trivial(), Z(), trivial(), Z(), trivial(), Z(), trivial(), Z()},
      trivial());
  static const AtomPiTable o = make_table(
      BasicAtom::O, 8, {Z2(), Z2(), trivial(), Z(), trivial(), trivial(), trivial(), Z()}, Z2());
  static const AtomPiTable so = make_table(
      BasicAtom::SO, 8, {Z2(), Z2(), trivial(), Z(), trivial(), trivial(), trivial(), Z()},
      trivial());
  static const AtomPiTable sp = make_table(
      BasicAtom::Sp, 8, {trivial(), trivial(), trivial(), Z(), Z2(), Z2(), trivial(), Z()},
      trivial());
  static const AtomPiTable umodo = make_table(
      BasicAtom::UmodO, 8, {trivial(), Z(), Z2(), Z2(), trivial(), Z(), trivial(), trivial()},
      trivial());
  static const AtomPiTable umodso = make_table(
      BasicAtom::UmodSO, 8, {trivial(), Z(), Z2(), Z2(), trivial(), Z(), trivial(), trivial()},
      trivial());
  static const AtomPiTable umodsp = make_table(
      BasicAtom::UmodSp, 8, {trivial(), Z(), trivial(), trivial(), trivial(), Z(), Z2(), Z2()},
      trivial());
  static const AtomPiTable circle = make_table(
      BasicAtom::Circle, 0, {trivial(), Z(), trivial(), trivial(), trivial(), trivial(), trivial(), trivial()},
      trivial());
  switch (a) {
    case BasicAtom::U: return u;
    case BasicAtom::O: return o;
    case BasicAtom::SO: return so;
    case BasicAtom::Sp: return sp;
    case BasicAtom::UmodO: return umodo;
    case BasicAtom::UmodSO: return umodso;
    case BasicAtom::UmodSp: return umodsp;
    case BasicAtom::Circle: return circle;
  }
  return u;  // unreachable
}

FgAbGroup stable_pi(BasicAtom a, int d) {
  if (d < 0) throw UsageError("homotopy degree must be non-negative");
  const AtomPiTable& t = atom_table(a);
  if (d == 0) return t.pi0;
  if (t.period == 0) return d == 1 ? t.entries[1] : trivial();
  return t.entries[d % 8];
}

bool within_stable_bound(Family family, int rank, int degree) {
  if (family == Family::Real) return rank > degree + 2;
  // Quaternionic: 2n > (i+1)/4 with rank the unitary rank 2n.
  return 4 * static_cast<long long>(rank) > degree + 1;
}

std::string stable_bound_text(Family family) {
  return family == Family::Real ? "n > i+2" : "2n > (i+1)/4";
}

std::variant<FgAbGroup, PiRangeError> atom_pi(BasicAtom a, int degree, int rank, Family family) {
  if (degree < 0) throw UsageError("homotopy degree must be non-negative");
  if (rank < 1) throw UsageError("rank must be positive");
  if (!within_stable_bound(family, rank, degree))
    return PiRangeError{stable_bound_text(family)};
  return stable_pi(a, degree);
}

FgAbGroup residual_pi0(const ResidualAtom& res, int rank) {
  if (res.family == Family::Real && rank <= 2)
    throw UnsupportedQuery("component data requires rank n > 2");
  const SurfaceType t = res.surface;
  if (res.flavor == Flavor::Unpointed) {
    // Component counts of the full gauge group.
    if (res.family == Family::Real)
      return direct_sum(FgAbGroup::free(t.g), direct_power(Z2(), t.r + 1));
    return direct_sum(FgAbGroup::free(t.g), direct_power(Z2(), t.a));
  }
  if (res.flavor == Flavor::SinglePointed) {
    if (res.family == Family::Real) {
      if (t == SurfaceType::make(0, 0, 1)) return Z();
      if (t == SurfaceType::make(1, 0, 1)) return FgAbGroup::free(2);
      if (t == SurfaceType::make(1, 1, 1)) return direct_sum(Z(), Z2());
    } else {
      if (t == SurfaceType::make(0, 0, 1)) return Z();
      if (t == SurfaceType::make(1, 0, 1)) return FgAbGroup::free(2);
      if (t == SurfaceType::make(1, 1, 1)) return Z();
    }
  }
  throw UnsupportedQuery("no component data for residual " + render(Atom{res}));
}

GroupAnswer eval_pi(const SpaceExpr& expr, int degree, const LocalityRequest& req,
                    bool enforce_bound) {
  if (degree < 0) throw UsageError("homotopy degree must be non-negative");
  GroupAnswer ans;
  const bool in_bound = within_stable_bound(expr.family, expr.rank, degree);
  for (const Factor& f : expr.factors) {
    const int d = degree + f.loops;
    if (const BasicAtom* atom = std::get_if<BasicAtom>(&f.atom)) {
      if (enforce_bound && !in_bound) {
        ans.add_unknown({render(f.atom), d, UnknownReason::OutOfStableRange});
        continue;
      }
      ans.add(direct_power(stable_pi(*atom, d), f.mult), f.locality);
      continue;
    }
    const ResidualAtom& res = std::get<ResidualAtom>(f.atom);
    if (d == 0) {
      if (res.family == Family::Real && expr.rank <= 2) {
        ans.add_unknown({render(f.atom), d, UnknownReason::OutOfStableRange});
      } else {
        try {
          ans.add(direct_power(residual_pi0(res, expr.rank), f.mult), f.locality);
        } catch (const UnsupportedQuery&) {
          // Pointed residual over a non-minimal type: its component group
          // is not tabulated.
          ans.add_unknown({render(f.atom), d, UnknownReason::ConditionsUnsatisfied});
        }
      }
      continue;
    }
    ans.add_unknown({render(f.atom), d,
                     req.kind == LocalityRequest::Kind::Integral
                         ? UnknownReason::NoIntegralData
                         : UnknownReason::ConditionsUnsatisfied});
  }
  ans.normalize();
  return ans;
}

GroupAnswer pi(const GaugeGroupId& id, int degree, const LocalityRequest& req) {
  return eval_pi(decompose(id, req), degree, req, true);
}

}  // namespace gauge
