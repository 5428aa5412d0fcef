#include "gauge/bundles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gauge {

namespace {

/// Non-negative remainder of c modulo m > 0.
std::int64_t positive_mod(std::int64_t c, std::int64_t m) {
  std::int64_t rem = c % m;
  return rem < 0 ? rem + m : rem;
}

int w_sum(const RealClass& rc) {
  return std::accumulate(rc.w.begin(), rc.w.end(), 0);
}

}  // namespace

std::string render(Family f) {
  return f == Family::Real ? "Real" : "Quaternionic";
}

std::string render(Flavor f) {
  switch (f) {
    case Flavor::Unpointed: return "Unpointed";
    case Flavor::SinglePointed: return "SinglePointed";
    case Flavor::MultiPointed: return "MultiPointed";
  }
  return "?";
}

GaugeGroupId make_real_id(Flavor flavor, const SurfaceType& t, std::int64_t c,
                          std::vector<int> w, int rank) {
  GaugeGroupId id;
  id.family = Family::Real;
  id.flavor = flavor;
  id.surface = t;
  id.cls = RealClass{c, std::move(w)};
  id.rank = rank;
  validate_id(id);
  return id;
}

GaugeGroupId make_quat_id(Flavor flavor, const SurfaceType& t, std::int64_t c, int rank) {
  GaugeGroupId id;
  id.family = Family::Quaternionic;
  id.flavor = flavor;
  id.surface = t;
  id.cls = QuatClass{c};
  id.rank = rank;
  validate_id(id);
  return id;
}

SurfaceValidity validate_class(Family family, const SurfaceType& t, const BundleClass& cls,
                               int rank) {
  if (rank < 1) return {false, "rank < 1"};
  if (family == Family::Real) {
    const RealClass* rc = std::get_if<RealClass>(&cls);
    if (!rc) return {false, "Real family requires a Real class (c; w_1,...,w_r)"};
    if (static_cast<int>(rc->w.size()) != t.r)
      return {false, "class has " + std::to_string(rc->w.size()) + " restriction classes, surface has r = " +
                         std::to_string(t.r)};
    for (int wi : rc->w)
      if (wi != 0 && wi != 1) return {false, "restriction classes must be 0 or 1"};
    if (positive_mod(rc->c - w_sum(*rc), 2) != 0)
      return {false, t.r == 0 ? "c must be even when r = 0" : "parity: c != w_1+...+w_r mod 2"};
  } else {
    const QuatClass* qc = std::get_if<QuatClass>(&cls);
    if (!qc) return {false, "Quaternionic family requires a bare Chern degree"};
    if (rank % 2 != 0) return {false, "Quaternionic rank must be even"};
    if (positive_mod(qc->c, 2) != 0) return {false, "Quaternionic Chern degree must be even"};
  }
  return {true, ""};
}

void validate_id(const GaugeGroupId& id) {
  SurfaceValidity sv = validate_surface(id.surface.g, id.surface.r, id.surface.a);
  if (!sv.valid) throw UsageError("invalid surface type: " + sv.reason);
  SurfaceValidity cv = validate_class(id.family, id.surface, id.cls, id.rank);
  if (!cv.valid) throw UsageError("invalid class: " + cv.reason);
}

CanonicalClass canonical_class(const GaugeGroupId& id) {
  validate_id(id);
  CanonicalClass out;
  out.cls = id.cls;
  auto record = [&](const char* rule) { out.justification.emplace_back(rule); };

  if (id.family == Family::Real) {
    RealClass rc = std::get<RealClass>(id.cls);
    switch (id.flavor) {
      case Flavor::MultiPointed: {
        RealClass zero;
        zero.c = 0;
        zero.w.assign(rc.w.size(), 0);
        if (!(rc == zero)) {
          rc = zero;
          record("Prop1.4");
        }
        break;
      }
      case Flavor::SinglePointed: {
        // Kill w_1 and replace c with the parity forced by the remaining w_i.
        if (!rc.w.empty()) {
          RealClass next = rc;
          next.w[0] = 0;
          next.c = positive_mod(std::accumulate(rc.w.begin() + 1, rc.w.end(), std::int64_t{0}), 2);
          if (!(next == rc)) {
            rc = next;
            record("Prop1.5");
          }
        } else {
          // r = 0: the only reduction is c ~ c' of the same parity; pointed
          // gauge groups over a fixed surface depend on c only through that
          // parity, and with c forced even this is c ~ 0.
          if (rc.c != 0) {
            rc.c = 0;
            record("Prop1.5");
          }
        }
        break;
      }
      case Flavor::Unpointed: {
        if (id.rank % 2 == 1) {
          RealClass next = rc;
          if (!next.w.empty()) {
            int s = w_sum(rc) % 2;
            next.w.assign(rc.w.size(), 0);
            next.w[0] = s;
          }
          if (!(next == rc)) {
            rc = next;
            record("Prop1.7");
          }
        }
        std::int64_t reduced = positive_mod(rc.c, 2 * id.rank);
        if (reduced != rc.c) {
          rc.c = reduced;
          record("Prop1.6");
        }
        break;
      }
    }
    out.cls = rc;
  } else {
    QuatClass qc = std::get<QuatClass>(id.cls);
    if (id.flavor == Flavor::Unpointed) {
      // rank is the unitary rank 2n, so the reduction modulus 4n is 2*rank.
      std::int64_t reduced = positive_mod(qc.c, 2 * static_cast<std::int64_t>(id.rank));
      if (reduced != qc.c) {
        qc.c = reduced;
        record("Prop1.9");
      }
    } else {
      if (qc.c != 0) {
        qc.c = 0;
        record("Prop1.8");
      }
    }
    out.cls = qc;
  }
  return out;
}

GaugeGroupId canonicalized(const GaugeGroupId& id) {
  GaugeGroupId out = id;
  out.cls = canonical_class(id).cls;
  return out;
}

Equivalence known_equivalent(const GaugeGroupId& a, const GaugeGroupId& b) {
  if (a.family != b.family || a.flavor != b.flavor || a.surface != b.surface || a.rank != b.rank)
    throw UsageError("equivalence queries require matching family, flavor, surface, and rank");
  CanonicalClass ca = canonical_class(a);
  CanonicalClass cb = canonical_class(b);
  if (!(ca.cls == cb.cls)) return {false, {}};
  Equivalence eq;
  eq.equivalent = true;
  eq.via = ca.justification;
  for (const std::string& rule : cb.justification)
    if (std::find(eq.via.begin(), eq.via.end(), rule) == eq.via.end()) eq.via.push_back(rule);
  return eq;
}

std::string render(const BundleClass& cls) {
  if (const RealClass* rc = std::get_if<RealClass>(&cls)) {
    if (rc->w.empty()) return std::to_string(rc->c);
    std::ostringstream os;
    os << "(" << rc->c;
    for (int wi : rc->w) os << "," << wi;
    os << ")";
    return os.str();
  }
  return std::to_string(std::get<QuatClass>(cls).c);
}

}  // namespace gauge
