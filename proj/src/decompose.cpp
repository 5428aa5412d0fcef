#include "gauge/decompose.hpp"

#include <tuple>
#include <numeric>
#include <optional>

namespace gauge {

LocalityRequest LocalityRequest::integral() { return {}; }

LocalityRequest LocalityRequest::at_prime(std::int64_t p) {
  if (!is_prime(p)) throw UsageError("localization requires a prime, got " + std::to_string(p));
  LocalityRequest req;
  req.kind = Kind::AtPrime;
  req.p = p;
  return req;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

/// A gauge group still awaiting reduction.
struct Node {
  Flavor flavor = Flavor::MultiPointed;
  SurfaceType t;
  BundleClass cls;
};

/// Context of a derivation path: disengaged while working integrally,
/// engaged (with the accumulated side conditions) inside a p-local rule.
using Context = std::optional<PrimeConstraint>;

Locality locality_of(const Context& ctx) {
  return ctx ? Locality::p_local(*ctx) : Locality::integral();
}

int w_total(const RealClass& rc) {
  return std::accumulate(rc.w.begin(), rc.w.end(), 0) % 2;
}

/// True when every restriction class beyond the first vanishes.
bool tail_w_vanishes(const RealClass& rc) {
  for (std::size_t i = 1; i < rc.w.size(); ++i)
    if (rc.w[i] != 0) return false;
  return true;
}

class Engine {
 public:
  Engine(Family family, int rank, LocalityRequest req)
      : family_(family), rank_(rank), req_(req) {
    out_ = SpaceExpr::point(family, rank);
  }

  SpaceExpr run(Node root) {
    std::optional<Node> residual = integral_reduce(std::move(root), std::nullopt);
    Context ctx;
    if (residual && req_.kind == LocalityRequest::Kind::AtPrime)
      std::tie(residual, ctx) = p_expand(*std::move(residual), std::nullopt);
    if (residual) {
      ResidualAtom atom{family_, residual->flavor, residual->t, residual->cls};
      out_.push({atom, 0, 1, locality_of(ctx)});
    }
    out_.normalize();
    return out_;
  }

 private:
  using Conditions = std::vector<std::pair<std::string, bool>>;

  void record(std::string rule, Conditions conds) {
    out_.provenance.push_back({std::move(rule), std::move(conds)});
  }

  void emit(BasicAtom atom, int loops, int mult, const Context& ctx) {
    if (mult <= 0) return;
    out_.push({atom, loops, mult, locality_of(ctx)});
  }

  /// The p of an AtPrime request.
  std::int64_t p() const { return req_.p; }

  bool rank_odd() const { return rank_ % 2 == 1; }
  bool p_coprime_to_rank() const { return rank_ % p() != 0; }

  static Context extend(const Context& ctx, PrimeConstraint add) {
    return ctx ? ctx->merged_with(add) : add;
  }

  // ---- integral rules -------------------------------------------------

  std::optional<Node> integral_reduce(Node node, const Context& ctx) {
    // One marked point makes the multi-pointed and single-pointed gauge
    // groups literally equal; normalize the flavor so residuals are
    // always reported single-pointed.
    if (node.flavor == Flavor::MultiPointed && node.t.r + node.t.a <= 1)
      node.flavor = Flavor::SinglePointed;

    if (family_ == Family::Real) {
      switch (node.flavor) {
        case Flavor::MultiPointed: return real_multi(std::move(node), ctx);
        case Flavor::SinglePointed:
          return node.t.r + node.t.a <= 1 ? real_multi(std::move(node), ctx)
                                          : real_single(std::move(node), ctx);
        case Flavor::Unpointed: return real_unpointed(std::move(node), ctx);
      }
    } else {
      switch (node.flavor) {
        case Flavor::MultiPointed: return quat_multi(std::move(node), ctx);
        case Flavor::SinglePointed:
          return node.t.r + node.t.a <= 1 ? quat_multi(std::move(node), ctx)
                                          : quat_single(std::move(node), ctx);
        case Flavor::Unpointed: return quat_unpointed(std::move(node), ctx);
      }
    }
    return node;  // unreachable
  }

  /// Multi-pointed rows (also cover single-pointed groups with r + a = 1).
  std::optional<Node> real_multi(Node node, const Context& ctx) {
    const SurfaceType t = node.t;
    if (t.r == 0) {
      // Rows over (g,0,1): split off (OU)^g or (OU)^{g-1}.
      const bool even = t.g % 2 == 0;
      const SurfaceType target = even ? SurfaceType::make(0, 0, 1) : SurfaceType::make(1, 0, 1);
      if (t == target) return pointed_residual(target, RealClass{0, {}});
      record(even ? "ThmA-row(g,0,1)-even" : "ThmA-row(g,0,1)-odd",
             {{"r = 0, a = 1", true}, {even ? "g even" : "g odd", true}});
      emit(BasicAtom::U, 1, even ? t.g : t.g - 1, ctx);
      return pointed_residual(target, RealClass{0, {}});
    }
    if (t.a == 0) {
      record("ThmA-row(g,r,0)", {{"r >= 1, a = 0", true}});
      emit(BasicAtom::UmodO, 2, 1, ctx);
      emit(BasicAtom::U, 1, t.g, ctx);
      emit(BasicAtom::O, 1, t.r - 1, ctx);
      return std::nullopt;
    }
    const bool even = (t.g - t.r) % 2 == 0;
    record(even ? "ThmA-row(g,r,1)-even" : "ThmA-row(g,r,1)-odd",
           {{"r >= 1, a = 1", true}, {even ? "g - r even" : "g - r odd", true}});
    emit(BasicAtom::U, 1, t.g, ctx);
    emit(BasicAtom::O, 1, t.r - 1, ctx);
    return pointed_residual(SurfaceType::make(1, 1, 1), RealClass{0, {0}});
  }

  /// Single-pointed rows for r + a > 1, with the genus-only fallback.
  std::optional<Node> real_single(Node node, const Context& ctx) {
    const SurfaceType t = node.t;
    const RealClass& rc = std::get<RealClass>(node.cls);
    const bool cond_b = rank_odd() || tail_w_vanishes(rc);
    if (!cond_b) {
      // Only the unconditional genus reduction applies.
      const int gp = g_prime(t);
      if (gp > 0) {
        record("Thm2.2", {{"g' > 0", true}});
        emit(BasicAtom::U, 1, gp, ctx);
        node.t = reduced_type(t);
      }
      return node;
    }
    const Conditions base = {{"n odd or w_i = 0 for all i >= 2", true}};
    if (t.a == 0) {
      Conditions conds = base;
      conds.push_back({"r >= 2, a = 0", true});
      record("ThmB-row(g,r,0)", std::move(conds));
      emit(BasicAtom::UmodO, 2, 1, ctx);
      emit(BasicAtom::U, 1, t.g - t.r + 1, ctx);
      emit(BasicAtom::O, 1, t.r - 1, ctx);
      emit(BasicAtom::UmodO, 1, t.r - 1, ctx);
      return std::nullopt;
    }
    const bool even = (t.g - t.r) % 2 == 0;
    if (t == SurfaceType::make(1, 1, 1))
      return pointed_residual(t, RealClass{0, {0}});
    Conditions conds = base;
    conds.push_back({even ? "g - r even" : "g - r odd", true});
    record(even ? "ThmB-row(g,r,1)-even" : "ThmB-row(g,r,1)-odd", std::move(conds));
    emit(BasicAtom::U, 1, t.g - t.r, ctx);
    emit(BasicAtom::O, 1, t.r - 1, ctx);
    emit(BasicAtom::UmodO, 1, t.r - 1, ctx);
    return pointed_residual(SurfaceType::make(1, 1, 1), RealClass{0, {0}});
  }

  /// Unpointed reduction chain: genus (D.1), fixed circles (D.3), then the
  /// (2,1,1) -> (1,1,1) splitting (D.2).
  std::optional<Node> real_unpointed(Node node, const Context& ctx) {
    RealClass rc = std::get<RealClass>(node.cls);

    const int gp = g_prime(node.t);
    if (gp > 0) {
      if (node.t.a == 0) {
        record("ThmD.1-row(g,r,0)", {{"a = 0", true}, {"g' > 0", true}});
      } else {
        const bool even = (node.t.g - node.t.r) % 2 == 0;
        record(even ? "ThmD.1-row(g,r,1)-even" : "ThmD.1-row(g,r,1)-odd",
               {{"a = 1", true}, {even ? "g - r even" : "g - r odd", true}, {"g' > 0", true}});
      }
      emit(BasicAtom::U, 1, gp, ctx);
      node.t = reduced_type(node.t);
    }

    if (node.t.r >= 2) {
      if (rank_odd() || tail_w_vanishes(rc)) {
        const char* row = node.t.a == 0                ? "ThmD.3-row(r-1,r,0)"
                          : node.t.g == node.t.r       ? "ThmD.3-row(r,r,1)"
                                                       : "ThmD.3-row(r+1,r,1)";
        record(row, {{"r >= 1", true}, {"n odd or w_i = 0 for all i >= 2", true}});
        emit(BasicAtom::O, 1, node.t.r - 1, ctx);
        emit(BasicAtom::UmodO, 1, node.t.r - 1, ctx);
        node.t = SurfaceType::make(node.t.a == 0 ? 0 : node.t.g - node.t.r + 1, 1, 1 * node.t.a);
        rc = RealClass{rc.c, {w_total(rc)}};
        node.cls = rc;
      } else {
        return node;  // blocked residual over the reduced type
      }
    }

    if (node.t == SurfaceType::make(2, 1, 1)) {
      record("ThmD.2", {{"type (2,1,1)", true}});
      emit(BasicAtom::U, 1, 1, ctx);
      node.t = SurfaceType::make(1, 1, 1);
    }
    return node;
  }

  std::optional<Node> quat_multi(Node node, const Context& ctx) {
    const SurfaceType t = node.t;
    if (t.r == 0) {
      const bool even = t.g % 2 == 0;
      const SurfaceType target = even ? SurfaceType::make(0, 0, 1) : SurfaceType::make(1, 0, 1);
      if (t == target) return pointed_residual(target, QuatClass{0});
      record(even ? "ThmQA-row(g,0,1)-even" : "ThmQA-row(g,0,1)-odd",
             {{"r = 0, a = 1", true}, {even ? "g even" : "g odd", true}});
      emit(BasicAtom::U, 1, even ? t.g : t.g - 1, ctx);
      return pointed_residual(target, QuatClass{0});
    }
    if (t.a == 0) {
      record("ThmQA-row(g,r,0)", {{"r >= 1, a = 0", true}});
      emit(BasicAtom::UmodSp, 2, 1, ctx);
      emit(BasicAtom::U, 1, t.g, ctx);
      emit(BasicAtom::Sp, 1, t.r - 1, ctx);
      return std::nullopt;
    }
    const bool even = (t.g - t.r) % 2 == 0;
    record(even ? "ThmQA-row(g,r,1)-even" : "ThmQA-row(g,r,1)-odd",
           {{"r >= 1, a = 1", true}, {even ? "g - r even" : "g - r odd", true}});
    emit(BasicAtom::U, 1, t.g, ctx);
    emit(BasicAtom::Sp, 1, t.r - 1, ctx);
    return pointed_residual(SurfaceType::make(1, 1, 1), QuatClass{0});
  }

  std::optional<Node> quat_single(Node node, const Context& ctx) {
    const SurfaceType t = node.t;
    if (t.a == 0) {
      record("ThmQB-row(g,r,0)", {{"r >= 2, a = 0", true}});
      emit(BasicAtom::UmodSp, 2, 1, ctx);
      emit(BasicAtom::U, 1, t.g - t.r + 1, ctx);
      emit(BasicAtom::Sp, 1, t.r - 1, ctx);
      emit(BasicAtom::UmodSp, 1, t.r - 1, ctx);
      return std::nullopt;
    }
    if (t == SurfaceType::make(1, 1, 1)) return pointed_residual(t, QuatClass{0});
    record("ThmQB-row(g,r,1)", {{"r >= 1, a = 1", true}});
    emit(BasicAtom::U, 1, t.g - t.r, ctx);
    emit(BasicAtom::Sp, 1, t.r - 1, ctx);
    emit(BasicAtom::UmodSp, 1, t.r - 1, ctx);
    return pointed_residual(SurfaceType::make(1, 1, 1), QuatClass{0});
  }

  std::optional<Node> quat_unpointed(Node node, const Context& ctx) {
    const SurfaceType t = node.t;
    const QuatClass qc = std::get<QuatClass>(node.cls);
    if (t.r == 0) {
      const bool even = t.g % 2 == 0;
      const SurfaceType target = even ? SurfaceType::make(0, 0, 1) : SurfaceType::make(1, 0, 1);
      if (t == target) return node;
      record(even ? "ThmQD-row(g,0,1)-even" : "ThmQD-row(g,0,1)-odd",
             {{"r = 0, a = 1", true}, {even ? "g even" : "g odd", true}});
      emit(BasicAtom::U, 1, even ? t.g : t.g - 1, ctx);
      node.t = target;
      return node;
    }
    const SurfaceType target = SurfaceType::make(t.a == 0 ? 0 : 1, 1, t.a);
    const int omega_u = t.a == 0 ? t.g - t.r + 1 : t.g - t.r;
    if (t == target) return node;
    record(t.a == 0 ? "ThmQD-row(g,r,0)" : "ThmQD-row(g,r,1)",
           {{t.a == 0 ? "r >= 1, a = 0" : "r >= 1, a = 1", true}});
    emit(BasicAtom::Sp, 1, t.r - 1, ctx);
    emit(BasicAtom::UmodSp, 1, t.r - 1, ctx);
    emit(BasicAtom::U, 1, omega_u, ctx);
    node.t = target;
    node.cls = qc;
    return node;
  }

  std::optional<Node> pointed_residual(const SurfaceType& t, BundleClass cls) {
    Node node;
    node.flavor = Flavor::SinglePointed;
    node.t = t;
    node.cls = std::move(cls);
    return node;
  }

  // ---- p-local rules ---------------------------------------------------

  std::pair<std::optional<Node>, Context> p_expand(Node node, Context ctx) {
    for (;;) {
      std::optional<std::pair<std::optional<Node>, Context>> step =
          family_ == Family::Real ? real_p_step(node, ctx) : quat_p_step(node, ctx);
      if (!step) return {std::move(node), ctx};
      if (!step->first) return {std::nullopt, step->second};
      node = *std::move(step->first);
      ctx = step->second;
    }
  }

  /// One p-local rewrite of a Real residual, or nullopt when none applies.
  std::optional<std::pair<std::optional<Node>, Context>> real_p_step(const Node& node,
                                                                     const Context& ctx) {
    const SurfaceType t = node.t;
    const RealClass& rc = std::get<RealClass>(node.cls);
    if (node.flavor == Flavor::SinglePointed) {
      if (t == SurfaceType::make(1, 1, 1) && p() != 2) {
        const Context next = extend(ctx, {.exclude_two = true});
        record("Thm2.17", {{"p != 2", true}});
        emit(BasicAtom::O, 1, 1, next);
        Node rest;
        rest.flavor = Flavor::SinglePointed;
        rest.t = SurfaceType::make(0, 0, 1);
        rest.cls = RealClass{0, {}};
        return {{rest, next}};
      }
      if (t.r == 0 && p() != 2 && rank_odd()) {
        const Context next = extend(ctx, {.exclude_two = true});
        if (t.g == 0) {
          record("ThmC.1", {{"p != 2", true}, {"n odd", true}});
          emit(BasicAtom::UmodO, 2, 1, next);
          emit(BasicAtom::UmodO, 1, 1, next);
        } else {
          record("ThmC.2", {{"p != 2", true}, {"n odd", true}});
          emit(BasicAtom::UmodO, 2, 1, next);
          emit(BasicAtom::UmodO, 1, 1, next);
          emit(BasicAtom::U, 1, 1, next);
        }
        return {{std::nullopt, next}};
      }
      return std::nullopt;
    }
    // Unpointed residuals.
    if (t.r == 1 && rc.w[0] == 0 && (p_coprime_to_rank() || rank_ == p())) {
      const bool coprime = p_coprime_to_rank();
      const Context next =
          extend(ctx, coprime ? PrimeConstraint{.coprime_to_rank = true}
                              : PrimeConstraint{.equals_rank = true});
      record(coprime ? "ThmE.1a" : "ThmE.2a",
             {{"r = 1", true},
              {"w_1 = 0", true},
              {coprime ? "p does not divide n" : "n = p", true}});
      emit(BasicAtom::O, 0, 1, next);
      Node rest;
      rest.flavor = Flavor::SinglePointed;
      rest.t = t;
      rest.cls = RealClass{rc.c, {0}};
      return {{integral_reduce(std::move(rest), next), next}};
    }
    if (t.r == 0 && p() != 2 && rank_odd() && (p_coprime_to_rank() || rank_ == p())) {
      const bool coprime = p_coprime_to_rank();
      PrimeConstraint add{.exclude_two = true};
      if (coprime)
        add.coprime_to_rank = true;
      else
        add.equals_rank = true;
      const Context next = extend(ctx, add);
      Conditions conds = {{"p != 2", true},
                          {"n odd", true},
                          {coprime ? "p does not divide n" : "n = p", true}};
      if (t.g == 0) {
        record(coprime ? "ThmE.1b" : "ThmE.2b", std::move(conds));
        emit(BasicAtom::SO, 0, 1, next);
        emit(BasicAtom::UmodSO, 2, 1, next);
      } else {
        record(coprime ? "ThmE.1c" : "ThmE.2c", std::move(conds));
        emit(BasicAtom::SO, 0, 1, next);
        emit(BasicAtom::UmodSO, 2, 1, next);
        emit(BasicAtom::U, 1, 1, next);
      }
      return {{std::nullopt, next}};
    }
    return std::nullopt;
  }

  /// One p-local rewrite of a Quaternionic residual.
  std::optional<std::pair<std::optional<Node>, Context>> quat_p_step(const Node& node,
                                                                     const Context& ctx) {
    const SurfaceType t = node.t;
    if (node.flavor == Flavor::SinglePointed) {
      if (p() == 2) return std::nullopt;
      const Context next = extend(ctx, {.exclude_two = true});
      if (t == SurfaceType::make(0, 0, 1)) {
        record("ThmQC.1", {{"p != 2", true}});
        emit(BasicAtom::UmodSp, 2, 1, next);
        emit(BasicAtom::UmodSp, 1, 1, next);
        return {{std::nullopt, next}};
      }
      if (t == SurfaceType::make(1, 0, 1)) {
        record("ThmQC.2", {{"p != 2", true}});
        emit(BasicAtom::UmodSp, 2, 1, next);
        emit(BasicAtom::UmodSp, 1, 1, next);
        emit(BasicAtom::U, 1, 1, next);
        return {{std::nullopt, next}};
      }
      if (t == SurfaceType::make(1, 1, 1)) {
        record("ThmQC.3", {{"p != 2", true}});
        emit(BasicAtom::UmodSp, 2, 1, next);
        emit(BasicAtom::UmodSp, 1, 1, next);
        emit(BasicAtom::Sp, 1, 1, next);
        return {{std::nullopt, next}};
      }
      return std::nullopt;
    }
    // Unpointed residuals; the side condition p coprime to 2n is coprimality
    // to the (even) unitary rank.
    if (!p_coprime_to_rank()) return std::nullopt;
    const Context next = extend(ctx, {.coprime_to_rank = true});
    if (t.r == 1) {
      record("ThmQE.1", {{"r = 1", true}, {"p does not divide 2n", true}});
      emit(BasicAtom::Sp, 0, 1, next);
      Node rest;
      rest.flavor = Flavor::SinglePointed;
      rest.t = t;
      rest.cls = QuatClass{0};
      return {{integral_reduce(std::move(rest), next), next}};
    }
    if (t == SurfaceType::make(0, 0, 1)) {
      record("ThmQE.2", {{"p does not divide 2n", true}});
      emit(BasicAtom::Sp, 0, 1, next);
      emit(BasicAtom::UmodSp, 2, 1, next);
      return {{std::nullopt, next}};
    }
    if (t == SurfaceType::make(1, 0, 1)) {
      record("ThmQE.3", {{"p does not divide 2n", true}});
      emit(BasicAtom::Sp, 0, 1, next);
      emit(BasicAtom::UmodSp, 2, 1, next);
      emit(BasicAtom::U, 1, 1, next);
      return {{std::nullopt, next}};
    }
    return std::nullopt;
  }

  Family family_;
  int rank_;
  LocalityRequest req_;
  SpaceExpr out_;
};

}  // namespace

SpaceExpr decompose(const GaugeGroupId& id, const LocalityRequest& req) {
  GaugeGroupId canon = canonicalized(id);
  Engine engine(canon.family, canon.rank, req);
  Node root;
  root.flavor = canon.flavor;
  root.t = canon.surface;
  root.cls = canon.cls;
  return engine.run(std::move(root));
}

}  // namespace gauge
