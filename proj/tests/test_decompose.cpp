#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "gauge/decompose.hpp"

using namespace gauge;

namespace {

const Locality kInt = Locality::integral();
const Locality kOdd = Locality::p_local(PrimeConstraint{true, false, false});
const Locality kCop = Locality::p_local(PrimeConstraint{false, true, false});
const Locality kOddCop = Locality::p_local(PrimeConstraint{true, true, false});

GaugeGroupId real_id(Flavor flavor, int g, int r, int a, std::int64_t c, std::vector<int> w,
                     int rank) {
  return make_real_id(flavor, SurfaceType::make(g, r, a), c, std::move(w), rank);
}

GaugeGroupId quat_id(Flavor flavor, int g, int r, int a, std::int64_t c, int rank) {
  return make_quat_id(flavor, SurfaceType::make(g, r, a), c, rank);
}

Atom real_res(Flavor flavor, int g, int r, int a, std::int64_t c, std::vector<int> w) {
  ResidualAtom res;
  res.family = Family::Real;
  res.flavor = flavor;
  res.surface = SurfaceType::make(g, r, a);
  res.cls = RealClass{c, std::move(w)};
  return res;
}

Atom quat_res(Flavor flavor, int g, int r, int a, std::int64_t c) {
  ResidualAtom res;
  res.family = Family::Quaternionic;
  res.flavor = flavor;
  res.surface = SurfaceType::make(g, r, a);
  res.cls = QuatClass{c};
  return res;
}

SpaceExpr expected(Family family, int rank, std::vector<Factor> factors) {
  SpaceExpr e = SpaceExpr::point(family, rank);
  for (Factor& f : factors) e.push(std::move(f));
  return e;
}

std::vector<std::string> rules_of(const SpaceExpr& e) {
  std::vector<std::string> out;
  for (const RuleApplication& r : e.provenance) out.push_back(r.rule);
  return out;
}

int omega_u_mult(const SpaceExpr& e) {
  int total = 0;
  for (const Factor& f : e.factors)
    if (f.atom == Atom{BasicAtom::U} && f.loops == 1) total += f.mult;
  return total;
}

}  // namespace

TEST_CASE("multi-pointed rows over an orientable quotient") {
  const SpaceExpr e = decompose(real_id(Flavor::MultiPointed, 3, 2, 0, 0, {0, 0}, 5));
  CHECK(render(e) == "O^2(U/O) x (OU)^3 x (OO)^1");
  CHECK(rules_of(e) == std::vector<std::string>{"ThmA-row(g,r,0)"});
  CHECK(e.same_factors(expected(Family::Real, 5,
                                {{BasicAtom::UmodO, 2, 1, kInt},
                                 {BasicAtom::U, 1, 3, kInt},
                                 {BasicAtom::O, 1, 1, kInt}})));
  // The class never matters for multi-pointed groups.
  const SpaceExpr f = decompose(real_id(Flavor::MultiPointed, 3, 2, 0, 3, {1, 0}, 5));
  CHECK(e.same_factors(f));
}

TEST_CASE("multi-pointed rows with no fixed circles leave a pointed residual") {
  const SpaceExpr even = decompose(real_id(Flavor::MultiPointed, 2, 0, 1, 0, {}, 5));
  CHECK(rules_of(even) == std::vector<std::string>{"ThmA-row(g,0,1)-even"});
  CHECK(even.same_factors(expected(Family::Real, 5,
                                   {{real_res(Flavor::SinglePointed, 0, 0, 1, 0, {}), 0, 1, kInt},
                                    {BasicAtom::U, 1, 2, kInt}})));
  const SpaceExpr odd = decompose(real_id(Flavor::MultiPointed, 3, 0, 1, 0, {}, 5));
  CHECK(rules_of(odd) == std::vector<std::string>{"ThmA-row(g,0,1)-odd"});
  CHECK(odd.same_factors(expected(Family::Real, 5,
                                  {{real_res(Flavor::SinglePointed, 1, 0, 1, 0, {}), 0, 1, kInt},
                                   {BasicAtom::U, 1, 2, kInt}})));
}

TEST_CASE("multi-pointed nonorientable rows keep the (1,1,1) residual") {
  const SpaceExpr e = decompose(real_id(Flavor::MultiPointed, 4, 2, 1, 0, {0, 0}, 5));
  CHECK(rules_of(e) == std::vector<std::string>{"ThmA-row(g,r,1)-even"});
  CHECK(e.same_factors(expected(Family::Real, 5,
                                {{real_res(Flavor::SinglePointed, 1, 1, 1, 0, {0}), 0, 1, kInt},
                                 {BasicAtom::U, 1, 4, kInt},
                                 {BasicAtom::O, 1, 1, kInt}})));
}

TEST_CASE("single-pointed rows shift the unitary exponent down by the circles") {
  const SpaceExpr e = decompose(real_id(Flavor::SinglePointed, 4, 2, 1, 0, {0, 0}, 3));
  CHECK(render(e) == "G*((1,1,1);(0,0)) x (OU)^2 x (OO)^1 x (O(U/O))^1");
  CHECK(rules_of(e) == std::vector<std::string>{"ThmB-row(g,r,1)-even"});

  const SpaceExpr f = decompose(real_id(Flavor::SinglePointed, 3, 2, 0, 0, {0, 0}, 3));
  CHECK(rules_of(f) == std::vector<std::string>{"ThmB-row(g,r,0)"});
  CHECK(f.same_factors(expected(Family::Real, 3,
                                {{BasicAtom::UmodO, 2, 1, kInt},
                                 {BasicAtom::U, 1, 2, kInt},
                                 {BasicAtom::O, 1, 1, kInt},
                                 {BasicAtom::UmodO, 1, 1, kInt}})));
}

TEST_CASE("single-pointed groups with one marked point reuse the multi rows") {
  for (int g : {0, 1, 2, 3, 4}) {
    for (int r = 0; r <= 1; ++r) {
      const int a = r == 0 ? 1 : 0;
      if (!validate_surface(g, r, a).valid) continue;
      std::vector<int> w(static_cast<std::size_t>(r), 0);
      const SpaceExpr single = decompose(real_id(Flavor::SinglePointed, g, r, a, 0, w, 5));
      const SpaceExpr multi = decompose(real_id(Flavor::MultiPointed, g, r, a, 0, w, 5));
      CHECK(single.same_factors(multi));
    }
  }
}

TEST_CASE("blocked single-pointed classes fall back to the genus reduction") {
  // n even with a nonzero restriction class beyond the first: only the
  // unconditional genus split applies, and the residual keeps the class.
  const SpaceExpr e = decompose(real_id(Flavor::SinglePointed, 4, 2, 1, 1, {0, 1}, 2));
  CHECK(rules_of(e) == std::vector<std::string>{"Thm2.2"});
  CHECK(e.same_factors(expected(Family::Real, 2,
                                {{real_res(Flavor::SinglePointed, 2, 2, 1, 1, {0, 1}), 0, 1, kInt},
                                 {BasicAtom::U, 1, 2, kInt}})));
  // Same class at odd rank: the full row applies after all.
  const SpaceExpr f = decompose(real_id(Flavor::SinglePointed, 4, 2, 1, 1, {0, 1}, 3));
  CHECK(rules_of(f) == std::vector<std::string>{"ThmB-row(g,r,1)-even"});
}

TEST_CASE("unpointed chain: genus first, then fixed circles") {
  const SpaceExpr e = decompose(real_id(Flavor::Unpointed, 5, 2, 0, 0, {0, 0}, 3));
  CHECK(rules_of(e) == std::vector<std::string>{"ThmD.1-row(g,r,0)", "ThmD.3-row(r-1,r,0)"});
  CHECK(e.same_factors(expected(Family::Real, 3,
                                {{real_res(Flavor::Unpointed, 0, 1, 0, 0, {0}), 0, 1, kInt},
                                 {BasicAtom::U, 1, 4, kInt},
                                 {BasicAtom::O, 1, 1, kInt},
                                 {BasicAtom::UmodO, 1, 1, kInt}})));

  // (g,r,1) with g-r odd: the reduced type (r+1,r,1) hands its extra handle
  // to the (2,1,1) -> (1,1,1) splitting at the end of the chain.
  const SpaceExpr f = decompose(real_id(Flavor::Unpointed, 5, 2, 1, 0, {0, 0}, 3));
  CHECK(rules_of(f) == std::vector<std::string>{"ThmD.1-row(g,r,1)-odd", "ThmD.3-row(r+1,r,1)",
                                                "ThmD.2"});
  CHECK(f.same_factors(expected(Family::Real, 3,
                                {{real_res(Flavor::Unpointed, 1, 1, 1, 0, {0}), 0, 1, kInt},
                                 {BasicAtom::U, 1, 3, kInt},
                                 {BasicAtom::O, 1, 1, kInt},
                                 {BasicAtom::UmodO, 1, 1, kInt}})));

  // (g,r,1) with g-r even stops at (1,1,1) without the extra split.
  const SpaceExpr h = decompose(real_id(Flavor::Unpointed, 4, 2, 1, 0, {0, 0}, 3));
  CHECK(rules_of(h) == std::vector<std::string>{"ThmD.1-row(g,r,1)-even", "ThmD.3-row(r,r,1)"});
  CHECK(omega_u_mult(h) == 2);
}

TEST_CASE("unpointed class data survives the circle reduction") {
  // Restriction classes fold into their total parity on the residual.
  const SpaceExpr e = decompose(real_id(Flavor::Unpointed, 5, 2, 0, 1, {1, 0}, 5));
  REQUIRE(!e.factors.empty());
  CHECK(e.factors[0].atom == real_res(Flavor::Unpointed, 0, 1, 0, 1, {1}));
}

TEST_CASE("blocked unpointed classes stop after the genus reduction") {
  const SpaceExpr e = decompose(real_id(Flavor::Unpointed, 4, 2, 1, 1, {0, 1}, 2));
  CHECK(rules_of(e) == std::vector<std::string>{"ThmD.1-row(g,r,1)-even"});
  CHECK(e.same_factors(expected(Family::Real, 2,
                                {{real_res(Flavor::Unpointed, 2, 2, 1, 1, {0, 1}), 0, 1, kInt},
                                 {BasicAtom::U, 1, 2, kInt}})));
}

TEST_CASE("unpointed identities when nothing can be split off") {
  for (auto [g, r, a] : {std::array{0, 1, 0}, std::array{1, 1, 1}, std::array{0, 0, 1},
                         std::array{1, 0, 1}}) {
    std::vector<int> w(static_cast<std::size_t>(r), 0);
    const SpaceExpr e = decompose(real_id(Flavor::Unpointed, g, r, a, 0, w, 5));
    CHECK(e.provenance.empty());
    REQUIRE(e.factors.size() == 1);
    CHECK(e.factors[0].atom == real_res(Flavor::Unpointed, g, r, a, 0, w));
  }
}

TEST_CASE("quaternionic rows mirror the real ones with Sp atoms") {
  const SpaceExpr e = decompose(quat_id(Flavor::MultiPointed, 3, 2, 0, 0, 4));
  CHECK(rules_of(e) == std::vector<std::string>{"ThmQA-row(g,r,0)"});
  CHECK(e.same_factors(expected(Family::Quaternionic, 4,
                                {{BasicAtom::UmodSp, 2, 1, kInt},
                                 {BasicAtom::U, 1, 3, kInt},
                                 {BasicAtom::Sp, 1, 1, kInt}})));

  const SpaceExpr f = decompose(quat_id(Flavor::SinglePointed, 4, 2, 1, 2, 4));
  CHECK(rules_of(f) == std::vector<std::string>{"ThmQB-row(g,r,1)"});
  CHECK(f.same_factors(expected(Family::Quaternionic, 4,
                                {{quat_res(Flavor::SinglePointed, 1, 1, 1, 0), 0, 1, kInt},
                                 {BasicAtom::U, 1, 2, kInt},
                                 {BasicAtom::Sp, 1, 1, kInt},
                                 {BasicAtom::UmodSp, 1, 1, kInt}})));

  const SpaceExpr h = decompose(quat_id(Flavor::Unpointed, 3, 2, 1, 0, 4));
  CHECK(rules_of(h) == std::vector<std::string>{"ThmQD-row(g,r,1)"});
  CHECK(h.same_factors(expected(Family::Quaternionic, 4,
                                {{quat_res(Flavor::Unpointed, 1, 1, 1, 0), 0, 1, kInt},
                                 {BasicAtom::U, 1, 1, kInt},
                                 {BasicAtom::Sp, 1, 1, kInt},
                                 {BasicAtom::UmodSp, 1, 1, kInt}})));

  // Unpointed with r = 0 reduces genus but keeps the Chern degree.
  const SpaceExpr k = decompose(quat_id(Flavor::Unpointed, 3, 0, 1, 6, 4));
  CHECK(rules_of(k) == std::vector<std::string>{"ThmQD-row(g,0,1)-odd"});
  CHECK(k.same_factors(expected(Family::Quaternionic, 4,
                                {{quat_res(Flavor::Unpointed, 1, 0, 1, 6), 0, 1, kInt},
                                 {BasicAtom::U, 1, 2, kInt}})));
}

TEST_CASE("p-local expansion of the pointed residuals") {
  // (2,0,1) at an odd prime with odd rank: the genus split leaves a
  // single-pointed (0,0,1) residual which localizes away completely.
  const SpaceExpr e =
      decompose(real_id(Flavor::MultiPointed, 2, 0, 1, 0, {}, 5), LocalityRequest::at_prime(3));
  CHECK(rules_of(e) == std::vector<std::string>{"ThmA-row(g,0,1)-even", "ThmC.1"});
  CHECK(e.same_factors(expected(Family::Real, 5,
                                {{BasicAtom::U, 1, 2, kInt},
                                 {BasicAtom::UmodO, 2, 1, kOdd},
                                 {BasicAtom::UmodO, 1, 1, kOdd}})));

  // (3,0,1): same but through (1,0,1), which also frees a loop of U.
  const SpaceExpr f =
      decompose(real_id(Flavor::MultiPointed, 3, 0, 1, 0, {}, 5), LocalityRequest::at_prime(3));
  CHECK(rules_of(f) == std::vector<std::string>{"ThmA-row(g,0,1)-odd", "ThmC.2"});
  CHECK(f.same_factors(expected(Family::Real, 5,
                                {{BasicAtom::U, 1, 2, kInt},
                                 {BasicAtom::UmodO, 2, 1, kOdd},
                                 {BasicAtom::UmodO, 1, 1, kOdd},
                                 {BasicAtom::U, 1, 1, kOdd}})));

  // The (1,1,1) residual goes through the p != 2 splitting for every rank,
  // but the final (0,0,1) expansion still needs odd rank.
  const SpaceExpr g =
      decompose(real_id(Flavor::SinglePointed, 1, 1, 1, 0, {0}, 4), LocalityRequest::at_prime(3));
  CHECK(rules_of(g) == std::vector<std::string>{"Thm2.17"});
  CHECK(g.same_factors(expected(Family::Real, 4,
                                {{real_res(Flavor::SinglePointed, 0, 0, 1, 0, {}), 0, 1, kOdd},
                                 {BasicAtom::O, 1, 1, kOdd}})));

  const SpaceExpr h =
      decompose(real_id(Flavor::SinglePointed, 1, 1, 1, 0, {0}, 5), LocalityRequest::at_prime(3));
  CHECK(rules_of(h) == std::vector<std::string>{"Thm2.17", "ThmC.1"});
  CHECK(h.same_factors(expected(Family::Real, 5,
                                {{BasicAtom::O, 1, 1, kOdd},
                                 {BasicAtom::UmodO, 2, 1, kOdd},
                                 {BasicAtom::UmodO, 1, 1, kOdd}})));

  // At p = 2 no pointed rule applies and the residual survives integrally.
  const SpaceExpr k =
      decompose(real_id(Flavor::SinglePointed, 1, 1, 1, 0, {0}, 5), LocalityRequest::at_prime(2));
  CHECK(k.provenance.empty());
  REQUIRE(k.factors.size() == 1);
  CHECK(k.factors[0].locality == kInt);
}

TEST_CASE("p-local expansion of the unpointed residuals") {
  // r = 1 with trivial restriction class: an O factor splits off and the
  // rest is the single-pointed group, expanded in the same p-context.
  const SpaceExpr e =
      decompose(real_id(Flavor::Unpointed, 0, 1, 0, 0, {0}, 5), LocalityRequest::at_prime(3));
  CHECK(rules_of(e) == std::vector<std::string>{"ThmE.1a", "ThmA-row(g,r,0)"});
  CHECK(e.same_factors(expected(Family::Real, 5,
                                {{BasicAtom::O, 0, 1, kCop},
                                 {BasicAtom::UmodO, 2, 1, kCop}})));

  // n = p uses the companion rule and tags the factors with p = n.
  const SpaceExpr f =
      decompose(real_id(Flavor::Unpointed, 0, 1, 0, 0, {0}, 3), LocalityRequest::at_prime(3));
  CHECK(rules_of(f) == std::vector<std::string>{"ThmE.2a", "ThmA-row(g,r,0)"});
  const Locality kEq = Locality::p_local(PrimeConstraint{false, false, true});
  CHECK(f.same_factors(expected(Family::Real, 3,
                                {{BasicAtom::O, 0, 1, kEq},
                                 {BasicAtom::UmodO, 2, 1, kEq}})));

  // A nonzero restriction class blocks the split entirely.
  const SpaceExpr g =
      decompose(real_id(Flavor::Unpointed, 1, 1, 1, 1, {1}, 5), LocalityRequest::at_prime(3));
  CHECK(g.provenance.empty());
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].locality == kInt);

  // r = 0 at an odd prime coprime to an odd rank: special orthogonal split.
  const SpaceExpr h =
      decompose(real_id(Flavor::Unpointed, 2, 0, 1, 0, {}, 5), LocalityRequest::at_prime(3));
  CHECK(rules_of(h) == std::vector<std::string>{"ThmD.1-row(g,r,1)-even", "ThmE.1b"});
  CHECK(h.same_factors(expected(Family::Real, 5,
                                {{BasicAtom::U, 1, 2, kInt},
                                 {BasicAtom::SO, 0, 1, kOddCop},
                                 {BasicAtom::UmodSO, 2, 1, kOddCop}})));

  const SpaceExpr k =
      decompose(real_id(Flavor::Unpointed, 3, 0, 1, 0, {}, 5), LocalityRequest::at_prime(3));
  CHECK(rules_of(k) == std::vector<std::string>{"ThmD.1-row(g,r,1)-odd", "ThmE.1c"});
  CHECK(k.same_factors(expected(Family::Real, 5,
                                {{BasicAtom::U, 1, 2, kInt},
                                 {BasicAtom::SO, 0, 1, kOddCop},
                                 {BasicAtom::UmodSO, 2, 1, kOddCop},
                                 {BasicAtom::U, 1, 1, kOddCop}})));
}

TEST_CASE("the full unpointed chain at an odd prime") {
  // This is the forced expansion of the (g,r,1) unpointed groups: genus and
  // circle reductions integrally, then the orthogonal split, the p != 2
  // residual splitting, and the final localization of (0,0,1).
  const SpaceExpr e =
      decompose(real_id(Flavor::Unpointed, 4, 2, 1, 0, {0, 0}, 13), LocalityRequest::at_prime(3));
  CHECK(rules_of(e) == std::vector<std::string>{"ThmD.1-row(g,r,1)-even", "ThmD.3-row(r,r,1)",
                                                "ThmE.1a", "Thm2.17", "ThmC.1"});
  CHECK(e.same_factors(expected(Family::Real, 13,
                                {{BasicAtom::U, 1, 2, kInt},
                                 {BasicAtom::O, 1, 1, kInt},
                                 {BasicAtom::UmodO, 1, 1, kInt},
                                 {BasicAtom::O, 0, 1, kCop},
                                 {BasicAtom::O, 1, 1, kOddCop},
                                 {BasicAtom::UmodO, 2, 1, kOddCop},
                                 {BasicAtom::UmodO, 1, 1, kOddCop}})));
}

TEST_CASE("quaternionic p-local rules") {
  const SpaceExpr e =
      decompose(quat_id(Flavor::SinglePointed, 1, 1, 1, 0, 4), LocalityRequest::at_prime(3));
  CHECK(rules_of(e) == std::vector<std::string>{"ThmQC.3"});
  CHECK(e.same_factors(expected(Family::Quaternionic, 4,
                                {{BasicAtom::UmodSp, 2, 1, kOdd},
                                 {BasicAtom::UmodSp, 1, 1, kOdd},
                                 {BasicAtom::Sp, 1, 1, kOdd}})));

  const SpaceExpr f =
      decompose(quat_id(Flavor::Unpointed, 1, 1, 1, 0, 6), LocalityRequest::at_prime(5));
  CHECK(rules_of(f) == std::vector<std::string>{"ThmQE.1", "ThmQC.3"});
  CHECK(f.same_factors(expected(Family::Quaternionic, 6,
                                {{BasicAtom::Sp, 0, 1, kCop},
                                 {BasicAtom::UmodSp, 2, 1, kOddCop},
                                 {BasicAtom::UmodSp, 1, 1, kOddCop},
                                 {BasicAtom::Sp, 1, 1, kOddCop}})));

  // p dividing the rank blocks the unpointed split.
  const SpaceExpr g =
      decompose(quat_id(Flavor::Unpointed, 0, 0, 1, 0, 6), LocalityRequest::at_prime(3));
  CHECK(g.provenance.empty());
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].locality == kInt);

  const SpaceExpr h =
      decompose(quat_id(Flavor::Unpointed, 1, 0, 1, 0, 6), LocalityRequest::at_prime(5));
  CHECK(rules_of(h) == std::vector<std::string>{"ThmQE.3"});
  CHECK(h.same_factors(expected(Family::Quaternionic, 6,
                                {{BasicAtom::Sp, 0, 1, kCop},
                                 {BasicAtom::UmodSp, 2, 1, kCop},
                                 {BasicAtom::U, 1, 1, kCop}})));
}

TEST_CASE("unitary exponent bookkeeping across all types") {
  for (const SurfaceType& t : enumerate_surfaces(12)) {
    std::vector<int> w(static_cast<std::size_t>(t.r), 0);
    // Multi-pointed rows: total loops of U equals the genus whenever r > 0.
    if (t.r > 0) {
      const SpaceExpr multi =
          decompose(make_real_id(Flavor::MultiPointed, t, 0, w, 5));
      CHECK(omega_u_mult(multi) == t.g);
      // Single-pointed rows: g-r+1 over orientable, g-r over nonorientable
      // quotients (for r+a = 1 the multi rows apply and give g again).
      const SpaceExpr single =
          decompose(make_real_id(Flavor::SinglePointed, t, 0, w, 5));
      if (t.r + t.a > 1) {
        CHECK(omega_u_mult(single) == (t.a == 0 ? t.g - t.r + 1 : t.g - t.r));
      } else {
        CHECK(omega_u_mult(single) == t.g);
      }
      // Unpointed chains end at genus <= 2 residuals with the same totals.
      const SpaceExpr unp = decompose(make_real_id(Flavor::Unpointed, t, 0, w, 5));
      CHECK(omega_u_mult(unp) == (t.a == 0 ? t.g - t.r + 1 : t.g - t.r));
    }
  }
}

TEST_CASE("unpointed decompositions respect the Chern-degree period") {
  const GaugeGroupId base = real_id(Flavor::Unpointed, 5, 2, 0, 1, {1, 0}, 5);
  GaugeGroupId shifted = base;
  shifted.cls = RealClass{1 + 2 * 5, {1, 0}};
  CHECK(decompose(base).same_factors(decompose(shifted)));

  const GaugeGroupId qbase = quat_id(Flavor::Unpointed, 3, 2, 1, 2, 4);
  GaugeGroupId qshifted = qbase;
  qshifted.cls = QuatClass{2 + 2 * 4};
  CHECK(decompose(qbase).same_factors(decompose(qshifted)));
}

TEST_CASE("every p-local factor's constraint is satisfied by the concrete pair") {
  const std::vector<GaugeGroupId> ids = {
      real_id(Flavor::MultiPointed, 2, 0, 1, 0, {}, 5),
      real_id(Flavor::SinglePointed, 4, 2, 1, 0, {0, 0}, 5),
      real_id(Flavor::Unpointed, 4, 2, 1, 0, {0, 0}, 13),
      real_id(Flavor::Unpointed, 2, 0, 1, 0, {}, 3),
      quat_id(Flavor::Unpointed, 1, 1, 1, 0, 6),
      quat_id(Flavor::SinglePointed, 1, 0, 1, 0, 4),
  };
  for (const GaugeGroupId& id : ids) {
    for (std::int64_t p : {2, 3, 5, 13}) {
      const SpaceExpr e = decompose(id, LocalityRequest::at_prime(p));
      for (const Factor& f : e.factors) {
        if (f.locality.is_integral()) continue;
        const PrimeConstraint& c = f.locality.constraint;
        if (c.exclude_two) CHECK(p != 2);
        if (c.coprime_to_rank) CHECK(id.rank % p != 0);
        if (c.equals_rank) CHECK(id.rank == p);
      }
    }
  }
}

TEST_CASE("decomposition is deterministic") {
  const GaugeGroupId id = real_id(Flavor::Unpointed, 4, 2, 1, 0, {0, 0}, 13);
  const SpaceExpr a = decompose(id, LocalityRequest::at_prime(3));
  const SpaceExpr b = decompose(id, LocalityRequest::at_prime(3));
  CHECK(a.same_factors(b));
  CHECK(render(a) == render(b));
  CHECK(rules_of(a) == rules_of(b));
}

TEST_CASE("locality requests validate their prime") {
  CHECK_THROWS_AS(LocalityRequest::at_prime(1), UsageError);
  CHECK_THROWS_AS(LocalityRequest::at_prime(4), UsageError);
  CHECK_THROWS_AS(LocalityRequest::at_prime(-3), UsageError);
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(9));
}
