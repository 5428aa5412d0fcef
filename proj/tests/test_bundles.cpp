#include <doctest.h>

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gauge/bundles.hpp"

using namespace gauge;

namespace {

SurfaceType t(int g, int r, int a) { return SurfaceType::make(g, r, a); }

/// Random valid (type, class, rank) triples with a fixed seed.
struct Fuzzer {
  std::mt19937 rng{20240816u};
  std::vector<SurfaceType> types = enumerate_surfaces(6);

  GaugeGroupId next() {
    const SurfaceType type = types[rng() % types.size()];
    const bool quat = rng() % 2 == 0;
    const Flavor flavor =
        std::array{Flavor::Unpointed, Flavor::SinglePointed, Flavor::MultiPointed}[rng() % 3];
    std::uniform_int_distribution<std::int64_t> c_dist(-60, 60);
    if (quat) {
      const int rank = 2 * (1 + static_cast<int>(rng() % 4));
      return make_quat_id(flavor, type, 2 * c_dist(rng), rank);
    }
    const int rank = 1 + static_cast<int>(rng() % 8);
    std::vector<int> w(static_cast<std::size_t>(type.r));
    for (int& wi : w) wi = static_cast<int>(rng() % 2);
    const int parity = std::accumulate(w.begin(), w.end(), 0) % 2;
    return make_real_id(flavor, type, 2 * c_dist(rng) + parity, w, rank);
  }
};

}  // namespace

TEST_CASE("class validation: parity and evenness") {
  CHECK(validate_class(Family::Real, t(3, 2, 0), RealClass{1, {1, 0}}, 5).valid);
  CHECK_FALSE(validate_class(Family::Real, t(3, 2, 0), RealClass{1, {0, 0}}, 5).valid);
  CHECK_FALSE(validate_class(Family::Real, t(3, 2, 0), RealClass{1, {0, 2}}, 5).valid);
  CHECK_FALSE(validate_class(Family::Real, t(3, 2, 0), RealClass{1, {0}}, 5).valid);
  CHECK(validate_class(Family::Quaternionic, t(3, 2, 1), QuatClass{10}, 4).valid);
  CHECK_FALSE(validate_class(Family::Quaternionic, t(3, 2, 1), QuatClass{3}, 4).valid);
  CHECK_FALSE(validate_class(Family::Quaternionic, t(3, 2, 1), QuatClass{2}, 3).valid);
  CHECK_THROWS_AS(make_real_id(Flavor::Unpointed, t(3, 2, 0), 1, {0, 0}, 5), UsageError);
  CHECK_THROWS_AS(make_quat_id(Flavor::Unpointed, t(3, 2, 1), 3, 4), UsageError);
  CHECK_THROWS_AS(make_real_id(Flavor::Unpointed, t(0, 0, 1), 1, {}, 5), UsageError);
}

TEST_CASE("canonicalization on worked examples") {
  // MultiPointed: every class collapses to zero.
  auto multi = canonical_class(make_real_id(Flavor::MultiPointed, t(3, 2, 0), 3, {1, 0}, 5));
  CHECK(std::get<RealClass>(multi.cls) == RealClass{0, {0, 0}});
  CHECK(multi.justification == std::vector<std::string>{"Prop1.4"});

  // SinglePointed: w_1 freed, c forced to the parity of the remaining w_i.
  auto single = canonical_class(make_real_id(Flavor::SinglePointed, t(3, 2, 0), 3, {0, 1}, 5));
  CHECK(std::get<RealClass>(single.cls) == RealClass{1, {0, 1}});
  CHECK(single.justification == std::vector<std::string>{"Prop1.5"});

  // Unpointed, n odd: restriction classes concentrate, then c reduces mod 2n.
  auto unp = canonical_class(make_real_id(Flavor::Unpointed, t(2, 3, 0), 7, {1, 1, 1}, 3));
  CHECK(std::get<RealClass>(unp.cls) == RealClass{1, {1, 0, 0}});
  CHECK(unp.justification == std::vector<std::string>{"Prop1.7", "Prop1.6"});

  // Unpointed, n even: restriction classes stay put; only c reduces.
  auto even = canonical_class(make_real_id(Flavor::Unpointed, t(2, 3, 0), 7, {1, 1, 1}, 2));
  CHECK(std::get<RealClass>(even.cls) == RealClass{3, {1, 1, 1}});
  CHECK(even.justification == std::vector<std::string>{"Prop1.6"});

  // Quaternionic pointed: c collapses to zero.
  auto qp = canonical_class(make_quat_id(Flavor::SinglePointed, t(3, 2, 1), 10, 4));
  CHECK(std::get<QuatClass>(qp.cls).c == 0);
  CHECK(qp.justification == std::vector<std::string>{"Prop1.8"});

  // Quaternionic unpointed: c reduces mod 4n = 2 * rank.
  auto qu = canonical_class(make_quat_id(Flavor::Unpointed, t(3, 2, 1), 10, 4));
  CHECK(std::get<QuatClass>(qu.cls).c == 2);
  CHECK(qu.justification == std::vector<std::string>{"Prop1.9"});

  // Already-canonical classes record no justification.
  auto id0 = canonical_class(make_real_id(Flavor::Unpointed, t(3, 2, 0), 1, {1, 0}, 5));
  CHECK(std::get<RealClass>(id0.cls) == RealClass{1, {1, 0}});
  CHECK(id0.justification.empty());
}

TEST_CASE("negative Chern degrees reduce into the canonical window") {
  auto real = canonical_class(make_real_id(Flavor::Unpointed, t(1, 2, 0), -7, {1, 0}, 5));
  CHECK(std::get<RealClass>(real.cls).c == 3);  // -7 mod 10
  auto quat = canonical_class(make_quat_id(Flavor::Unpointed, t(3, 2, 1), -2, 4));
  CHECK(std::get<QuatClass>(quat.cls).c == 6);  // -2 mod 8
}

TEST_CASE("canonicalization fuzz: idempotent, parity-preserving, window-reducing") {
  Fuzzer fuzz;
  for (int trial = 0; trial < 1000; ++trial) {
    const GaugeGroupId id = fuzz.next();
    const CanonicalClass canon = canonical_class(id);

    // Output is still a valid class for the same surface.
    CHECK(validate_class(id.family, id.surface, canon.cls, id.rank).valid);

    // Idempotence.
    GaugeGroupId again = id;
    again.cls = canon.cls;
    const CanonicalClass twice = canonical_class(again);
    CHECK(twice.cls == canon.cls);
    CHECK(twice.justification.empty());

    // Unpointed classes are invariant under the Chern-degree period.
    if (id.flavor == Flavor::Unpointed) {
      GaugeGroupId shifted = id;
      if (const RealClass* rc = std::get_if<RealClass>(&id.cls)) {
        RealClass moved = *rc;
        moved.c += 2 * id.rank;
        shifted.cls = moved;
      } else {
        shifted.cls = QuatClass{std::get<QuatClass>(id.cls).c + 2 * id.rank};
      }
      CHECK(canonical_class(shifted).cls == canon.cls);
    }
  }
}

TEST_CASE("equivalence is three-valued: equivalent or unknown, never distinct") {
  // Two multi-pointed ids with different classes are equivalent via Prop 1.4.
  const GaugeGroupId m1 = make_real_id(Flavor::MultiPointed, t(3, 2, 0), 3, {1, 0}, 5);
  const GaugeGroupId m2 = make_real_id(Flavor::MultiPointed, t(3, 2, 0), 1, {0, 1}, 5);
  const Equivalence em = known_equivalent(m1, m2);
  CHECK(em.equivalent);
  CHECK(em.via == std::vector<std::string>{"Prop1.4"});

  // n even: the restriction-class reduction is unavailable, so classes with
  // different w are merely not known to be equivalent.
  const GaugeGroupId u1 = make_real_id(Flavor::Unpointed, t(1, 2, 0), 0, {0, 0}, 2);
  const GaugeGroupId u2 = make_real_id(Flavor::Unpointed, t(1, 2, 0), 0, {1, 1}, 2);
  CHECK_FALSE(known_equivalent(u1, u2).equivalent);

  // Same ids, n odd: now equivalent.
  const GaugeGroupId odd1 = make_real_id(Flavor::Unpointed, t(1, 2, 0), 0, {0, 0}, 3);
  const GaugeGroupId odd2 = make_real_id(Flavor::Unpointed, t(1, 2, 0), 0, {1, 1}, 3);
  CHECK(known_equivalent(odd1, odd2).equivalent);

  // Identity.
  CHECK(known_equivalent(u1, u1).equivalent);
  CHECK(known_equivalent(u1, u1).via.empty());

  // The justification union covers both sides' reductions.
  const GaugeGroupId v1 = make_real_id(Flavor::Unpointed, t(3, 2, 0), 3, {1, 0}, 5);
  const GaugeGroupId v2 = make_real_id(Flavor::Unpointed, t(3, 2, 0), 13, {0, 1}, 5);
  const Equivalence ev = known_equivalent(v1, v2);
  CHECK(ev.equivalent);
  CHECK(ev.via == std::vector<std::string>{"Prop1.7", "Prop1.6"});

  // Mismatched context is a usage error, not "not equivalent".
  const GaugeGroupId other_rank = make_real_id(Flavor::Unpointed, t(1, 2, 0), 0, {0, 0}, 3);
  CHECK_THROWS_AS(known_equivalent(u1, other_rank), UsageError);
}

TEST_CASE("class rendering") {
  CHECK(render(BundleClass{RealClass{1, {1, 0}}}) == "(1,1,0)");
  CHECK(render(BundleClass{RealClass{4, {}}}) == "4");
  CHECK(render(BundleClass{QuatClass{-2}}) == "-2");
  CHECK(render(Family::Real) == "Real");
  CHECK(render(Flavor::SinglePointed) == "SinglePointed");
}
