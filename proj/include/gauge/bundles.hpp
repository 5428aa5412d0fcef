#pragma once

/**
 * @file bundles.hpp
 * @brief Topological classes of Real and Quaternionic principal U(n)-bundles
 *        over a Real surface, and canonical representatives per gauge flavor.
 *
 * A Real bundle over a surface of type (g, r, a) is classified by a Chern
 * degree c together with one Z/2 restriction class w_i per fixed circle,
 * subject to the parity constraint c == w_1 + ... + w_r (mod 2) (so c must
 * be even when r = 0).  A Quaternionic bundle has even unitary rank 2n and
 * is classified by an even Chern degree c alone.
 *
 * Different classes can carry homotopy-equivalent gauge groups.  For each
 * family and flavor there is a canonical representative of each equivalence
 * class, reached by the reductions below (identifiers are the stable rule
 * ids reported in justifications):
 *
 *   Prop1.4  Real multi-pointed:   any class ~ (0; 0,...,0)
 *   Prop1.5  Real single-pointed:  w_1 := 0, c := (w_2 + ... + w_r) mod 2
 *   Prop1.6  Real unpointed:       c ~ c + 2n
 *   Prop1.7  Real unpointed, n odd: w ~ (w_1+...+w_r mod 2, 0, ..., 0)
 *   Prop1.8  Quaternionic pointed:  c ~ 0
 *   Prop1.9  Quaternionic unpointed: c ~ c + 4n
 *
 * Canonicalization is a sound reduction, not a complete invariant, so
 * equivalence queries answer either Equivalent (with the justification
 * trail) or Unknown -- never "not equivalent".
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gauge/surfaces.hpp"

namespace gauge {

enum class Family { Real, Quaternionic };
enum class Flavor { Unpointed, SinglePointed, MultiPointed };

std::string render(Family f);
std::string render(Flavor f);

/// Class of a Real bundle: Chern degree plus one Z/2 class per fixed circle.
struct RealClass {
  std::int64_t c = 0;
  std::vector<int> w;  ///< r entries, each 0 or 1

  friend bool operator==(const RealClass&, const RealClass&) = default;
};

/// Class of a Quaternionic bundle: an even Chern degree.
struct QuatClass {
  std::int64_t c = 0;

  friend bool operator==(const QuatClass&, const QuatClass&) = default;
};

using BundleClass = std::variant<RealClass, QuatClass>;

/**
 * Identifies a gauge group: family, basepoint flavor, surface type,
 * bundle class, and unitary rank.  For the Real family rank is n; for the
 * Quaternionic family rank is the (even) unitary rank 2n.
 */
struct GaugeGroupId {
  Family family = Family::Real;
  Flavor flavor = Flavor::MultiPointed;
  SurfaceType surface;
  BundleClass cls;
  int rank = 1;

  friend bool operator==(const GaugeGroupId&, const GaugeGroupId&) = default;
};

/// Convenience constructor for Real ids; validates everything.
GaugeGroupId make_real_id(Flavor flavor, const SurfaceType& t, std::int64_t c,
                          std::vector<int> w, int rank);

/// Convenience constructor for Quaternionic ids; validates everything.
GaugeGroupId make_quat_id(Flavor flavor, const SurfaceType& t, std::int64_t c, int rank);

/// Checks class shape and parity against the surface and family.
SurfaceValidity validate_class(Family family, const SurfaceType& t, const BundleClass& cls,
                               int rank);

/// Throws UsageError when the id is malformed.
void validate_id(const GaugeGroupId& id);

/// A canonical representative plus the reductions used to reach it.
struct CanonicalClass {
  BundleClass cls;
  std::vector<std::string> justification;  ///< rule ids, in application order
};

/**
 * The canonical representative of the class of id under its family/flavor
 * equivalences.  Reductions that do not change the class are not recorded.
 */
CanonicalClass canonical_class(const GaugeGroupId& id);

/// Returns id with its class replaced by the canonical representative.
GaugeGroupId canonicalized(const GaugeGroupId& id);

/// Verdict of an equivalence query.
struct Equivalence {
  bool equivalent = false;                 ///< true: proven equivalent; false: unknown
  std::vector<std::string> via;            ///< justification when equivalent
};

/**
 * Decides whether two ids (same family, flavor, surface, and rank --
 * anything else is a UsageError) have gauge groups identified by the
 * canonical reductions.  Returns Equivalent with the combined
 * justification, or Unknown; never asserts non-equivalence.
 */
Equivalence known_equivalent(const GaugeGroupId& a, const GaugeGroupId& b);

/**
 * Renders a class: Real "(c,w1,...,wr)" as a tuple (bare "c" when r = 0);
 * Quaternionic bare "c".
 */
std::string render(const BundleClass& cls);

}  // namespace gauge
