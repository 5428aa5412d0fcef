#pragma once

/**
 * @file decompose.hpp
 * @brief The reduction engine: rewrites a gauge group into a canonical
 *        product of stable atoms and irreducible residuals.
 *
 * The engine applies a fixed library of homotopy decompositions.  Integral
 * rules (applied for every request):
 *
 *   ThmA-row(...)   multi-pointed groups (and single-pointed ones over
 *                   surfaces with one marked point): split off loop-space
 *                   atoms, leaving a pointed residual over a minimal type.
 *   ThmB-row(...)   single-pointed groups with r + a > 1, valid when the
 *                   rank is odd or all restriction classes beyond the first
 *                   vanish.
 *   Thm2.2          genus reduction for single-pointed groups when ThmB's
 *                   condition fails: splits off (OU)^{g'} only.
 *   ThmD.1/2/3      unpointed genus reduction, the (2,1,1) -> (1,1,1) loop
 *                   splitting, and the fixed-circle reduction r -> 1.
 *   ThmQA/QB/QD     the Quaternionic counterparts (QB and QD rows do not
 *                   depend on the parity of g - r).
 *
 * P-local rules (applied only for an AtPrime request; every factor they
 * introduce is tagged with the accumulated side conditions):
 *
 *   Thm2.17         G*((1,1,1);(0,0)) -> G*((0,0,1);0) x OO, p != 2.
 *   ThmC.1/C.2      pointed residuals over (0,0,1)/(1,0,1), p != 2, n odd.
 *   ThmE.1a/E.2a    unpointed r = 1 groups with w_1 = 0: split off O(n),
 *                   for p coprime to n (1a) or p = n (2a).
 *   ThmE.1b/c,2b/c  unpointed r = 0 groups: split off SO(n), p odd.
 *   ThmQC.1/2/3     Quaternionic pointed residuals, p != 2.
 *   ThmQE.1/2/3     Quaternionic unpointed groups, p coprime to 2n.
 *
 * A rule application is recorded in the provenance only when all of its
 * side conditions held and it actually rewrote something.
 */

#include "gauge/bundles.hpp"
#include "gauge/spaces.hpp"

namespace gauge {

/// What kind of answer is requested.
struct LocalityRequest {
  enum class Kind { Integral, AtPrime };

  Kind kind = Kind::Integral;
  std::int64_t p = 0;  ///< the prime, when kind == AtPrime

  static LocalityRequest integral();
  /// Requires p prime (else UsageError).
  static LocalityRequest at_prime(std::int64_t p);

  friend bool operator==(const LocalityRequest&, const LocalityRequest&) = default;
};

/// Primality test for the small primes used in requests.
bool is_prime(std::int64_t p);

/**
 * Decomposes the gauge group named by id into a canonical SpaceExpr.  The
 * class is canonicalized first; an AtPrime request additionally expands
 * residuals through every applicable p-local rule.  Residuals that no rule
 * can expand are returned as residual factors.
 */
SpaceExpr decompose(const GaugeGroupId& id, const LocalityRequest& req = LocalityRequest::integral());

}  // namespace gauge
