#pragma once

/**
 * @file surfaces.hpp
 * @brief Real surfaces by Weichold type (g, r, a) and derived invariants.
 *
 * A Real surface -- a closed orientable surface with an antiholomorphic
 * involution -- is classified up to equivariant homeomorphism by its
 * Weichold type (g, r, a): the genus g, the number r of fixed circles of
 * the involution, and a in {0, 1} telling whether the quotient is
 * orientable (a = 0) or not (a = 1).  A triple is realizable exactly when
 *
 *   a = 0:  1 <= r <= g + 1  and  r == g + 1 (mod 2),
 *   a = 1:  0 <= r <= g.
 *
 * The genus-reduction invariant g' counts how many handles can be split
 * off the quotient surface; the reduced types reached when g' handles are
 * removed are (r-1, r, 0), (r, r, 1) and (r+1, r, 1).
 */

#include <string>
#include <vector>

#include "gauge/groups.hpp"

namespace gauge {

/// Validity verdict for a candidate type; invalid is a value, not an error.
struct SurfaceValidity {
  bool valid = false;
  std::string reason;  ///< empty when valid, otherwise the violated clause
};

/// Checks whether (g, r, a) is a realizable Weichold type.
SurfaceValidity validate_surface(int g, int r, int a);

/// A realizable Weichold type; construction enforces validity.
struct SurfaceType {
  int g = 0;
  int r = 0;
  int a = 1;

  /// Constructs a validated type; throws UsageError when invalid.
  static SurfaceType make(int g, int r, int a);

  /// True when the fixed-point set is non-empty (r > 0).
  bool has_fixed_circles() const { return r > 0; }

  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

/// Coarse classification of the valid types.
enum class SurfaceCase {
  NoFixedCircles,          ///< r == 0 (forces a == 1)
  OrientableQuotient,      ///< r >= 1, a == 0
  NonorientableQuotient,   ///< r >= 1, a == 1
};

SurfaceCase case_of(const SurfaceType& t);

/**
 * The genus-reduction invariant:
 *   a = 0:            g' = g - r + 1,
 *   a = 1, g-r even:  g' = g - r,
 *   a = 1, g-r odd:   g' = g - r - 1.
 */
int g_prime(const SurfaceType& t);

/// eta = 1 when r > 0 and a = 1, else 0.
int eta(const SurfaceType& t);

/// The reduced type reached after removing g' handles.
SurfaceType reduced_type(const SurfaceType& t);

/**
 * All valid types with g <= g_max, ordered lexicographically by (g, r, a).
 */
std::vector<SurfaceType> enumerate_surfaces(int g_max);

/// Renders "(g,r,a)".
std::string render(const SurfaceType& t);

}  // namespace gauge
