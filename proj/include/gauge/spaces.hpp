#pragma once

/**
 * @file spaces.hpp
 * @brief Symbolic product expressions built from stable atoms, loop spaces,
 *        and irreducible residual gauge groups.
 *
 * A decomposition result is a finite product of factors Omega^k(A)^m where
 * A is either a stable atom -- U, O, SO, Sp, one of the quotients U/O,
 * U/SO, U/Sp, or the circle -- or a residual gauge group over one of the
 * minimal surface types that the reduction rules cannot split further.
 * Each factor carries a locality tag: factors produced by an integral
 * equivalence are integral, factors produced under a p-local equivalence
 * carry the accumulated side conditions of every rule on their derivation
 * path.
 *
 * Expressions are kept in a canonical form: equal (atom, loops, locality)
 * factors are merged into one factor with a multiplicity, and factors are
 * sorted residual-first, then by loop degree descending, then by atom, then
 * integral before p-local.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gauge/bundles.hpp"
#include "gauge/groups.hpp"

namespace gauge {

/// The stable atoms.
enum class BasicAtom { U, O, SO, Sp, UmodO, UmodSO, UmodSp, Circle };

/// Renders "U", "O", "SO", "Sp", "U/O", "U/SO", "U/Sp", "S1".
std::string render(BasicAtom a);

/**
 * An irreducible residual gauge group.  The flavor is SinglePointed or
 * Unpointed (multi-pointed inputs always reduce away); the surface is one
 * of the minimal types -- (0,0,1), (1,0,1), (0,1,0), (1,1,1), (2,1,1) --
 * or, when a class blocks the fixed-circle reduction, a reduced type
 * (r-1,r,0) / (r,r,1) / (r+1,r,1) with r >= 2.
 */
struct ResidualAtom {
  Family family = Family::Real;
  Flavor flavor = Flavor::SinglePointed;
  SurfaceType surface;
  BundleClass cls;

  friend bool operator==(const ResidualAtom&, const ResidualAtom&) = default;
};

using Atom = std::variant<BasicAtom, ResidualAtom>;

bool operator==(const Atom& a, const Atom& b);

/// Strict weak order used for the canonical factor order.
bool atom_less(const Atom& a, const Atom& b);

/// Renders an atom; residuals render as "G*((1,1,1);(0,0))",
/// "G((0,1,0);(0,0))", "G_Q*((1,1,1);0)", etc.
std::string render(const Atom& a);

/// One factor Omega^loops(atom)^mult with its locality tag.
struct Factor {
  Atom atom;
  int loops = 0;  ///< >= 0; residual factors always appear unlooped
  int mult = 1;   ///< >= 1
  Locality locality;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A rule application recorded in a decomposition's provenance.
struct RuleApplication {
  std::string rule;  ///< stable rule id, e.g. "ThmD.3-row(r,r,1)"
  std::vector<std::pair<std::string, bool>> conditions_checked;

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

/**
 * A canonical product expression.  The ambient family and rank give the
 * atoms their meaning: U means U(rank), O/SO mean O(rank)/SO(rank) in the
 * Real family, and Sp / U/Sp mean Sp(rank/2) / U(rank)/Sp(rank/2) in the
 * Quaternionic family.
 */
struct SpaceExpr {
  Family family = Family::Real;
  int rank = 1;
  std::vector<Factor> factors;
  std::vector<RuleApplication> provenance;

  /// Expression with no factors (a point) in the given ambient context.
  static SpaceExpr point(Family family, int rank);

  /// Appends a factor and restores canonical form.
  void push(Factor f);

  /// Merges equal factors and sorts into canonical order.
  void normalize();

  /// True when the factor multisets agree (provenance ignored).
  bool same_factors(const SpaceExpr& other) const;

  friend bool operator==(const SpaceExpr&, const SpaceExpr&) = default;
};

/// Product of two expressions in the same ambient context (else UsageError).
SpaceExpr product(const SpaceExpr& a, const SpaceExpr& b);

/// Applies Omega to every factor (loop degree +1 each).
SpaceExpr loop(const SpaceExpr& e);

/**
 * Renders in canonical order, e.g. "O^2(U/O) x (OU)^3 x (OO)^1".
 * Loop spaces print with Omega spelled "O": one loop as "(OU)^m" (the
 * multiplicity is always shown), k >= 2 loops as "O^k(U)" with the
 * multiplicity shown only when it exceeds one.  P-local factors carry a
 * suffix such as " (p-local: p≠2, p∤n)".  An empty product renders
 * "point".
 */
std::string render(const SpaceExpr& e);

}  // namespace gauge
