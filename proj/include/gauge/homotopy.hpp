#pragma once

/**
 * @file homotopy.hpp
 * @brief Stable homotopy of the atoms and assembly of homotopy groups of
 *        gauge groups from their decompositions.
 *
 * In the stable range the homotopy of the atoms is periodic (period 2 for
 * U, period 8 for the orthogonal and symplectic atoms and the quotients).
 * The quotient tables agree with the loop-shift identities
 * pi_d(U/O) = pi_{d-2}(O) and pi_d(U/Sp) = pi_{d-2}(Sp) for every d >= 2,
 * with pi_1 of each quotient pinned to Z.
 *
 * The stable identification is valid only while the queried degree i is
 * small against the rank: n > i + 2 in the Real family, 2n > (i+1)/4 in
 * the Quaternionic family (rank here is the unitary rank, 2n).  Queries
 * beyond the bound are refused rather than extrapolated.
 *
 * Residual gauge groups contribute only their component group pi_0, taken
 * from the classification of components (valid for Real rank > 2); in
 * positive degrees a residual contributes an explicit unknown marker.
 */

#include <array>
#include <variant>

#include "gauge/decompose.hpp"
#include "gauge/spaces.hpp"

namespace gauge {

/// Periodic homotopy data of one atom.
struct AtomPiTable {
  BasicAtom atom = BasicAtom::U;
  int period = 8;                     ///< 2 for U, 8 for the rest, 0 for S1
  std::array<FgAbGroup, 8> entries;   ///< entries[d % period] for d >= 1
  FgAbGroup pi0;                      ///< the degree-0 value
};

/// The table for one atom.
const AtomPiTable& atom_table(BasicAtom a);

/// Stable pattern value pi_d(atom), defined for every d >= 0 with no range
/// enforcement.  Used internally and by the table emitters.
FgAbGroup stable_pi(BasicAtom a, int d);

/// True when degree lies inside the stable range at this rank.
bool within_stable_bound(Family family, int rank, int degree);

/// The bound formula as text, e.g. "n > i+2".
std::string stable_bound_text(Family family);

/// Refusal marker for atom_pi.
struct PiRangeError {
  std::string violated_bound;
};

/**
 * pi_degree(atom) at the given ambient rank, refusing (PiRangeError) when
 * the stable bound fails at that degree.
 */
std::variant<FgAbGroup, PiRangeError> atom_pi(BasicAtom a, int degree, int rank, Family family);

/**
 * The component group pi_0 of a residual gauge group.  Unpointed residuals
 * follow the component-count formulas (Real: Z^g x (Z/2)^{r+1}; Quaternionic:
 * Z^g x (Z/2)^a); pointed residuals over the minimal types have tabulated
 * values.  Throws UnsupportedQuery when the Real rank condition (n > 2)
 * fails or when no data exists (pointed residuals over non-minimal types).
 */
FgAbGroup residual_pi0(const ResidualAtom& res, int rank);

/**
 * Evaluates pi_degree of a product expression: every factor Omega^k(A)^m
 * contributes pi_{degree+k}(A)^m to the term matching its locality tag;
 * residual factors contribute pi_0 in degree 0 and an unknown marker in
 * positive degrees.  When enforce_bound is set, atoms outside the stable
 * range contribute OutOfStableRange markers instead of values.  The request
 * determines the reason attached to unexpanded residuals in positive
 * degrees: NoIntegralData for integral requests, ConditionsUnsatisfied for
 * AtPrime requests (every p-local rule was tried).
 */
GroupAnswer eval_pi(const SpaceExpr& expr, int degree, const LocalityRequest& req,
                    bool enforce_bound = true);

/// pi_degree of the gauge group named by id: decompose, then evaluate.
GroupAnswer pi(const GaugeGroupId& id, int degree,
               const LocalityRequest& req = LocalityRequest::integral());

}  // namespace gauge
