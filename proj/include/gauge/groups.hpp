#pragma once

/**
 * @file groups.hpp
 * @brief Finitely generated abelian groups in primary decomposition, and the
 *        locality-tagged answer type returned by homotopy-group queries.
 *
 * Every group handled by the calculator is finitely generated abelian, so it
 * is determined by a free rank together with a finite multiset of cyclic
 * prime-power summands Z/p^e.  We keep groups in primary decomposition at all
 * times; invariant-factor input is factored on construction.
 *
 * Some homotopy-group computations are only valid after localization at a
 * prime p subject to side conditions (p odd, p coprime to the bundle rank,
 * p equal to the rank).  Such contributions are kept in separate terms
 * tagged with a Locality rather than being merged into the integral part:
 * the group stored in a p-local term is the honest homotopy group of the
 * p-local factor, not its literal localization.
 */

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gauge {

/// Error in the caller's input (bad flag value, malformed class, invalid
/// surface type).  The command-line tool maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structurally well-formed query that the calculator cannot answer
/// (stable-range bound violated, unsupported table block).  The
/// command-line tool maps this to exit code 3.
struct UnsupportedQuery : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One cyclic prime-power summand Z/p^e.
struct TorsionPiece {
  std::int64_t prime = 2;  ///< prime p
  int exponent = 1;        ///< exponent e >= 1

  /// The order p^e of the summand.
  std::int64_t order() const;

  friend auto operator<=>(const TorsionPiece&, const TorsionPiece&) = default;
};

/**
 * A finitely generated abelian group  Z^free_rank (+) sum of Z/p^e,
 * with the torsion multiset kept sorted by (prime, exponent).
 */
struct FgAbGroup {
  int free_rank = 0;
  std::vector<TorsionPiece> torsion;

  /// The trivial group.
  static FgAbGroup zero();
  /// Free abelian group Z^rank (rank >= 0).
  static FgAbGroup free(int rank);
  /// Cyclic group Z/q for q >= 1, split into prime-power summands.
  static FgAbGroup cyclic(std::int64_t q);

  bool is_trivial() const;

  /// Sorts the torsion multiset into canonical order.
  void normalize();

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

/// Direct sum, reported in canonical order.
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// k-fold direct sum of g with itself (k >= 0).
FgAbGroup direct_power(const FgAbGroup& g, int k);

/**
 * Builds a group from an invariant-factor presentation
 * Z^free_rank (+) Z/f1 (+) ... (+) Z/fk.  Factors equal to 1 are dropped;
 * a factor equal to 0 is rejected (UsageError) -- free summands must be
 * passed through free_rank, never encoded as Z/0.
 */
FgAbGroup from_invariant_factors(const std::vector<std::int64_t>& factors,
                                 int free_rank = 0);

/**
 * Localization at the prime p: keeps the free part and exactly the p-primary
 * torsion.  This is the literal algebraic operation, used by the strict view
 * of p-local answers and by table comparisons at a representative prime.
 */
FgAbGroup localize(const FgAbGroup& g, std::int64_t p);

/**
 * Renders a group as "Z^a x Z/q1 x Z/q2 x ...", one factor per torsion
 * summand ("Z" for rank one, "0" for the trivial group).  Example:
 * rank 1 with torsion {2^3} renders "Z x Z/8".
 */
std::string render(const FgAbGroup& g);

/**
 * Renders with equal cyclic summands collapsed into powers, e.g.
 * "Z^3 x Z/2^2".  Used by answers and table cells.
 */
std::string render_collapsed(const FgAbGroup& g);

/**
 * Side conditions attached to a p-local equivalence.  At most one of
 * coprime_to_rank / equals_rank may hold; exclude_two may combine with
 * either.  In the Real family coprime_to_rank reads "p does not divide n";
 * in the Quaternionic family it reads "p does not divide 2n".
 */
struct PrimeConstraint {
  bool exclude_two = false;
  bool coprime_to_rank = false;
  bool equals_rank = false;

  /// Union of two constraint sets (both sides must remain consistent).
  PrimeConstraint merged_with(const PrimeConstraint& other) const;

  friend auto operator<=>(const PrimeConstraint&, const PrimeConstraint&) = default;
};

/// Tag telling whether a contribution holds integrally or only p-locally.
struct Locality {
  enum class Kind { Integral, PLocal };

  Kind kind = Kind::Integral;
  PrimeConstraint constraint;  ///< meaningful only when kind == PLocal

  static Locality integral();
  static Locality p_local(PrimeConstraint c);

  bool is_integral() const { return kind == Kind::Integral; }

  friend auto operator<=>(const Locality&, const Locality&) = default;
};

/// Why a summand of an answer could not be computed.
enum class UnknownReason {
  NoIntegralData,         ///< residual factor has no integral data in this degree
  OutOfStableRange,       ///< stable-range bound fails for the queried degree
  ConditionsUnsatisfied,  ///< no applicable p-local rule (or class blocks all rules)
};

/// Marker for a summand the calculator declines to compute.
struct UnknownSummand {
  std::string atom;  ///< atom identifier (see module spaces)
  int degree = 0;    ///< degree at which the atom's homotopy is needed
  UnknownReason reason = UnknownReason::NoIntegralData;

  friend bool operator==(const UnknownSummand&, const UnknownSummand&) = default;
};

/**
 * The result of a homotopy-group query: locality-tagged terms plus markers
 * for anything unknown.  Terms with identical locality are merged; the term
 * list is kept in canonical order (integral first, then p-local terms sorted
 * by constraint).  Trivial p-local terms are retained so the answer shows
 * that a p-local contribution was considered and found to vanish.
 */
struct GroupAnswer {
  std::vector<std::pair<FgAbGroup, Locality>> terms;
  std::vector<UnknownSummand> unknowns;

  /// Adds g to the term with the given locality, creating it if absent.
  void add(const FgAbGroup& g, const Locality& loc);

  /// Records an unknown summand.
  void add_unknown(UnknownSummand u);

  /// Merges duplicates and sorts terms/unknowns into canonical order.
  void normalize();

  /// True when there are no unknowns and every term is trivial.
  bool is_trivial() const;

  /// The integral term, or the trivial group when absent.
  FgAbGroup integral_part() const;

  /// Direct sum of all p-local terms regardless of constraint.
  FgAbGroup p_local_part() const;

  friend bool operator==(const GroupAnswer&, const GroupAnswer&) = default;
};

/// Human-readable reason text, e.g. "no integral data".
std::string describe(UnknownReason r);

/**
 * Renders a constraint list such as "p≠2, p∤n".  The rank-coprimality
 * condition reads "p∤2n" when quaternionic is true.
 */
std::string render(const PrimeConstraint& c, bool quaternionic);

/**
 * Renders an answer, e.g. "Z^3 x Z/2^2", "Z^2 + (0)_{p≠2}", or
 * "Z^2 + ? pi_2(G_Q*((0,0,1);0)) [no integral data]".
 */
std::string render(const GroupAnswer& a, bool quaternionic = false);

}  // namespace gauge
