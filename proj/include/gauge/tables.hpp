#pragma once

/**
 * @file tables.hpp
 * @brief Reference-table reconstruction: the component/fundamental-group
 *        table and the two periodic higher-homotopy tables, each emitted
 *        from the engine and compared cell-by-cell against the published
 *        closed-form patterns.
 *
 * The higher tables list pi_{8j+k} (k = 0..7) as an integral part plus a
 * p-local part written (-)_p.  The engine's answer is compared under this
 * merge convention:
 *
 *   1. any unknown summand           -> mismatch;
 *   2. the formula's integral part must embed in the engine's integral
 *      part (free rank and torsion multiset), else mismatch;
 *   3. the engine surplus S (integral minus formula-integral) is pooled
 *      with all engine p-local terms into K;
 *   4. K equal to the formula's p-local part -> exact match, or
 *      "stronger than table" when S is non-trivial (the engine proved
 *      integrally what the table only claims p-locally);
 *   5. else K and the formula's p-local part are compared after literal
 *      localization at the representative odd prime -- 2-torsion recorded
 *      inside (-)_p is bookkeeping of the p-local factors and is invisible
 *      at any odd p;
 *   6. anything else is a mismatch.
 *
 * Emitters accept block index j beyond the strict stable bound: rows are
 * computed from the period patterns and annotated with
 * within_caption_bound; only a block whose first degree 8j already
 * violates the bound is refused.
 */

#include <array>

#include "gauge/homotopy.hpp"

namespace gauge {

// ---- component/fundamental-group table ---------------------------------

/// One rendered cell: the engine's answer plus an annotation ("", or
/// "corrected; paper: ...", or "incomplete").
struct Table1Cell {
  GroupAnswer answer;
  FgAbGroup paper;        ///< the published formula, instantiated
  std::string annotation;
};

struct Table1Row {
  SurfaceType type;
  Table1Cell pi0_multi, pi0_unpointed, pi1_multi, pi1_unpointed;
};

struct Table1 {
  Family family = Family::Real;
  int rank = 3;
  std::vector<Table1Row> rows;
  std::vector<std::string> low_rank_notes;  ///< display-only low-rank data
};

/**
 * Emits the component/fundamental-group table for every valid type with
 * g <= g_max at the given rank (Real requires rank > 2; Quaternionic rank
 * is the even unitary rank).  Fundamental-group cells whose engine value
 * is fully known but differs from the published formula are annotated
 * "corrected; paper: ..."; cells containing unknowns are annotated
 * "incomplete".
 */
Table1 emit_table1(Family family, int rank, int g_max);

/// Published component-group formula (pi_0) for the given flavor.
FgAbGroup table1_pi0_formula(Family family, Flavor flavor, const SurfaceType& t);

/// Published fundamental-group formula (pi_1) for the given flavor.
FgAbGroup table1_pi1_formula(Family family, Flavor flavor, const SurfaceType& t);

// ---- periodic higher-homotopy tables ------------------------------------

/// One table cell as published: an integral part plus a p-local part.
struct FormulaCell {
  FgAbGroup integral;
  FgAbGroup p_local;

  friend bool operator==(const FormulaCell&, const FormulaCell&) = default;
};

/// Published pattern row instantiated at a type (exponents clamped at 0).
struct TableFormulaRow {
  FormulaCell multi, unpointed;

  friend bool operator==(const TableFormulaRow&, const TableFormulaRow&) = default;
};

/// The Real-family pattern for pi_{8j+k}, k = 0..7.
TableFormulaRow table2_formula(const SurfaceType& t, int k);

/// The Quaternionic-family pattern for pi_{8j+k}, k = 0..7.
TableFormulaRow table3_formula(const SurfaceType& t, int k);

/// Verdict of the engine-vs-formula comparison for one cell.
enum class CellMatch { Exact, StrongerThanTable, MatchAtOddPrime, Mismatch };

std::string render(CellMatch m);

/// True for every verdict except Mismatch.
bool is_match(CellMatch m);

/// The comparison described in the file header.
CellMatch classify_cell(const GroupAnswer& engine, const FormulaCell& formula, std::int64_t p);

struct InstanceCell {
  GroupAnswer engine;
  FormulaCell formula;
  CellMatch match = CellMatch::Mismatch;
};

struct InstanceRow {
  int degree = 0;
  bool within_caption_bound = true;
  InstanceCell multi, unpointed;
};

struct TableInstance {
  Family family = Family::Real;
  SurfaceType type;
  int rank = 3;
  int j = 0;
  std::int64_t prime = 3;  ///< representative prime used for comparison
  std::array<InstanceRow, 8> rows;
};

/**
 * The smallest prime usable as the representative localization prime:
 * the smallest odd prime not dividing the rank (Real), or the smallest
 * prime not dividing the rank = 2n (Quaternionic; automatically odd).
 */
std::int64_t representative_prime(Family family, int rank);

/**
 * Emits the pi_{8j+k} block (k = 0..7) for a Real surface type at rank n,
 * comparing the engine against the Real pattern.  Refuses
 * (UnsupportedQuery) only when the first degree 8j already violates the
 * stable bound n > i+2.
 */
TableInstance emit_table2_instance(const SurfaceType& t, int n, int j);

/**
 * The Quaternionic counterpart at even unitary rank 2n; the bound is
 * 2n > (i+1)/4.
 */
TableInstance emit_table3_instance(const SurfaceType& t, int rank, int j);

// ---- rendering -----------------------------------------------------------

std::string render_markdown(const Table1& t);
std::string render_markdown(const TableInstance& t);
std::string render(const FormulaCell& cell);

}  // namespace gauge
