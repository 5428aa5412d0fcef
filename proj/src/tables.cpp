#include "gauge/tables.hpp"

#include <algorithm>
#include <sstream>

namespace gauge {

namespace {

FgAbGroup Z2pow(int k) { return direct_power(FgAbGroup::cyclic(2), std::max(k, 0)); }

FgAbGroup free_part(int k) { return FgAbGroup::free(std::max(k, 0)); }

/// Multiset containment: does sub embed into sup as a direct summand with
/// matching generators (free rank and torsion pieces)?
bool contains(const FgAbGroup& sup, const FgAbGroup& sub) {
  if (sub.free_rank > sup.free_rank) return false;
  std::vector<TorsionPiece> pool = sup.torsion;
  for (const TorsionPiece& t : sub.torsion) {
    auto it = std::find(pool.begin(), pool.end(), t);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

/// sup minus sub (requires contains(sup, sub)).
FgAbGroup subtract(const FgAbGroup& sup, const FgAbGroup& sub) {
  FgAbGroup out;
  out.free_rank = sup.free_rank - sub.free_rank;
  out.torsion = sup.torsion;
  for (const TorsionPiece& t : sub.torsion) {
    auto it = std::find(out.torsion.begin(), out.torsion.end(), t);
    out.torsion.erase(it);
  }
  out.normalize();
  return out;
}

/// Linear exponent base + cg*g + cr*r + ca*a + ce*eta, clamped at zero on
/// instantiation.
struct Lin {
  int base = 0, cg = 0, cr = 0, ca = 0, ce = 0;

  int at(const SurfaceType& t) const {
    return base + cg * t.g + cr * t.r + ca * t.a + ce * eta(t);
  }
};

/// One published cell: free/torsion exponents of the integral part and the
/// p-local part (torsion counts Z/2 summands).
struct CellSpec {
  Lin int_free, int_tor, p_free, p_tor;

  FormulaCell at(const SurfaceType& t) const {
    return {direct_sum(free_part(int_free.at(t)), Z2pow(int_tor.at(t))),
            direct_sum(free_part(p_free.at(t)), Z2pow(p_tor.at(t)))};
  }
};

struct RowSpec {
  CellSpec multi, unpointed;
};

// The published Real-family patterns for pi_{8j+k}.  Lin{base,cg,cr,ca,ce}.
constexpr Lin kZero{};
const std::array<RowSpec, 8> kTable2 = {{
    // k = 0
    {{Lin{-1, 1}, Lin{-1, 0, 1}, Lin{1, 0, 0, 1}, Lin{1, 0, 0, 0, 1}},
     {Lin{-1, 1}, Lin{-1, 0, 1}, Lin{1}, Lin{1, 0, 0, 0, 1}}},
    // k = 1
    {{kZero, kZero, kZero, Lin{1, 0, 0, 1}},
     {kZero, Lin{-1, 0, 1}, kZero, Lin{2, 0, 0, 0, 1}}},
    // k = 2
    {{Lin{-2, 1, 1}, kZero, Lin{1, 0, 0, 0, 1}, Lin{0, 0, 0, 1}},
     {Lin{-1, 1}, Lin{-1, 0, 1}, Lin{1}, Lin{0, 0, 0, 0, 1}}},
    // k = 3
    {{kZero, kZero, Lin{1}, kZero}, {kZero, kZero, Lin{2}, kZero}},
    // k = 4
    {{Lin{-1, 1}, kZero, Lin{1, 0, 0, 1}, kZero}, {Lin{-1, 1}, kZero, Lin{1}, kZero}},
    // k = 5
    {{kZero, kZero, kZero, kZero}, {kZero, kZero, kZero, kZero}},
    // k = 6
    {{Lin{-2, 1, 1}, kZero, Lin{1, 0, 0, 0, 1}, kZero},
     {Lin{-1, 1}, kZero, Lin{1, 0, 0, 0, -1}, kZero}},
    // k = 7
    {{kZero, Lin{-1, 0, 1}, Lin{1}, Lin{0, 0, 0, 0, 1}},
     {kZero, Lin{-1, 0, 1}, Lin{2}, Lin{0, 0, 0, 0, 1}}},
}};

// The published Quaternionic-family patterns for pi_{8j+k}; transcribed
// independently of kTable2 (tests confirm the degree-shift relation).
const std::array<RowSpec, 8> kTable3 = {{
    // k = 0
    {{Lin{-1, 1}, kZero, Lin{1, 0, 0, 1}, kZero}, {Lin{-1, 1}, kZero, Lin{1}, kZero}},
    // k = 1
    {{kZero, kZero, kZero, kZero}, {kZero, kZero, kZero, kZero}},
    // k = 2
    {{Lin{-2, 1, 1}, kZero, Lin{1, 0, 0, 0, 1}, kZero},
     {Lin{-1, 1}, kZero, Lin{1, 0, 0, 0, -1}, kZero}},
    // k = 3
    {{kZero, Lin{-1, 0, 1}, Lin{1}, Lin{0, 0, 0, 0, 1}},
     {kZero, Lin{-1, 0, 1}, Lin{2}, Lin{0, 0, 0, 0, 1}}},
    // k = 4
    {{Lin{-1, 1}, Lin{-1, 0, 1}, Lin{1, 0, 0, 1}, Lin{1, 0, 0, 0, 1}},
     {Lin{-1, 1}, Lin{-1, 0, 1}, Lin{1}, Lin{1, 0, 0, 0, 1}}},
    // k = 5
    {{kZero, kZero, kZero, Lin{1, 0, 0, 1}},
     {kZero, Lin{-1, 0, 1}, kZero, Lin{2, 0, 0, 0, 1}}},
    // k = 6
    {{Lin{-2, 1, 1}, kZero, Lin{1, 0, 0, 0, 1}, Lin{0, 0, 0, 1}},
     {Lin{-1, 1}, Lin{-1, 0, 1}, Lin{1}, Lin{0, 0, 0, 0, 1}}},
    // k = 7
    {{kZero, kZero, Lin{1}, kZero}, {kZero, kZero, Lin{2}, kZero}},
}};

GaugeGroupId table_id(Family family, Flavor flavor, const SurfaceType& t, int rank) {
  if (family == Family::Real)
    return make_real_id(flavor, t, 0, std::vector<int>(t.r, 0), rank);
  return make_quat_id(flavor, t, 0, rank);
}

std::string annotate(const GroupAnswer& engine, const FgAbGroup& paper) {
  if (!engine.unknowns.empty()) return "incomplete";
  FgAbGroup total;
  for (const auto& [group, locality] : engine.terms) total = direct_sum(total, group);
  if (total == paper) return "";
  return "corrected; paper: " + render_collapsed(paper);
}

TableInstance emit_instance(Family family, const SurfaceType& t, int rank, int j) {
  if (t.r < 1)
    throw UnsupportedQuery("the periodic tables are stated for types with r >= 1");
  if (j < 0) throw UsageError("block index j must be non-negative");
  if (!within_stable_bound(family, rank, 8 * j))
    throw UnsupportedQuery("block pi_{8j}..pi_{8j+7} starts outside the stable bound " +
                           stable_bound_text(family));
  TableInstance inst;
  inst.family = family;
  inst.type = t;
  inst.rank = rank;
  inst.j = j;
  inst.prime = representative_prime(family, rank);
  const LocalityRequest req = LocalityRequest::at_prime(inst.prime);
  const SpaceExpr multi = decompose(table_id(family, Flavor::MultiPointed, t, rank), req);
  const SpaceExpr unpointed = decompose(table_id(family, Flavor::Unpointed, t, rank), req);
  for (int k = 0; k < 8; ++k) {
    const int degree = 8 * j + k;
    InstanceRow& row = inst.rows[static_cast<std::size_t>(k)];
    row.degree = degree;
    row.within_caption_bound = within_stable_bound(family, rank, degree);
    const TableFormulaRow formula =
        family == Family::Real ? table2_formula(t, k) : table3_formula(t, k);
    row.multi.engine = eval_pi(multi, degree, req, /*enforce_bound=*/false);
    row.multi.formula = formula.multi;
    row.multi.match = classify_cell(row.multi.engine, row.multi.formula, inst.prime);
    row.unpointed.engine = eval_pi(unpointed, degree, req, /*enforce_bound=*/false);
    row.unpointed.formula = formula.unpointed;
    row.unpointed.match = classify_cell(row.unpointed.engine, row.unpointed.formula, inst.prime);
  }
  return inst;
}

}  // namespace

FgAbGroup table1_pi0_formula(Family family, Flavor flavor, const SurfaceType& t) {
  if (family == Family::Real) {
    if (flavor == Flavor::Unpointed)
      return direct_sum(FgAbGroup::free(t.g), Z2pow(t.r + 1));
    return direct_sum(FgAbGroup::free(t.g + t.a), Z2pow(t.r));
  }
  if (flavor == Flavor::Unpointed) return direct_sum(FgAbGroup::free(t.g), Z2pow(t.a));
  return FgAbGroup::free(t.g + t.a);
}

FgAbGroup table1_pi1_formula(Family family, Flavor flavor, const SurfaceType& t) {
  if (family == Family::Real && flavor == Flavor::Unpointed)
    return direct_sum(FgAbGroup::free(1), Z2pow(t.r));
  return FgAbGroup::free(1);
}

Table1 emit_table1(Family family, int rank, int g_max) {
  if (family == Family::Real && rank <= 2)
    throw UnsupportedQuery("the component table at rank n <= 2 is reference data only");
  if (family == Family::Quaternionic && rank % 2 != 0)
    throw UsageError("Quaternionic rank must be even");
  Table1 table;
  table.family = family;
  table.rank = rank;
  for (const SurfaceType& t : enumerate_surfaces(g_max)) {
    Table1Row row;
    row.type = t;
    auto fill = [&](Flavor flavor, int degree, Table1Cell& cell) {
      cell.answer = pi(table_id(family, flavor, t, rank), degree);
      cell.paper = degree == 0 ? table1_pi0_formula(family, flavor, t)
                               : table1_pi1_formula(family, flavor, t);
      cell.annotation = annotate(cell.answer, cell.paper);
    };
    fill(Flavor::MultiPointed, 0, row.pi0_multi);
    fill(Flavor::Unpointed, 0, row.pi0_unpointed);
    fill(Flavor::MultiPointed, 1, row.pi1_multi);
    fill(Flavor::Unpointed, 1, row.pi1_unpointed);
    table.rows.push_back(std::move(row));
  }
  if (family == Family::Real) {
    table.low_rank_notes = {
        "rank 2: pi_0 = Z^{g+a+r} (multi) | Z^{g+r} x Z/2 (unpointed); "
        "pi_1 = Z (multi) | Z^{r+1} (unpointed)",
        "rank 1: pi_0 = Z^{g+a} (multi) | Z^g x Z/2 (unpointed); "
        "pi_1 = 0 (multi) | 0 (unpointed)",
    };
  }
  return table;
}

TableFormulaRow table2_formula(const SurfaceType& t, int k) {
  if (k < 0 || k > 7) throw UsageError("degree offset k must lie in 0..7");
  const RowSpec& spec = kTable2[static_cast<std::size_t>(k)];
  return {spec.multi.at(t), spec.unpointed.at(t)};
}

TableFormulaRow table3_formula(const SurfaceType& t, int k) {
  if (k < 0 || k > 7) throw UsageError("degree offset k must lie in 0..7");
  const RowSpec& spec = kTable3[static_cast<std::size_t>(k)];
  return {spec.multi.at(t), spec.unpointed.at(t)};
}

std::string render(CellMatch m) {
  switch (m) {
    case CellMatch::Exact: return "match";
    case CellMatch::StrongerThanTable: return "stronger_than_table";
    case CellMatch::MatchAtOddPrime: return "match_at_odd_p";
    case CellMatch::Mismatch: return "MISMATCH";
  }
  return "?";
}

bool is_match(CellMatch m) { return m != CellMatch::Mismatch; }

CellMatch classify_cell(const GroupAnswer& engine, const FormulaCell& formula, std::int64_t p) {
  if (!engine.unknowns.empty()) return CellMatch::Mismatch;
  const FgAbGroup e_int = engine.integral_part();
  if (!contains(e_int, formula.integral)) return CellMatch::Mismatch;
  const FgAbGroup surplus = subtract(e_int, formula.integral);
  const FgAbGroup pooled = direct_sum(surplus, engine.p_local_part());
  if (pooled == formula.p_local)
    return surplus.is_trivial() ? CellMatch::Exact : CellMatch::StrongerThanTable;
  if (localize(pooled, p) == localize(formula.p_local, p)) return CellMatch::MatchAtOddPrime;
  return CellMatch::Mismatch;
}

std::int64_t representative_prime(Family family, int rank) {
  for (std::int64_t p = family == Family::Real ? 3 : 2;; ++p) {
    if (!is_prime(p)) continue;
    if (family == Family::Real && p == 2) continue;
    if (rank % p != 0) return p;
  }
}

TableInstance emit_table2_instance(const SurfaceType& t, int n, int j) {
  return emit_instance(Family::Real, t, n, j);
}

TableInstance emit_table3_instance(const SurfaceType& t, int rank, int j) {
  if (rank % 2 != 0) throw UsageError("Quaternionic rank must be even");
  return emit_instance(Family::Quaternionic, t, rank, j);
}

std::string render(const FormulaCell& cell) {
  if (cell.integral.is_trivial() && cell.p_local.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (!cell.integral.is_trivial()) {
    os << render_collapsed(cell.integral);
    first = false;
  }
  if (!cell.p_local.is_trivial()) {
    if (!first) os << " + ";
    os << "(" << render_collapsed(cell.p_local) << ")_p";
  }
  return os.str();
}

namespace {

std::string cell_text(const Table1Cell& cell, bool quaternionic) {
  std::string out = render(cell.answer, quaternionic);
  if (!cell.annotation.empty()) out += " [" + cell.annotation + "]";
  return out;
}

}  // namespace

std::string render_markdown(const Table1& t) {
  std::ostringstream os;
  const bool quat = t.family == Family::Quaternionic;
  os << "# Components and fundamental groups (" << render(t.family) << ", rank " << t.rank
     << ")\n\n";
  os << "| type | pi_0 multi | pi_0 unpointed | pi_1 multi | pi_1 unpointed |\n";
  os << "|------|------------|----------------|------------|----------------|\n";
  for (const Table1Row& row : t.rows) {
    os << "| " << render(row.type) << " | " << cell_text(row.pi0_multi, quat) << " | "
       << cell_text(row.pi0_unpointed, quat) << " | " << cell_text(row.pi1_multi, quat) << " | "
       << cell_text(row.pi1_unpointed, quat) << " |\n";
  }
  for (const std::string& note : t.low_rank_notes) os << "\nnote (display only): " << note;
  if (!t.low_rank_notes.empty()) os << "\n";
  return os.str();
}

std::string render_markdown(const TableInstance& t) {
  std::ostringstream os;
  const bool quat = t.family == Family::Quaternionic;
  os << "# pi_{8j+k} block (" << render(t.family) << ", type " << render(t.type) << ", rank "
     << t.rank << ", j = " << t.j << ", representative prime p = " << t.prime << ")\n\n";
  os << "| i | multi engine | multi table | verdict | unpointed engine | unpointed table | "
        "verdict | in bound |\n";
  os << "|---|--------------|-------------|---------|------------------|-----------------|"
        "---------|----------|\n";
  for (const InstanceRow& row : t.rows) {
    os << "| " << row.degree << " | " << render(row.multi.engine, quat) << " | "
       << render(row.multi.formula) << " | " << render(row.multi.match) << " | "
       << render(row.unpointed.engine, quat) << " | " << render(row.unpointed.formula) << " | "
       << render(row.unpointed.match) << " | " << (row.within_caption_bound ? "yes" : "no")
       << " |\n";
  }
  return os.str();
}

}  // namespace gauge
