#pragma once

#include <optional>
#include <string>
#include <vector>

#include "romank/kmn.hpp"
#include "romank/solve.hpp"

namespace romank {

// Inclusive grid of K_{m,n} cells; cells with m > n are skipped since the
// m <= n mirror cell already covers them.
struct SweepSpec {
    int m_lo = 1, m_hi = 4;
    int n_lo = 1, n_hi = 6;
    int k_lo = 1, k_hi = 6;
    std::vector<Variant> variants{Variant::roman, Variant::perfect, Variant::strong,
                                  Variant::perfect_strong};
    int jobs = 1;
};

struct CellResult {
    int m = 0, n = 0, k = 0;
    Variant variant = Variant::roman;
    FormulaResult formula;
    long long solver_value = -1;
    bool match = false;
    std::string error;  // nonempty when the cell could not be solved
};

struct VerifyReport {
    std::vector<CellResult> cells;
    int exact_mismatches = 0;      // formula says Exact(v), solver disagrees
    int containment_failures = 0;  // solver value outside a one_of/range set
    int flagged = 0;               // cells that errored out (caps/budget)

    int discrepancies() const { return exact_mismatches + containment_failures; }
    std::string to_json() const;
};

// Formula-vs-solver comparison over the whole grid; cells are evaluated
// concurrently when spec.jobs > 1 and reported in (m, n, k, variant)
// order regardless of schedule.
VerifyReport run_verify(const SweepSpec& spec);

enum class TableFormat { csv, markdown };

// Case-table rendering for one variant over the grid, one row per
// (m, n, k): formula value, case label, solver value, match flag.
std::string render_table(Variant variant, const SweepSpec& spec, TableFormat format);

std::string formula_result_to_json(const FormulaResult& fr,
                                   std::optional<long long> resolved = std::nullopt);

}  // namespace romank
