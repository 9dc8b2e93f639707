#include "romank/verify.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace romank {

namespace {

std::vector<CellResult> make_cells(const SweepSpec& spec) {
    std::vector<CellResult> cells;
    for (int m = spec.m_lo; m <= spec.m_hi; ++m)
        for (int n = std::max(m, spec.n_lo); n <= spec.n_hi; ++n)
            for (int k = spec.k_lo; k <= spec.k_hi; ++k)
                for (Variant v : spec.variants) cells.push_back({m, n, k, v, {}, -1, false, ""});
    return cells;
}

void evaluate(CellResult& cell) {
    cell.formula = formula_for(cell.variant, cell.m, cell.n, cell.k);
    try {
        cell.solver_value = solve_kmn_multiset(cell.m, cell.n, cell.k, cell.variant).value;
        cell.match = cell.formula.contains(cell.solver_value);
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
}

const char* kind_name(FormulaResult::Kind kind) {
    switch (kind) {
        case FormulaResult::Kind::exact: return "exact";
        case FormulaResult::Kind::one_of: return "one_of";
        case FormulaResult::Kind::range: return "range";
    }
    return "?";
}

}  // namespace

VerifyReport run_verify(const SweepSpec& spec) {
    VerifyReport report;
    report.cells = make_cells(spec);
    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (CellResult& cell : report.cells) evaluate(cell);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < report.cells.size();
                     i = next.fetch_add(1))
                    evaluate(report.cells[i]);
            });
        for (auto& th : pool) th.join();
    }
    for (const CellResult& cell : report.cells) {
        if (!cell.error.empty())
            ++report.flagged;
        else if (!cell.match)
            (cell.formula.is_exact() ? report.exact_mismatches : report.containment_failures)++;
    }
    return report;
}

std::string VerifyReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CellResult& c : cells) {
        nlohmann::json row{{"m", c.m},
                           {"n", c.n},
                           {"k", c.k},
                           {"variant", to_string(c.variant)},
                           {"formula", c.formula.describe()},
                           {"kind", kind_name(c.formula.kind)},
                           {"case", c.formula.case_label},
                           {"match", c.match}};
        if (c.error.empty())
            row["solver"] = c.solver_value;
        else
            row["error"] = c.error;
        arr.push_back(std::move(row));
    }
    nlohmann::json j{{"cells", arr},
                     {"cells_checked", cells.size()},
                     {"exact_mismatches", exact_mismatches},
                     {"containment_failures", containment_failures},
                     {"flagged", flagged},
                     {"discrepancies", discrepancies()}};
    return j.dump(2);
}

std::string render_table(Variant variant, const SweepSpec& spec, TableFormat format) {
    SweepSpec one = spec;
    one.variants = {variant};
    VerifyReport report = run_verify(one);
    std::ostringstream out;
    if (format == TableFormat::csv) {
        out << "m,n,k,formula,case,solver,match\n";
        for (const CellResult& c : report.cells)
            out << c.m << ',' << c.n << ',' << c.k << ',' << c.formula.describe() << ",\""
                << c.formula.case_label << "\"," << c.solver_value << ','
                << (c.match ? "yes" : "NO") << '\n';
    } else {
        out << "| m | n | k | formula | case | solver | match |\n";
        out << "|---|---|---|---------|------|--------|-------|\n";
        for (const CellResult& c : report.cells)
            out << "| " << c.m << " | " << c.n << " | " << c.k << " | " << c.formula.describe()
                << " | " << c.formula.case_label << " | " << c.solver_value << " | "
                << (c.match ? "yes" : "NO") << " |\n";
    }
    return out.str();
}

std::string formula_result_to_json(const FormulaResult& fr, std::optional<long long> resolved) {
    nlohmann::json j{{"kind", kind_name(fr.kind)}, {"case", fr.case_label}};
    switch (fr.kind) {
        case FormulaResult::Kind::exact: j["value"] = fr.a; break;
        case FormulaResult::Kind::one_of:
            j["a"] = fr.a;
            j["b"] = fr.b;
            break;
        case FormulaResult::Kind::range:
            j["lo"] = fr.a;
            j["hi"] = fr.b;
            break;
    }
    if (resolved) j["resolved"] = *resolved;
    return j.dump();
}

}  // namespace romank
