#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "romank/solve.hpp"
#include "romank/weights.hpp"

namespace romank {

// Closed-form answer for one (m, n, k) cell: either an exact value, one of
// two candidates, or a lower/upper bound pair. case_label names the case
// row that fired (for ranges it also keeps the raw rational bound).
struct FormulaResult {
    enum class Kind { exact, one_of, range };
    Kind kind = Kind::exact;
    long long a = 0;
    long long b = 0;
    std::string case_label;

    static FormulaResult exact(long long v, std::string label);
    static FormulaResult one_of(long long x, long long y, std::string label);  // x < y
    static FormulaResult range(long long lo, long long hi, std::string label);

    bool is_exact() const { return kind == Kind::exact; }
    bool contains(long long v) const;
    std::string describe() const;  // "6", "17 or 18", "5..12"
};

// Integral solution of one of the hub/low linear systems on K_{m,n}:
// i is the uniform low value on side A apart from its hub (if any), j the
// same for side B; hub values always satisfy 2*hub >= k and hub <= k.
struct SystemSolution {
    int i = 0;
    int j = 0;
    std::optional<int> hub_a;  // f(u_1)
    std::optional<int> hub_b;  // f(v_1)
    long long weight = 0;
    std::string system;  // "1.1.1", "1.1.1-swapped", "1.2", "1.3"
};

// Case tables for the four domination numbers of K_{m,n}. Arguments are
// normalized to m <= n first (K_{m,n} and K_{n,m} are isomorphic).
FormulaResult gamma_ps_kmn(int m, int n, int k);
FormulaResult gamma_s_kmn(int m, int n, int k);
FormulaResult gamma_p_kmn(int m, int n, int k);
FormulaResult gamma_kmn(int m, int n, int k);
FormulaResult formula_for(Variant variant, int m, int n, int k);

// Single-hub system: a hub on one side, every other vertex of that side at
// i, the whole opposite side at j. Both hub orientations are solved; all
// feasible solutions come back sorted by (weight, i, j).
std::vector<SystemSolution> solve_system_1_1_1(int m, int n, int k);
// Two hubs, one per side; weight 2k - (i + j).
std::vector<SystemSolution> solve_system_1_2(int m, int n, int k);
// Hub-free uniform system; at most one solution, present iff
// i = (n-1)k/(mn-1) and j = (m-1)k/(mn-1) are integers below k/2.
std::optional<SystemSolution> solve_system_1_3(int m, int n, int k);

// Raised when the exact solver lands outside a one_of/range result, which
// would falsify the published case row; carries the offending witness.
class TheoremContradiction : public std::runtime_error {
public:
    TheoremContradiction(const std::string& message, SolveResult result)
        : std::runtime_error(message), result_(std::move(result)) {}
    const SolveResult& result() const { return result_; }

private:
    SolveResult result_;
};

// Adjudicates a one_of/range cell with the multiset solver. Throws
// std::invalid_argument on exact input and TheoremContradiction when the
// solver value falls outside the given set.
long long resolve(int m, int n, int k, Variant variant, const FormulaResult& fr);

}  // namespace romank
