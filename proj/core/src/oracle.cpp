#include <chrono>

#include "romank/solve.hpp"

namespace romank {

SolveResult solve_oracle(const Graph& g, int k, Variant variant, const OracleBudget& budget) {
    if (k < 1 || k > kMaxK) throw std::invalid_argument("solve_oracle: k out of range");
    const int n = g.vertex_count();
    if (n > budget.max_vertices)
        throw BudgetExceeded("solve_oracle: " + std::to_string(n) +
                             " vertices exceeds the budget of " +
                             std::to_string(budget.max_vertices));
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget.max_functions / (k + 1))
            throw BudgetExceeded("solve_oracle: (k+1)^|V| exceeds the budget of " +
                                 std::to_string(budget.max_functions) + " functions");
        total *= k + 1;
    }

    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    result.method = Method::oracle;

    WeightFunction f(k, std::vector<int>(n, 0));
    long long weight = 0;
    long long best = -1;
    std::vector<int> best_values;
    long long nodes = 0;
    // Odometer in lexicographic order; the first minimum-weight valid
    // function seen is the lexicographically smallest one.
    while (true) {
        ++nodes;
        if ((best < 0 || weight < best) && validate(g, f, variant)) {
            best = weight;
            best_values = f.values;
        }
        int p = n - 1;
        while (p >= 0 && f.values[p] == k) {
            weight -= k;
            f.values[p] = 0;
            --p;
        }
        if (p < 0) break;
        ++f.values[p];
        ++weight;
    }

    result.value = best;
    result.witness = WeightFunction(k, std::move(best_values));
    result.nodes_explored = nodes;
    result.exact = true;
    result.lower_bound = best;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace romank
