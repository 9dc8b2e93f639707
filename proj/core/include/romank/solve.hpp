#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

#include "romank/graph.hpp"
#include "romank/weights.hpp"

namespace romank {

enum class Method { oracle, bnb, multiset };
const char* to_string(Method m);

struct Budget {
    long long max_nodes = 500'000'000;
    long long max_ms = 0;  // wall clock; 0 means unlimited
    int jobs = 1;          // root subtrees evaluated concurrently when > 1
    // Value-set restriction {0} union {v : 2v >= k} is proven weight-safe
    // for the strong variant only; for perfect-strong it is an
    // empirically-checked search restriction that the test suite compares
    // against the oracle. Turn off to search the full range.
    bool ps_value_restriction = true;
};

struct OracleBudget {
    long long max_functions = 100'000'000;  // cap on (k+1)^|V|
    int max_vertices = 10;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveResult {
    long long value = 0;  // optimal weight, or the best upper bound when !exact
    WeightFunction witness;
    Method method = Method::oracle;
    long long nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
    bool exact = true;
    long long lower_bound = 0;  // proven lower bound; equals value when exact
};

// Exhaustive enumeration of every f: V -> {0..k} in lexicographic order.
// Witness is the lexicographically smallest minimum-weight valid function.
// Throws BudgetExceeded when (k+1)^|V| or |V| breaks the budget.
SolveResult solve_oracle(const Graph& g, int k, Variant variant,
                         const OracleBudget& budget = {});

// Depth-first branch and bound over vertices in descending-degree order
// (ties by index). Incumbent starts at the uniform ceil(k/2) function;
// candidate values for the strong variants are {0} union {v : 2v >= k};
// branches are cut on partial weight >= incumbent and on any assigned
// deficient vertex whose demand is already unreachable or overshot.
// Witnesses match solve_oracle exactly (lexicographically smallest
// optimum). On budget exhaustion the best incumbent comes back flagged
// exact=false together with a trivial proven lower bound.
SolveResult solve_bnb(const Graph& g, int k, Variant variant, const Budget& budget = {});

// Exact optimum on K_{m,n} (side_a = vertices 0..m-1) by enumerating the
// two sides' value multisets; validity on a complete bipartite graph
// depends on a vertex value and the opposite side's multiset only, so the
// predicate is checked once per distinct value per side. Caps: m, n, k
// all <= 200.
SolveResult solve_kmn_multiset(int m, int n, int k, Variant variant);

// Picks multiset for graphs recognized as complete bipartite, the oracle
// for tiny instances, branch and bound otherwise.
SolveResult solve_auto(const Graph& g, int k, Variant variant, const Budget& budget = {});

// Dispatch on an explicit method; Method::multiset requires g to be
// recognizably complete bipartite (throws std::invalid_argument if not).
SolveResult solve_with(Method method, const Graph& g, int k, Variant variant,
                       const Budget& budget = {});

std::string solve_result_to_json(const SolveResult& r, Variant variant, int k);

}  // namespace romank
