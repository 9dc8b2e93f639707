#include <nlohmann/json.hpp>

#include "detail.hpp"
#include "romank/solve.hpp"

namespace romank {

const char* to_string(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::bnb: return "bnb";
        case Method::multiset: return "multiset";
    }
    return "?";
}

namespace {

SolveResult solve_multiset_on(const Graph& g, int k, Variant variant) {
    auto labels = detect_complete_bipartite(g);
    if (!labels)
        throw std::invalid_argument(
            "multiset method needs a complete bipartite input graph");
    return detail::multiset_solve(k, variant, labels->side_a, labels->side_b,
                                  g.vertex_count());
}

bool oracle_fits(const Graph& g, int k, long long cap) {
    if (g.vertex_count() > 10) return false;
    long long total = 1;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (total > cap / (k + 1)) return false;
        total *= k + 1;
    }
    return true;
}

}  // namespace

SolveResult solve_auto(const Graph& g, int k, Variant variant, const Budget& budget) {
    if (k <= 200 && detect_complete_bipartite(g)) return solve_multiset_on(g, k, variant);
    if (oracle_fits(g, k, 1'000'000)) return solve_oracle(g, k, variant);
    return solve_bnb(g, k, variant, budget);
}

SolveResult solve_with(Method method, const Graph& g, int k, Variant variant,
                       const Budget& budget) {
    switch (method) {
        case Method::oracle: return solve_oracle(g, k, variant);
        case Method::bnb: return solve_bnb(g, k, variant, budget);
        case Method::multiset: return solve_multiset_on(g, k, variant);
    }
    throw std::invalid_argument("unknown method");
}

std::string solve_result_to_json(const SolveResult& r, Variant variant, int k) {
    nlohmann::json j{
        {"variant", to_string(variant)},
        {"k", k},
        {"value", r.value},
        {"witness", r.witness.values},
        {"method", to_string(r.method)},
        {"nodes", r.nodes_explored},
        {"elapsed_ms", r.elapsed.count()},
        {"exact", r.exact},
    };
    if (!r.exact) j["lower_bound"] = r.lower_bound;
    return j.dump();
}

}  // namespace romank
