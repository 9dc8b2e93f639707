#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <numeric>
#include <thread>

#include "romank/solve.hpp"

namespace romank {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchContext {
    const Graph& g;
    int k;
    Variant variant;
    bool exact_variant;   // perfect or perfect_strong
    bool strong_variant;  // strong or perfect_strong
    std::vector<int> order;                        // assignment order
    std::vector<std::vector<int>> candidates;      // per vertex, increasing
    std::atomic<long long>* incumbent;             // shared upper bound
    std::atomic<long long>* nodes;
    std::atomic<bool>* stop;
    long long max_nodes;
    bool has_deadline = false;
    Clock::time_point deadline;
};

// Per-thread assignment state with incremental neighborhood sums.
struct SearchState {
    std::vector<int> value;           // -1 = unassigned
    std::vector<long long> closed_sum;    // assigned values over N[u] + u
    std::vector<long long> strong_sum;    // f(u) if assigned, plus assigned strong neighbors
    std::vector<int> free_closed;         // unassigned vertices in N[u] + u
    long long partial = 0;

    long long best = LLONG_MAX;  // thread-local best leaf
    std::vector<int> best_values;

    explicit SearchState(const Graph& g)
        : value(g.vertex_count(), -1),
          closed_sum(g.vertex_count(), 0),
          strong_sum(g.vertex_count(), 0),
          free_closed(g.vertex_count()) {
        for (int u = 0; u < g.vertex_count(); ++u) free_closed[u] = g.degree(u) + 1;
    }
};

void assign(const SearchContext& ctx, SearchState& st, int u, int c) {
    st.value[u] = c;
    st.partial += c;
    st.closed_sum[u] += c;
    st.strong_sum[u] += c;  // the f(u) term of the strong sum
    --st.free_closed[u];
    const bool strong = is_strong_value(c, ctx.k);
    for (int w : ctx.g.neighbors(u)) {
        st.closed_sum[w] += c;
        --st.free_closed[w];
        if (strong) st.strong_sum[w] += c;
    }
}

void unassign(const SearchContext& ctx, SearchState& st, int u) {
    const int c = st.value[u];
    st.value[u] = -1;
    st.partial -= c;
    st.closed_sum[u] -= c;
    st.strong_sum[u] -= c;
    ++st.free_closed[u];
    const bool strong = is_strong_value(c, ctx.k);
    for (int w : ctx.g.neighbors(u)) {
        st.closed_sum[w] -= c;
        ++st.free_closed[w];
        if (strong) st.strong_sum[w] -= c;
    }
}

// A vertex already assigned a deficient value is dead when its demand can
// no longer be met (every unassigned vertex in reach contributes at most
// k) or, for the exact variants, is already overshot.
bool vertex_alive(const SearchContext& ctx, const SearchState& st, int x) {
    if (st.value[x] < 0 || !is_deficient(st.value[x], ctx.k)) return true;
    const long long have = ctx.strong_variant ? st.strong_sum[x] : st.closed_sum[x];
    if (ctx.exact_variant && have > ctx.k) return false;
    return have + static_cast<long long>(ctx.k) * st.free_closed[x] >= ctx.k;
}

bool consistent_after(const SearchContext& ctx, const SearchState& st, int u) {
    if (!vertex_alive(ctx, st, u)) return false;
    for (int w : ctx.g.neighbors(u))
        if (!vertex_alive(ctx, st, w)) return false;
    return true;
}

bool out_of_budget(const SearchContext& ctx) {
    if (ctx.stop->load(std::memory_order_relaxed)) return true;
    if (ctx.nodes->load(std::memory_order_relaxed) > ctx.max_nodes ||
        (ctx.has_deadline && Clock::now() > ctx.deadline)) {
        ctx.stop->store(true, std::memory_order_relaxed);
        return true;
    }
    return false;
}

// Lowers the shared incumbent to `w` if it improves it.
void offer_incumbent(const SearchContext& ctx, SearchState& st, long long w) {
    long long cur = ctx.incumbent->load(std::memory_order_relaxed);
    while (w < cur &&
           !ctx.incumbent->compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
    }
    if (w < st.best) {
        st.best = w;
        st.best_values = st.value;
    }
}

void dfs(const SearchContext& ctx, SearchState& st, size_t depth) {
    if (depth == ctx.order.size()) {
        offer_incumbent(ctx, st, st.partial);
        return;
    }
    const int u = ctx.order[depth];
    for (int c : ctx.candidates[u]) {
        if (st.partial + c >= ctx.incumbent->load(std::memory_order_relaxed)) break;
        if (ctx.nodes->fetch_add(1, std::memory_order_relaxed) % 4096 == 0 &&
            out_of_budget(ctx))
            return;
        assign(ctx, st, u, c);
        if (consistent_after(ctx, st, u)) dfs(ctx, st, depth + 1);
        unassign(ctx, st, u);
        if (ctx.stop->load(std::memory_order_relaxed)) return;
    }
}

// Feasibility probe for the witness reconstruction: does some valid
// completion of the fixed prefix stay within `bound`? Probes search the
// full value range regardless of variant so the reconstructed witness is
// the lexicographic minimum over all optimal functions, same as the
// oracle's.
struct ProbeResult {
    bool feasible = false;
    std::vector<int> completion;
};

bool probe_dfs(const SearchContext& ctx, SearchState& st, const std::vector<int>& rest,
               size_t depth, long long bound, ProbeResult& out) {
    if (out_of_budget(ctx)) return false;
    if (depth == rest.size()) {
        out.feasible = true;
        out.completion = st.value;
        return true;
    }
    const int u = rest[depth];
    const int top = ctx.g.is_isolated(u) ? ctx.k : ctx.k;
    const int bottom = ctx.g.is_isolated(u) ? ctx.k : 0;
    for (int c = bottom; c <= top; ++c) {
        if (st.partial + c > bound) break;
        ctx.nodes->fetch_add(1, std::memory_order_relaxed);
        assign(ctx, st, u, c);
        if (consistent_after(ctx, st, u) && probe_dfs(ctx, st, rest, depth + 1, bound, out)) {
            unassign(ctx, st, u);
            return true;
        }
        unassign(ctx, st, u);
    }
    return false;
}

ProbeResult probe(const SearchContext& ctx, const std::vector<int>& prefix, long long bound) {
    SearchState st(ctx.g);
    ProbeResult out;
    for (size_t v = 0; v < prefix.size(); ++v) {
        assign(ctx, st, static_cast<int>(v), prefix[v]);
        if (st.partial > bound || !consistent_after(ctx, st, static_cast<int>(v))) return out;
    }
    std::vector<int> rest;
    for (int u : ctx.order)
        if (u >= static_cast<int>(prefix.size())) rest.push_back(u);
    probe_dfs(ctx, st, rest, 0, bound, out);
    return out;
}

// Greedy per-vertex descent to the lexicographically smallest valid
// function of weight <= opt. `seed` must already be one such function.
std::vector<int> reconstruct_lex_witness(const SearchContext& ctx, std::vector<int> seed,
                                         long long opt) {
    const int n = ctx.g.vertex_count();
    for (int v = 0; v < n && !ctx.stop->load(std::memory_order_relaxed); ++v) {
        if (ctx.g.is_isolated(v)) continue;  // pinned to k, nothing smaller to try
        std::vector<int> prefix(seed.begin(), seed.begin() + v);
        prefix.push_back(0);
        for (int c = 0; c < seed[v]; ++c) {
            prefix[v] = c;
            ProbeResult r = probe(ctx, prefix, opt);
            if (r.feasible) {
                seed = std::move(r.completion);
                break;
            }
        }
    }
    return seed;
}

std::vector<int> candidate_values(const Graph& g, int k, Variant variant, int u,
                                  bool ps_restriction) {
    if (g.is_isolated(u)) return {k};
    const bool restricted =
        variant == Variant::strong || (variant == Variant::perfect_strong && ps_restriction);
    std::vector<int> out;
    if (restricted) {
        out.push_back(0);
        for (int c = min_high_value(k); c <= k; ++c) out.push_back(c);
    } else {
        for (int c = 0; c <= k; ++c) out.push_back(c);
    }
    return out;
}

}  // namespace

SolveResult solve_bnb(const Graph& g, int k, Variant variant, const Budget& budget) {
    if (k < 1 || k > kMaxK) throw std::invalid_argument("solve_bnb: k out of range");
    const auto start = Clock::now();
    const int n = g.vertex_count();

    std::atomic<long long> incumbent{0};
    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};

    SearchContext ctx{g,
                      k,
                      variant,
                      variant == Variant::perfect || variant == Variant::perfect_strong,
                      variant == Variant::strong || variant == Variant::perfect_strong,
                      {},
                      {},
                      &incumbent,
                      &nodes,
                      &stop,
                      budget.max_nodes,
                      budget.max_ms > 0,
                      start + std::chrono::milliseconds(budget.max_ms)};

    ctx.order.resize(n);
    std::iota(ctx.order.begin(), ctx.order.end(), 0);
    std::stable_sort(ctx.order.begin(), ctx.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    ctx.candidates.resize(n);
    for (int u = 0; u < n; ++u)
        ctx.candidates[u] = candidate_values(g, k, variant, u, budget.ps_value_restriction);

    // The uniform ceil(k/2) function seeds the incumbent, so a valid
    // answer exists even if the budget dies immediately.
    WeightFunction seed = uniform_upper_bound_function(g, k);
    for (int u = 0; u < n; ++u)
        if (g.is_isolated(u)) seed.values[u] = k;
    incumbent.store(seed.weight() + 1);  // leaves must strictly beat the seed... see below

    // Strictly-improving search: the incumbent starts one above the seed
    // weight so the seed itself is re-derivable; every accepted leaf then
    // strictly improves.
    long long best_weight = seed.weight();
    std::vector<int> best_values = seed.values;

    const int jobs = std::max(1, budget.jobs);
    std::vector<SearchState> states;
    states.reserve(jobs);
    for (int t = 0; t < jobs; ++t) states.emplace_back(g);

    if (n == 0) {
        // nothing to assign
    } else if (jobs == 1) {
        dfs(ctx, states[0], 0);
    } else {
        // Split the root vertex's candidate list round-robin.
        const int root = ctx.order[0];
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                SearchState& st = states[t];
                const auto& cands = ctx.candidates[root];
                for (size_t idx = t; idx < cands.size(); idx += jobs) {
                    const int c = cands[idx];
                    if (st.partial + c >= incumbent.load(std::memory_order_relaxed)) break;
                    nodes.fetch_add(1, std::memory_order_relaxed);
                    assign(ctx, st, root, c);
                    if (consistent_after(ctx, st, root)) dfs(ctx, st, 1);
                    unassign(ctx, st, root);
                    if (stop.load(std::memory_order_relaxed)) break;
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    for (const SearchState& st : states) {
        if (st.best < best_weight ||
            (st.best == best_weight && !st.best_values.empty() &&
             st.best_values < best_values)) {
            best_weight = st.best;
            best_values = st.best_values;
        }
    }

    SolveResult result;
    result.method = Method::bnb;
    result.exact = !stop.load();
    if (result.exact) {
        best_values = reconstruct_lex_witness(ctx, std::move(best_values), best_weight);
        result.exact = !stop.load();  // reconstruction respects the budget too
    }
    result.value = best_weight;
    result.witness = WeightFunction(k, std::move(best_values));
    result.nodes_explored = nodes.load();
    result.lower_bound =
        result.exact ? best_weight : static_cast<long long>(g.component_count()) * k;
    result.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
}

}  // namespace romank
