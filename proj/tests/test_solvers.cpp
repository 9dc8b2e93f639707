#include <doctest.h>

#include <random>

#include "romank/solve.hpp"
#include "support/testing.hpp"

using namespace romank;

namespace {

constexpr Variant kAllVariants[] = {Variant::roman, Variant::perfect, Variant::strong,
                                    Variant::perfect_strong};

void check_result_shape(const Graph& g, int k, Variant v, const SolveResult& r) {
    CHECK(r.exact);
    CHECK(validate(g, r.witness, v));
    CHECK(r.witness.weight() == r.value);
    CHECK(r.lower_bound == r.value);
    // component and uniform sandwich (isolated vertices need k, not k/2)
    long long upper = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        upper += g.is_isolated(u) ? k : min_high_value(k);
    CHECK(r.value >= static_cast<long long>(g.component_count()) * k);
    CHECK(r.value <= upper);
}

}  // namespace

TEST_CASE("oracle fixture values") {
    SolveResult r = solve_oracle(complete(1), 5, Variant::roman);
    CHECK(r.value == 5);
    check_result_shape(complete(1), 5, Variant::roman, r);

    r = solve_oracle(path(4), 3, Variant::strong);
    CHECK(r.value == 5);
    CHECK(r.witness.values == std::vector<int>{0, 3, 0, 2});

    auto [k22, l22] = complete_bipartite(2, 2);
    r = solve_oracle(k22, 2, Variant::strong);
    CHECK(r.value == 3);
    CHECK(r.witness.values == std::vector<int>{0, 0, 1, 2});

    const Graph two_k3 = disjoint_union({complete(3), complete(3)});
    r = solve_oracle(two_k3, 4, Variant::roman);
    CHECK(r.value == 8);
    check_result_shape(two_k3, 4, Variant::roman, r);
}

TEST_CASE("oracle budget errors name the budget") {
    CHECK_THROWS_AS(solve_oracle(complete(11), 1, Variant::roman), BudgetExceeded);
    OracleBudget tight;
    tight.max_functions = 100;
    try {
        solve_oracle(complete(5), 3, Variant::roman, tight);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("100") != std::string::npos);
    }
}

TEST_CASE("bnb fixture values") {
    auto [k33, l33] = complete_bipartite(3, 3);
    CHECK(solve_bnb(k33, 4, Variant::perfect).value == 6);

    auto [k34, l34] = complete_bipartite(3, 4);
    CHECK(solve_bnb(k34, 5, Variant::roman).value == 8);

    auto [k22, l22] = complete_bipartite(2, 2);
    SolveResult r = solve_bnb(k22, 2, Variant::strong);
    CHECK(r.value == 3);
    CHECK(r.witness.values == solve_oracle(k22, 2, Variant::strong).witness.values);

    r = solve_bnb(path(4), 3, Variant::strong);
    CHECK(r.value == 5);
    CHECK(r.witness.values == std::vector<int>{0, 3, 0, 2});
}

TEST_CASE("multiset fixture values") {
    CHECK(solve_kmn_multiset(2, 9, 4, Variant::perfect_strong).value == 6);
    CHECK(solve_kmn_multiset(3, 7, 5, Variant::strong).value == 9);
    CHECK(solve_kmn_multiset(3, 5, 5, Variant::roman).value == 9);
    CHECK(solve_kmn_multiset(3, 5, 7, Variant::roman).value == 11);
    CHECK(solve_kmn_multiset(3, 4, 11, Variant::roman).value == 17);
    CHECK(solve_kmn_multiset(3, 3, 10, Variant::perfect).value == 16);

    CHECK_THROWS_AS(solve_kmn_multiset(0, 5, 2, Variant::roman), std::invalid_argument);
    CHECK_THROWS_AS(solve_kmn_multiset(2, 5, 201, Variant::roman), std::invalid_argument);
}

TEST_CASE("multiset witnesses are valid on the generated graph") {
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 4; ++n)
            for (int k = 1; k <= 4; ++k)
                for (Variant v : kAllVariants) {
                    auto [g, labels] = complete_bipartite(m, n);
                    const SolveResult r = solve_kmn_multiset(m, n, k, v);
                    check_result_shape(g, k, v, r);
                }
}

TEST_CASE("three engines agree on small graphs, witnesses included") {
    std::mt19937 rng(2024);
    std::vector<Graph> pool;
    for (const Graph& g : tsupport::all_labelled_graphs(4)) pool.push_back(g);
    for (int i = 0; i < 12; ++i) pool.push_back(tsupport::random_graph(rng, 6, 0.45));
    for (const Graph& g : pool) {
        for (int k = 1; k <= 3; ++k) {
            for (Variant v : kAllVariants) {
                const SolveResult oracle = solve_oracle(g, k, v);
                const SolveResult bnb = solve_bnb(g, k, v);
                CHECK(oracle.value == bnb.value);
                CHECK(oracle.witness.values == bnb.witness.values);
                if (g.vertex_count() <= 4) {
                    const auto naive = tsupport::naive_min(g, k, v);
                    CHECK(naive.value == oracle.value);
                    CHECK(naive.witness == oracle.witness.values);
                }
            }
        }
    }
}

TEST_CASE("multiset agrees with the oracle on complete bipartite instances") {
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 7 - m; ++n)
            for (int k = 1; k <= 4; ++k)
                for (Variant v : kAllVariants) {
                    auto [g, labels] = complete_bipartite(m, n);
                    const SolveResult ms = solve_kmn_multiset(m, n, k, v);
                    const SolveResult oracle = solve_oracle(g, k, v);
                    CHECK(ms.value == oracle.value);
                    CHECK(ms.witness.values == oracle.witness.values);
                }
}

TEST_CASE("perfect-strong value restriction matches the unrestricted search") {
    std::mt19937 rng(77);
    Budget unrestricted;
    unrestricted.ps_value_restriction = false;
    for (int i = 0; i < 25; ++i) {
        const Graph g = tsupport::random_graph(rng, 6, 0.5);
        for (int k = 1; k <= 4; ++k) {
            const long long a = solve_bnb(g, k, Variant::perfect_strong).value;
            const long long b = solve_bnb(g, k, Variant::perfect_strong, unrestricted).value;
            CHECK(a == b);
        }
    }
}

TEST_CASE("variant chain per instance") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Graph g = tsupport::random_graph(rng, 5, 0.5);
        for (int k = 1; k <= 4; ++k) {
            const long long roman = solve_oracle(g, k, Variant::roman).value;
            const long long perfect = solve_oracle(g, k, Variant::perfect).value;
            const long long strong = solve_oracle(g, k, Variant::strong).value;
            const long long ps = solve_oracle(g, k, Variant::perfect_strong).value;
            CHECK(roman <= perfect);
            CHECK(roman <= strong);
            CHECK(strong <= ps);
        }
    }
}

TEST_CASE("adding edges never raises the roman or strong number") {
    std::mt19937 rng(13);
    for (int i = 0; i < 15; ++i) {
        const Graph g = tsupport::random_graph(rng, 6, 0.3);
        // add one random missing edge
        std::vector<Edge> missing;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (!g.has_edge(u, v)) missing.emplace_back(u, v);
        if (missing.empty()) continue;
        std::vector<Edge> edges = g.edges();
        edges.push_back(missing[std::uniform_int_distribution<size_t>(
            0, missing.size() - 1)(rng)]);
        const Graph bigger(6, edges);
        for (int k = 1; k <= 3; ++k) {
            CHECK(solve_oracle(bigger, k, Variant::roman).value <=
                  solve_oracle(g, k, Variant::roman).value);
            CHECK(solve_oracle(bigger, k, Variant::strong).value <=
                  solve_oracle(g, k, Variant::strong).value);
        }
    }
}

namespace {

// Classical Roman domination: f: V -> {0,1,2}, every 0 needs a 2-neighbor.
long long classical_roman(const Graph& g) {
    const int n = g.vertex_count();
    long long best = -1;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (g.is_isolated(u)) {
                ok = f[u] == 2;
                continue;
            }
            if (f[u] != 0) continue;
            bool covered = false;
            for (int v : g.neighbors(u)) covered |= f[v] == 2;
            ok = covered;
        }
        if (ok) {
            long long w = 0;
            for (int v : f) w += v;
            if (best < 0 || w < best) best = w;
        }
        int p = n - 1;
        while (p >= 0 && f[p] == 2) f[p--] = 0;
        if (p < 0) break;
        ++f[p];
    }
    return best;
}

// Double Roman domination: f: V -> {0..3}; 0 needs a 3-neighbor or two
// 2-neighbors, 1 needs a neighbor with at least 2.
long long double_roman(const Graph& g) {
    const int n = g.vertex_count();
    long long best = -1;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (g.is_isolated(u)) {
                ok = f[u] == 3;
                continue;
            }
            if (f[u] == 0) {
                int twos = 0;
                bool three = false;
                for (int v : g.neighbors(u)) {
                    twos += f[v] == 2;
                    three |= f[v] == 3;
                }
                ok = three || twos >= 2;
            } else if (f[u] == 1) {
                bool covered = false;
                for (int v : g.neighbors(u)) covered |= f[v] >= 2;
                ok = covered;
            }
        }
        if (ok) {
            long long w = 0;
            for (int v : f) w += v;
            if (best < 0 || w < best) best = w;
        }
        int p = n - 1;
        while (p >= 0 && f[p] == 3) f[p--] = 0;
        if (p < 0) break;
        ++f[p];
    }
    return best;
}

}  // namespace

namespace {

// Italian domination: f: V -> {0,1,2}, every 0-vertex has closed sum >= 2.
long long italian(const Graph& g) {
    const int n = g.vertex_count();
    long long best = -1;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (g.is_isolated(u)) {
                ok = f[u] == 2;
                continue;
            }
            if (f[u] != 0) continue;
            long long sum = 0;
            for (int v : g.neighbors(u)) sum += f[v];
            ok = sum >= 2;
        }
        if (ok) {
            long long w = 0;
            for (int v : f) w += v;
            if (best < 0 || w < best) best = w;
        }
        int p = n - 1;
        while (p >= 0 && f[p] == 2) f[p--] = 0;
        if (p < 0) break;
        ++f[p];
    }
    return best;
}

}  // namespace

TEST_CASE("strong k=2 is classical roman, k=3 double roman, roman k=2 italian") {
    std::mt19937 rng(21);
    std::vector<Graph> pool{path(5), cycle(5), complete(4), complete_bipartite(2, 3).first};
    for (int i = 0; i < 8; ++i) pool.push_back(tsupport::random_graph(rng, 5, 0.5));
    for (const Graph& g : pool) {
        CHECK(solve_oracle(g, 2, Variant::strong).value == classical_roman(g));
        CHECK(solve_oracle(g, 3, Variant::strong).value == double_roman(g));
        CHECK(solve_oracle(g, 2, Variant::roman).value == italian(g));
    }
}

TEST_CASE("fans and joins are bounded by their complete bipartite subgraph") {
    // the fan on (m path vertices, n empty vertices) contains K_{n,m}
    for (int m = 2; m <= 3; ++m)
        for (int n = 2; n <= 3; ++n) {
            const Graph fan = join(empty_graph(n), path(m));
            auto [kmn, labels] = complete_bipartite(n, m);
            REQUIRE(is_spanning_subgraph(kmn, fan));
            for (int k = 1; k <= 3; ++k) {
                CHECK(solve_oracle(fan, k, Variant::roman).value <=
                      solve_kmn_multiset(n, m, k, Variant::roman).value);
                CHECK(solve_oracle(fan, k, Variant::strong).value <=
                      solve_kmn_multiset(n, m, k, Variant::strong).value);
            }
        }
    // join of two paths
    const Graph jp = join(path(3), path(3));
    auto [k33, labels] = complete_bipartite(3, 3);
    REQUIRE(is_spanning_subgraph(k33, jp));
    for (int k = 1; k <= 3; ++k)
        CHECK(solve_oracle(jp, k, Variant::strong).value <=
              solve_kmn_multiset(3, 3, k, Variant::strong).value);
}

TEST_CASE("bnb honors node budgets with a flagged bound pair") {
    auto [g, labels] = complete_bipartite(4, 5);
    Budget tiny;
    tiny.max_nodes = 50;
    const SolveResult r = solve_bnb(g, 4, Variant::roman, tiny);
    CHECK_FALSE(r.exact);
    CHECK(validate(g, r.witness, Variant::roman));  // incumbent is still a valid function
    CHECK(r.witness.weight() == r.value);
    CHECK(r.lower_bound == 4);  // one component, k=4
    CHECK(r.lower_bound <= solve_kmn_multiset(4, 5, 4, Variant::roman).value);
    CHECK(r.value >= solve_kmn_multiset(4, 5, 4, Variant::roman).value);
}

TEST_CASE("bnb honors wall-clock budgets") {
    // dense 14-vertex instance: proving optimality takes far over a millisecond
    const Graph g = join(path(7), path(7));
    Budget quick;
    quick.max_ms = 1;
    const SolveResult r = solve_bnb(g, 6, Variant::roman, quick);
    CHECK_FALSE(r.exact);
    CHECK(validate(g, r.witness, Variant::roman));
    CHECK(r.lower_bound == 6);
}

TEST_CASE("bnb parallel schedule does not change value or witness") {
    std::mt19937 rng(31);
    Budget par;
    par.jobs = 4;
    for (int i = 0; i < 10; ++i) {
        const Graph g = tsupport::random_graph(rng, 7, 0.4);
        for (int k = 2; k <= 3; ++k)
            for (Variant v : {Variant::roman, Variant::strong}) {
                const SolveResult seq = solve_bnb(g, k, v);
                const SolveResult con = solve_bnb(g, k, v, par);
                CHECK(seq.value == con.value);
                CHECK(seq.witness.values == con.witness.values);
            }
    }
}

TEST_CASE("solve_auto picks a sensible engine") {
    auto [g, labels] = complete_bipartite(3, 4);
    CHECK(solve_auto(g, 3, Variant::roman).method == Method::multiset);
    CHECK(solve_auto(path(4), 3, Variant::roman).method == Method::oracle);
    CHECK(solve_auto(join(path(4), cycle(8)), 2, Variant::roman).method == Method::bnb);
    CHECK_THROWS_AS(solve_with(Method::multiset, complete(3), 2, Variant::roman),
                    std::invalid_argument);
}

TEST_CASE("result JSON carries the schema fields") {
    auto [g, labels] = complete_bipartite(2, 2);
    const SolveResult r = solve_with(Method::multiset, g, 2, Variant::strong);
    const std::string j = solve_result_to_json(r, Variant::strong, 2);
    for (const char* key : {"\"variant\"", "\"k\"", "\"value\"", "\"witness\"", "\"method\"",
                            "\"nodes\"", "\"elapsed_ms\"", "\"exact\""})
        CHECK(j.find(key) != std::string::npos);
    CHECK(j.find("\"value\":3") != std::string::npos);
    CHECK(j.find("\"lower_bound\"") == std::string::npos);  // only on inexact results
}
