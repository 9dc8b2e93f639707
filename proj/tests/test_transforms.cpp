#include <doctest.h>

#include <random>

#include "romank/transforms.hpp"
#include "support/testing.hpp"

using namespace romank;

TEST_CASE("normalize_strong leaves gap-free input alone") {
    auto [g, labels] = complete_bipartite(2, 2);
    WeightFunction f(4, {4, 2, 0, 0});
    REQUIRE(validate(g, f, Variant::strong));
    REQUIRE(is_gap_free(f, 4));
    CHECK(normalize_strong(g, f, 4).values == f.values);
}

TEST_CASE("normalize_strong rewrites mid values") {
    auto [g, labels] = complete_bipartite(2, 2);

    // one mid on each side
    WeightFunction f(4, {3, 1, 3, 1});
    REQUIRE(validate(g, f, Variant::strong));
    WeightFunction nf = normalize_strong(g, f, 4);
    CHECK(nf.values == std::vector<int>{4, 0, 4, 0});
    CHECK(nf.weight() <= f.weight());
    CHECK(is_gap_free(nf, 4));
    CHECK(validate(g, nf, Variant::strong));

    // two mids on one side
    WeightFunction f2(4, {3, 2, 1, 1});
    REQUIRE(validate(g, f2, Variant::strong));
    WeightFunction nf2 = normalize_strong(g, f2, 4);
    CHECK(nf2.values == std::vector<int>{4, 2, 0, 0});
    CHECK(nf2.weight() == 6);
    CHECK(is_gap_free(nf2, 4));
    CHECK(validate(g, nf2, Variant::strong));
}

TEST_CASE("normalize_strong rejects invalid input") {
    auto [g, labels] = complete_bipartite(2, 2);
    // vertex 1 carries 1 with no strong neighbor across the side
    WeightFunction bad(4, {3, 1, 1, 1});
    REQUIRE_FALSE(validate(g, bad, Variant::strong));
    CHECK_THROWS_AS(normalize_strong(g, bad, 4), std::invalid_argument);
}

TEST_CASE("normalize_strong on random strong-valid functions") {
    std::mt19937 rng(17);
    for (int i = 0; i < 300; ++i) {
        const int n = std::uniform_int_distribution<int>(4, 7)(rng);
        const Graph g = tsupport::random_graph(rng, n, 0.5);
        const int k = std::uniform_int_distribution<int>(1, 5)(rng);
        const WeightFunction f = tsupport::random_valid_function(g, k, Variant::strong, rng);
        REQUIRE(validate(g, f, Variant::strong));
        const WeightFunction nf = normalize_strong(g, f, k);
        CHECK(validate(g, nf, Variant::strong));
        CHECK(is_gap_free(nf, k));
        CHECK(nf.weight() <= f.weight());
    }
}

TEST_CASE("lift_strong on the K22 fixture") {
    auto [g, labels] = complete_bipartite(2, 2);
    WeightFunction f(2, {2, 1, 0, 0});
    REQUIRE(validate(g, f, Variant::strong));
    REQUIRE(is_gap_free(f, 2));
    const WeightFunction lifted = lift_strong(g, f, 2);
    CHECK(lifted.k == 3);
    CHECK(lifted.values == std::vector<int>{3, 2, 0, 0});
    CHECK(lifted.weight() == 5);
    CHECK(validate(g, lifted, Variant::strong));
}

TEST_CASE("lift_strong on an isolated vertex") {
    const Graph g = empty_graph(1);
    WeightFunction f(2, {2});
    const WeightFunction lifted = lift_strong(g, f, 2);
    CHECK(lifted.values == std::vector<int>{3});
    CHECK(validate(g, lifted, Variant::strong));
}

TEST_CASE("lift_strong requires gap-free input") {
    auto [g, labels] = complete_bipartite(2, 2);
    WeightFunction f(4, {3, 1, 3, 1});
    REQUIRE(validate(g, f, Variant::strong));
    CHECK_THROWS_AS(lift_strong(g, f, 4), std::invalid_argument);
}

TEST_CASE("lift_roman fixtures") {
    const Graph p3 = path(3);
    WeightFunction f(2, {0, 2, 0});
    const WeightFunction lifted = lift_roman(p3, f, 2);
    CHECK(lifted.values == std::vector<int>{1, 2, 1});
    CHECK(lifted.weight() == 4);
    CHECK(validate(p3, lifted, Variant::roman));

    // k odd, uniform (k+1)/2: nothing is below r, output unchanged but valid
    WeightFunction uniform(3, {2, 2, 2});
    const WeightFunction same = lift_roman(p3, uniform, 3);
    CHECK(same.values == uniform.values);
    CHECK(validate(p3, same, Variant::roman));

    // isolated vertices get re-pinned to k+1
    const Graph k1 = empty_graph(1);
    WeightFunction iso(4, {4});
    const WeightFunction repaired = lift_roman(k1, iso, 4);
    CHECK(repaired.values == std::vector<int>{5});
    CHECK(validate(k1, repaired, Variant::roman));
}

TEST_CASE("lifts validate and account weight exactly on random inputs") {
    std::mt19937 rng(23);
    for (int i = 0; i < 300; ++i) {
        const int n = std::uniform_int_distribution<int>(4, 7)(rng);
        const Graph g = tsupport::random_graph(rng, n, 0.45);
        const int k = std::uniform_int_distribution<int>(1, 5)(rng);

        const WeightFunction fs = normalize_strong(
            g, tsupport::random_valid_function(g, k, Variant::strong, rng), k);
        const WeightFunction ls = lift_strong(g, fs, k);
        CHECK(validate(g, ls, Variant::strong));
        long long positive = 0;
        for (int v : fs.values) positive += v > 0;
        CHECK(ls.weight() == fs.weight() + positive);

        const WeightFunction fr = tsupport::random_valid_function(g, k, Variant::roman, rng);
        const WeightFunction lr = lift_roman(g, fr, k);
        CHECK(validate(g, lr, Variant::roman));
        long long low = 0, isolated = 0;
        for (int u = 0; u < n; ++u) {
            low += fr.values[u] <= k / 2;
            isolated += g.is_isolated(u);
        }
        CHECK(lr.weight() == fr.weight() + low + isolated);
    }
}

TEST_CASE("build_gadget") {
    const Graph g = build_gadget({3, 2});
    CHECK(g.vertex_count() == 21);
    CHECK(g.edge_count() == 36);
    CHECK(build_gadget({4, 2}).vertex_count() == 32);
    CHECK_THROWS_AS(build_gadget({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_gadget({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_gadget({10, 4}), std::invalid_argument);  // vertex cap
}

TEST_CASE("inequality suite on K22") {
    auto [g, labels] = complete_bipartite(2, 2);
    const SuiteReport report = check_inequality_suite(g, "K_{2,2}", 3);
    CHECK(report.complete);
    CHECK(report.all_hold());
    // the cited numbers: gamma_2^s = 3, gamma_3^s = 4, lifted weight 5 <= 6
    bool saw = false;
    for (const CheckOutcome& c : report.checks)
        if (c.check == "lift-strong-bounds" && c.k == 2) {
            saw = true;
            CHECK(c.lhs == 4);
            CHECK(c.rhs == 5);
        }
    CHECK(saw);
    const std::string json = report.to_json();
    CHECK(json.find("\"check\"") != std::string::npos);
    CHECK(json.find("\"graph_id\"") != std::string::npos);
}

TEST_CASE("inequality suite: component bound is tight on two triangles") {
    const Graph g = disjoint_union({complete(3), complete(3)});
    const SuiteReport report = check_inequality_suite(g, "K3+K3", 2);
    CHECK(report.complete);
    CHECK(report.all_hold());
    for (const CheckOutcome& c : report.checks)
        if (c.check == "component-lower-bound" && c.k == 2) CHECK(c.lhs == c.rhs);
}

TEST_CASE("inequality suite handles isolated vertices") {
    const Graph g = disjoint_union({path(3), empty_graph(1)});
    const SuiteReport report = check_inequality_suite(g, "P3+K1", 3);
    CHECK(report.complete);
    CHECK(report.all_hold());
}

TEST_CASE("spanning check: cycle five vs path five") {
    // removing one edge from C5 gives P5, so gamma_2(C5) <= gamma_2(P5)
    const long long c5 = solve_oracle(cycle(5), 2, Variant::roman).value;
    const long long p5 = solve_oracle(path(5), 2, Variant::roman).value;
    CHECK(c5 <= p5);
    CHECK(is_spanning_subgraph(path(5), cycle(5)));
    const SuiteReport report = check_inequality_suite(cycle(5), "C5", 2);
    CHECK(report.all_hold());
}

TEST_CASE("suite reports budget exhaustion as incomplete") {
    Budget tiny;
    tiny.max_nodes = 10;
    // big enough that neither the multiset mapping nor the oracle applies
    const Graph h = join(path(5), path(5));
    const SuiteReport report = check_inequality_suite(h, "join", 4, tiny);
    CHECK_FALSE(report.complete);
}

TEST_CASE("gadget lower-bound report") {
    const GadgetReport r2 = gadget_lower_bound_check({3, 2}, 2);
    CHECK(r2.exact);
    CHECK(r2.vertices == 21);
    CHECK(r2.gamma_p == 15);
    CHECK(r2.bound == 15);  // 3*2 + 9*1
    CHECK(r2.bound_holds);
    // 15/21 is below the k/2 = 1 target at this size
    CHECK_FALSE(r2.ratio_at_least_target);
    CHECK(r2.target_num == 2);

    const GadgetReport r1 = gadget_lower_bound_check({3, 2}, 1);
    CHECK(r1.exact);
    CHECK(r1.gamma_p == 12);
    CHECK(r1.bound == 12);  // 3*1 + 9*1
    CHECK(r1.bound_holds);
    CHECK(r1.target_num == 2);  // (k+1)/2 = 1 as the rational 2/2
    CHECK_FALSE(r1.ratio_at_least_target);

    CHECK_THROWS_AS(gadget_lower_bound_check({2, 2}, 2), std::invalid_argument);

    const std::string json = r2.to_json();
    CHECK(json.find("\"gamma_p\": 15") != std::string::npos);
    CHECK(json.find("\"ratio\": \"15/21\"") != std::string::npos);
}

TEST_CASE("strict lift inequality for k in {3,4}") {
    std::mt19937 rng(41);
    std::vector<Graph> pool{path(4), cycle(5), complete(4), complete_bipartite(2, 3).first};
    for (int i = 0; i < 6; ++i) pool.push_back(tsupport::random_graph(rng, 5, 0.5));
    for (const Graph& g : pool)
        for (int k : {3, 4}) {
            const long long now = solve_oracle(g, k, Variant::strong).value;
            const long long up = solve_oracle(g, k + 1, Variant::strong).value;
            CHECK(up < 2 * now);
        }
}
