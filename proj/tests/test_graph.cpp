#include <doctest.h>

#include <algorithm>
#include <random>

#include "romank/graph.hpp"
#include "support/testing.hpp"

using namespace romank;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    return degs;
}

long long degree_sum(const Graph& g) {
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    return sum;
}

}  // namespace

TEST_CASE("complete_bipartite basics") {
    auto [k2, l2] = complete_bipartite(1, 1);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    auto [g, labels] = complete_bipartite(2, 3);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(labels.side_a == std::vector<int>{0, 1});
    CHECK(labels.side_b == std::vector<int>{2, 3, 4});

    // sides are independent sets: every edge crosses
    auto [big, bl] = complete_bipartite(3, 9);
    CHECK(big.vertex_count() == 12);
    CHECK(big.edge_count() == 27);
    for (auto [u, v] : big.edges()) {
        const bool ua = u < 3, va = v < 3;
        CHECK(ua != va);
    }

    CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(complete_bipartite(3, 0), std::invalid_argument);
}

TEST_CASE("standard generators") {
    CHECK(complete(4).edge_count() == 6);
    CHECK(path(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(empty_graph(3).edge_count() == 0);
    CHECK(cycle(3).edge_count() == 3);
    CHECK(cycle(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("graph rejects non-simple input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("join") {
    // fan: empty(n) joined with path(m)
    const Graph fan = join(empty_graph(3), path(4));
    CHECK(fan.vertex_count() == 7);
    CHECK(fan.edge_count() == 3 + 12);

    const Graph jb = join(empty_graph(2), empty_graph(3));
    auto [kmn, labels] = complete_bipartite(2, 3);
    CHECK(jb == kmn);

    // join of two paths on 2 vertices is K_4 (6 edges, all degrees 3)
    const Graph j4 = join(path(2), path(2));
    CHECK(j4.edge_count() == 6);
    CHECK(degree_sequence(j4) == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("disjoint_union") {
    std::vector<Graph> copies(3, path(2));
    const Graph u = disjoint_union(copies);
    CHECK(u.vertex_count() == 6);
    CHECK(u.component_count() == 3);

    CHECK(disjoint_union({path(3)}) == path(3));

    const Graph two_triangles = disjoint_union({complete(3), complete(3)});
    CHECK(two_triangles.vertex_count() == 6);
    CHECK(two_triangles.edge_count() == 6);
    CHECK(two_triangles.component_count() == 2);
}

TEST_CASE("attach_pendants") {
    auto [g, labels] = complete_bipartite(3, 9);
    const Graph gadget = attach_pendants(g, labels.side_a, 3);
    CHECK(gadget.vertex_count() == 21);
    CHECK(gadget.edge_count() == 27 + 9);

    CHECK(attach_pendants(g, {}, 3) == g);

    const Graph p3ish = attach_pendants(complete(2), {0}, 1);
    CHECK(p3ish.vertex_count() == 3);
    CHECK(p3ish.edge_count() == 2);
    CHECK(degree_sequence(p3ish) == std::vector<int>{1, 1, 2});

    CHECK_THROWS_AS(attach_pendants(g, {99}, 1), std::invalid_argument);
}

TEST_CASE("is_spanning_subgraph") {
    CHECK(is_spanning_subgraph(path(3), complete(3)));
    CHECK_FALSE(is_spanning_subgraph(complete(3), path(3)));
    CHECK_FALSE(is_spanning_subgraph(path(3), complete(4)));

    // K_{m,n} sits inside the join of an empty graph with anything on n vertices
    auto [kmn, labels] = complete_bipartite(4, 5);
    CHECK(is_spanning_subgraph(kmn, join(empty_graph(4), path(5))));
    CHECK(is_spanning_subgraph(kmn, join(empty_graph(4), cycle(5))));
}

TEST_CASE("detect_complete_bipartite") {
    auto [g, labels] = complete_bipartite(3, 4);
    auto found = detect_complete_bipartite(g);
    REQUIRE(found.has_value());
    CHECK(found->side_a.size() == 3);
    CHECK(found->side_b.size() == 4);

    CHECK_FALSE(detect_complete_bipartite(complete(3)).has_value());
    CHECK_FALSE(detect_complete_bipartite(path(4)).has_value());  // bipartite, not complete
    CHECK(detect_complete_bipartite(path(3)).has_value());        // P3 = K_{1,2}
    CHECK_FALSE(detect_complete_bipartite(empty_graph(2)).has_value());
    CHECK(detect_complete_bipartite(cycle(4)).has_value());  // C4 = K_{2,2}
}

TEST_CASE("degree sum is twice the edge count on generated graphs") {
    std::mt19937 rng(7);
    std::vector<Graph> pool{complete(5),       path(6), cycle(6), empty_graph(4),
                            join(path(3), cycle(3)),    complete_bipartite(3, 4).first,
                            attach_pendants(path(3), {0, 2}, 2)};
    for (int i = 0; i < 20; ++i) pool.push_back(tsupport::random_graph(rng, 6, 0.4));
    for (const Graph& g : pool) CHECK(degree_sum(g) == 2 * g.edge_count());
}

TEST_CASE("pendant accounting") {
    const Graph base = cycle(5);
    const std::vector<int> targets{0, 2, 3};
    const Graph g = attach_pendants(base, targets, 4);
    CHECK(g.vertex_count() == base.vertex_count() + 12);
    CHECK(g.edge_count() == base.edge_count() + 12);
}
