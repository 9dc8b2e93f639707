#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace romank {

using Bitset = boost::dynamic_bitset<>;

using Edge = std::pair<int, int>;

// Bipartite side labels as produced by the bipartite generators: side_a
// vertices come first in the labelling, then side_b.
struct BipartitionLabels {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

// Immutable simple undirected graph over dense 0-based vertex ids.
//
// Adjacency is kept both as sorted neighbor lists and (for graphs small
// enough to be solver inputs) as per-vertex bitset rows. Disconnected
// graphs are fine; isolated vertices are handled by the validators.
class Graph {
public:
    // Bitset rows are only materialized up to this many vertices; the
    // solvers never see anything larger.
    static constexpr int kBitsetLimit = 4096;

    Graph() = default;
    explicit Graph(int vertex_count);
    // Throws std::invalid_argument on out-of-range endpoints, self-loops
    // or duplicate edges.
    Graph(int vertex_count, const std::vector<Edge>& edge_list);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    // Normalized (u < v), sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    bool is_isolated(int u) const { return adj_[u].empty(); }

    bool has_bitsets() const { return !rows_.empty(); }
    // Valid only when has_bitsets().
    const Bitset& neighbor_mask(int u) const { return rows_[u]; }

    bool has_edge(int u, int v) const;
    int component_count() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> rows_;
};

// Generators. Labelling orders are fixed so fixtures stay reproducible:
// complete_bipartite puts side_a at 0..m-1, join keeps g's vertices first,
// disjoint_union concatenates, attach_pendants appends the new leaves in
// target order.
std::pair<Graph, BipartitionLabels> complete_bipartite(int m, int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);  // requires n >= 3
Graph empty_graph(int n);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const std::vector<Graph>& gs);
Graph attach_pendants(const Graph& g, const std::vector<int>& targets, int count);

// True iff h and g share a vertex count and E(h) is a subset of E(g).
bool is_spanning_subgraph(const Graph& h, const Graph& g);

// Recognizes graphs that are a complete bipartite K_{m,n} (m,n >= 1) under
// some bipartition and recovers the sides; side_a holds vertex 0.
std::optional<BipartitionLabels> detect_complete_bipartite(const Graph& g);

}  // namespace romank
