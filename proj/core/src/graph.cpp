#include "romank/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace romank {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, const std::vector<Edge>& edge_list) {
    if (vertex_count < 0)
        throw std::invalid_argument("graph: negative vertex count");
    n_ = vertex_count;
    adj_.resize(n_);
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        check_vertex(u, n_, "graph edge");
        check_vertex(v, n_, "graph edge");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph: duplicate edge");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    if (n_ <= kBitsetLimit) {
        rows_.assign(n_, Bitset(n_));
        for (auto [u, v] : edges_) {
            rows_[u].set(v);
            rows_[v].set(u);
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_, "has_edge");
    check_vertex(v, n_, "has_edge");
    if (u == v) return false;
    if (!rows_.empty()) return rows_[u].test(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::component_count() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    int components = 0;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return components;
}

std::pair<Graph, BipartitionLabels> complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("complete_bipartite: both sides need at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m) * n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v)
            edges.emplace_back(u, m + v);
    BipartitionLabels labels;
    for (int u = 0; u < m; ++u) labels.side_a.push_back(u);
    for (int v = 0; v < n; ++v) labels.side_b.push_back(m + v);
    return {Graph(m + n, edges), std::move(labels)};
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty_graph: need n >= 1");
    return Graph(n);
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v)
            edges.emplace_back(u, ng + v);
    return Graph(ng + nh, edges);
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    int total = 0;
    std::vector<Edge> edges;
    for (const Graph& g : gs) {
        for (auto [u, v] : g.edges()) edges.emplace_back(total + u, total + v);
        total += g.vertex_count();
    }
    return Graph(total, edges);
}

Graph attach_pendants(const Graph& g, const std::vector<int>& targets, int count) {
    if (count < 1) throw std::invalid_argument("attach_pendants: need count >= 1");
    for (int t : targets) check_vertex(t, g.vertex_count(), "attach_pendants target");
    std::vector<Edge> edges = g.edges();
    int next = g.vertex_count();
    for (int t : targets)
        for (int i = 0; i < count; ++i)
            edges.emplace_back(t, next++);
    return Graph(next, edges);
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
    if (h.vertex_count() != g.vertex_count()) return false;
    return std::includes(g.edges().begin(), g.edges().end(),
                         h.edges().begin(), h.edges().end());
}

std::optional<BipartitionLabels> detect_complete_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.component_count() != 1) return std::nullopt;
    std::vector<int> color(n, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (color[v] == -1) {
                color[v] = 1 - color[u];
                stack.push_back(v);
            } else if (color[v] == color[u]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    BipartitionLabels labels;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? labels.side_a : labels.side_b).push_back(v);
    // Bipartite and simple, so complete iff the edge count is exactly m*n.
    long long m = static_cast<long long>(labels.side_a.size());
    long long k = static_cast<long long>(labels.side_b.size());
    if (g.edge_count() != m * k) return std::nullopt;
    return labels;
}

}  // namespace romank
