#include "romank/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace romank {

const char* to_string(Variant v) { return kVariantNames[static_cast<int>(v)]; }

std::optional<Variant> variant_from_string(std::string_view s) {
    for (int i = 0; i < 4; ++i)
        if (s == kVariantNames[i]) return static_cast<Variant>(i);
    // Accept the underscore spelling too.
    if (s == "perfect_strong") return Variant::perfect_strong;
    return std::nullopt;
}

WeightFunction::WeightFunction(int k_, std::vector<int> values_)
    : k(k_), values(std::move(values_)) {
    if (k < 1 || k > kMaxK)
        throw std::invalid_argument("weight function: k out of range [1, " +
                                    std::to_string(kMaxK) + "]");
    for (int v : values)
        if (v < 0 || v > k)
            throw std::invalid_argument("weight function: value " + std::to_string(v) +
                                        " outside codomain {0.." + std::to_string(k) + "}");
}

long long WeightFunction::weight() const {
    return std::accumulate(values.begin(), values.end(), 0LL);
}

std::vector<std::vector<int>> WeightFunction::level_sets() const {
    std::vector<std::vector<int>> levels(k + 1);
    for (int v = 0; v < static_cast<int>(values.size()); ++v)
        levels[values[v]].push_back(v);
    return levels;
}

namespace {

void check_sizes(const Graph& g, const WeightFunction& f) {
    if (static_cast<int>(f.values.size()) != g.vertex_count())
        throw std::invalid_argument("weight function defined on " +
                                    std::to_string(f.values.size()) + " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
}

// Demanded sum for one deficient vertex under the given variant.
long long covering_sum(const Graph& g, const WeightFunction& f, Variant variant, int u) {
    const int k = f.k;
    if (variant == Variant::roman || variant == Variant::perfect) {
        long long sum = f.values[u];
        for (int v : g.neighbors(u)) sum += f.values[v];
        return sum;
    }
    long long sum = f.values[u];
    for (int v : g.neighbors(u))
        if (is_strong_value(f.values[v], k)) sum += f.values[v];
    return sum;
}

std::optional<Violation> check_vertex(const Graph& g, const WeightFunction& f, Variant variant,
                                      int u) {
    const int k = f.k;
    if (g.is_isolated(u)) {
        if (f.values[u] != k)
            return Violation{u, k, f.values[u], "isolated vertex must carry k"};
        return std::nullopt;
    }
    if (!is_deficient(f.values[u], k)) return std::nullopt;
    const long long sum = covering_sum(g, f, variant, u);
    const bool exact = variant == Variant::perfect || variant == Variant::perfect_strong;
    if (sum < k)
        return Violation{u, k, sum, "covering sum falls short of k"};
    if (exact && sum > k)
        return Violation{u, k, sum, "covering sum exceeds k (exact variant)"};
    return std::nullopt;
}

}  // namespace

ValidationResult validate(const Graph& g, const WeightFunction& f, Variant variant) {
    check_sizes(g, f);
    for (int u = 0; u < g.vertex_count(); ++u)
        if (auto v = check_vertex(g, f, variant, u))
            return {false, std::move(v)};
    return {};
}

std::vector<Violation> all_violations(const Graph& g, const WeightFunction& f, Variant variant) {
    check_sizes(g, f);
    std::vector<Violation> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (auto v = check_vertex(g, f, variant, u)) out.push_back(std::move(*v));
    return out;
}

WeightFunction uniform_upper_bound_function(const Graph& g, int k) {
    return WeightFunction(k, std::vector<int>(g.vertex_count(), min_high_value(k)));
}

std::vector<int> strong_neighbor_witnesses(const Graph& g, const WeightFunction& f, int u) {
    check_sizes(g, f);
    if (u < 0 || u >= g.vertex_count())
        throw std::invalid_argument("strong_neighbor_witnesses: vertex out of range");
    if (!is_deficient(f.values[u], f.k))
        throw std::invalid_argument("strong_neighbor_witnesses: vertex " + std::to_string(u) +
                                    " is not deficient (2 f(u) > k-1)");
    if (!validate(g, f, Variant::strong))
        throw std::invalid_argument("strong_neighbor_witnesses: f is not strong-valid");
    std::vector<int> out;
    for (int v : g.neighbors(u))
        if (is_strong_value(f.values[v], f.k)) out.push_back(v);
    return out;
}

WeightFunction parse_weight_function(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int k = -1;
    std::vector<int> values;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool blank = true;
        for (char c : line) {
            if (c == '#') break;
            if (!isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) continue;
        std::istringstream ls(line);
        if (k < 0) {
            std::string tag;
            long long kk = -1;
            ls >> tag >> kk;
            if (!ls || tag != "k" || kk < 1 || kk > kMaxK)
                throw std::runtime_error("weight function line " + std::to_string(lineno) +
                                         ": expected header `k <k>` with 1 <= k <= " +
                                         std::to_string(kMaxK));
            k = static_cast<int>(kk);
            continue;
        }
        long long v;
        if (!(ls >> v) || v < 0 || v > k)
            throw std::runtime_error("weight function line " + std::to_string(lineno) +
                                     ": expected one value in {0.." + std::to_string(k) + "}");
        values.push_back(static_cast<int>(v));
    }
    if (k < 0) throw std::runtime_error("weight function: missing `k <k>` header");
    return WeightFunction(k, std::move(values));
}

std::string serialize_weight_function(const WeightFunction& f) {
    std::ostringstream out;
    out << "k " << f.k << "\n";
    for (int v : f.values) out << v << "\n";
    return out.str();
}

}  // namespace romank
