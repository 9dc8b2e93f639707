#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "romank/graph.hpp"

namespace romank {

// The four function classes. Containments that always hold:
// perfect_strong => strong => roman, and perfect => roman.
enum class Variant { roman, perfect, strong, perfect_strong };

constexpr const char* kVariantNames[] = {"roman", "perfect", "strong", "perfect-strong"};
const char* to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view s);

// All threshold comparisons use doubled integers so that k/2 never gets
// rounded: `value < k/2` is 2v <= k-1 and `value > k/2` is 2v >= k+1.
// For even k the value k/2 satisfies neither.
constexpr bool is_deficient(int value, int k) { return 2 * value <= k - 1; }
constexpr bool is_strong_value(int value, int k) { return 2 * value >= k + 1; }
// Smallest value v with 2v >= k.
constexpr int min_high_value(int k) { return (k + 1) / 2; }

inline constexpr int kMaxK = 1000000;

// Assignment f: V -> {0..k}. Weights are exact 64-bit integers; the parse
// caps (k <= 1e6, |V| <= 1e5) keep every sum far from overflow.
struct WeightFunction {
    int k = 1;
    std::vector<int> values;

    WeightFunction() = default;
    WeightFunction(int k_, std::vector<int> values_);

    long long weight() const;
    // Level partition (V_0, ..., V_k): level_sets()[i] lists the vertices
    // with value i.
    std::vector<std::vector<int>> level_sets() const;
};

// First (or every) point where f fails the variant predicate on g.
struct Violation {
    int vertex = -1;
    // Demanded neighborhood sum vs. what is actually there; for the
    // perfect variants `actual > required` reports the excess.
    long long required = 0;
    long long actual = 0;
    std::string reason;
};

struct ValidationResult {
    bool ok = true;
    std::optional<Violation> first;
    explicit operator bool() const { return ok; }
};

// True iff every isolated vertex carries exactly k and every vertex u with
// 2 f(u) <= k-1 meets the variant demand:
//   roman:          sum over N[u] of f  >= k
//   perfect:        sum over N[u] of f  == k
//   strong:         f(u) + sum of strong neighbor values >= k
//   perfect_strong: f(u) + sum of strong neighbor values == k
// Throws std::invalid_argument when f is not defined on exactly V(g).
ValidationResult validate(const Graph& g, const WeightFunction& f, Variant variant);

// Every violation instead of just the first (the CLI explain mode).
std::vector<Violation> all_violations(const Graph& g, const WeightFunction& f, Variant variant);

// f == ceil(k/2) everywhere; valid for all four variants since no vertex
// is deficient. Weight |V| * ceil(k/2).
WeightFunction uniform_upper_bound_function(const Graph& g, int k);

// All neighbors v of u with 2 f(v) >= k+1. Preconditions: f is Strong- or
// PerfectStrong-valid and u is deficient; throws otherwise. Nonempty for
// strong-valid f, a singleton for perfect-strong-valid f.
std::vector<int> strong_neighbor_witnesses(const Graph& g, const WeightFunction& f, int u);

// Text form: header `k <k>`, then one value per vertex line. '#' comments.
WeightFunction parse_weight_function(std::string_view text);
std::string serialize_weight_function(const WeightFunction& f);

}  // namespace romank
