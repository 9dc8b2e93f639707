#include <algorithm>
#include <chrono>

#include "romank/solve.hpp"

namespace romank {

namespace {

inline constexpr int kMultisetCap = 200;          // on m, n and k
inline constexpr long long kProfileCap = 20'000'000;  // per-side enumeration guard

// One side's value multiset plus the aggregates that the opposite side's
// predicate actually reads.
struct Profile {
    std::vector<int> values;  // ascending
    long long sum = 0;
    long long strong_sum = 0;  // values v with 2v >= k+1
    int min_low = -1;          // smallest deficient value; -1 if none
    int distinct_lows = 0;
};

void enumerate_profiles(int size, int k, std::vector<int>& cur, std::vector<Profile>& out) {
    if (static_cast<int>(cur.size()) == size) {
        Profile p;
        p.values = cur;
        int prev_low = -1;
        for (int v : cur) {
            p.sum += v;
            if (is_strong_value(v, k)) p.strong_sum += v;
            if (is_deficient(v, k)) {
                if (p.min_low < 0) p.min_low = v;
                if (v != prev_low) {
                    ++p.distinct_lows;
                    prev_low = v;
                }
            }
        }
        out.push_back(std::move(p));
        return;
    }
    const int lo = cur.empty() ? 0 : cur.back();
    for (int v = lo; v <= k; ++v) {
        cur.push_back(v);
        enumerate_profiles(size, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Profile> profiles(int size, int k) {
    // C(size + k, k) profiles; guard against runaway enumerations near the caps.
    long long count = 1;
    for (int i = 1; i <= std::min(size, k); ++i) {
        count = count * (size + k - i + 1) / i;
        if (count > kProfileCap)
            throw std::invalid_argument(
                "solve_kmn_multiset: side enumeration would exceed " +
                std::to_string(kProfileCap) + " multisets; shrink m, n or k");
    }
    std::vector<Profile> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<int> cur;
    enumerate_profiles(size, k, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Profile& a, const Profile& b) { return a.sum < b.sum; });
    return out;
}

// Validity of the pair (this side's lows vs. the opposite side's sums).
bool side_ok(const Profile& side, const Profile& other, int k, Variant variant) {
    if (side.min_low < 0) return true;
    switch (variant) {
        case Variant::roman:
            return side.min_low + other.sum >= k;
        case Variant::perfect:
            return side.distinct_lows == 1 && side.min_low + other.sum == k;
        case Variant::strong:
            return side.min_low + other.strong_sum >= k;
        case Variant::perfect_strong:
            return side.distinct_lows == 1 && side.min_low + other.strong_sum == k;
    }
    return false;
}

// Interleave the two ascending multisets following the vertex labelling;
// taking the smallest remaining value of a vertex's own side at each index
// is the lexicographically smallest arrangement of the pair.
std::vector<int> assemble(const Profile& a, const Profile& b, const std::vector<char>& in_a,
                          int total) {
    std::vector<int> out(total);
    size_t ia = 0, ib = 0;
    for (int v = 0; v < total; ++v) out[v] = in_a[v] ? a.values[ia++] : b.values[ib++];
    return out;
}

}  // namespace

namespace detail {

SolveResult multiset_solve(int k, Variant variant, const std::vector<int>& side_a,
                           const std::vector<int>& side_b, int total_vertices) {
    const auto start = std::chrono::steady_clock::now();
    const int m = static_cast<int>(side_a.size());
    const int n = static_cast<int>(side_b.size());
    if (m < 1 || n < 1 || m > kMultisetCap || n > kMultisetCap)
        throw std::invalid_argument("solve_kmn_multiset: need 1 <= m, n <= " +
                                    std::to_string(kMultisetCap));
    if (k < 1 || k > kMultisetCap)
        throw std::invalid_argument("solve_kmn_multiset: need 1 <= k <= " +
                                    std::to_string(kMultisetCap));

    std::vector<char> in_a(total_vertices, 0);
    for (int v : side_a) in_a[v] = 1;

    const std::vector<Profile> pa = profiles(m, k);
    const std::vector<Profile> pb = (m == n) ? pa : profiles(n, k);

    long long best = -1;
    std::vector<int> best_vec;
    long long pairs = 0;
    for (const Profile& b : pb) {
        if (best >= 0 && b.sum > best) break;
        for (const Profile& a : pa) {
            const long long w = a.sum + b.sum;
            if (best >= 0 && w > best) break;
            ++pairs;
            if (!side_ok(a, b, k, variant) || !side_ok(b, a, k, variant)) continue;
            std::vector<int> vec = assemble(a, b, in_a, total_vertices);
            if (best < 0 || w < best || (w == best && vec < best_vec)) {
                best = w;
                best_vec = std::move(vec);
            }
        }
    }

    SolveResult result;
    result.method = Method::multiset;
    result.value = best;
    result.witness = WeightFunction(k, std::move(best_vec));
    result.nodes_explored = pairs;
    result.exact = true;
    result.lower_bound = best;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace detail

SolveResult solve_kmn_multiset(int m, int n, int k, Variant variant) {
    std::vector<int> side_a(m), side_b(n);
    for (int i = 0; i < m; ++i) side_a[i] = i;
    for (int i = 0; i < n; ++i) side_b[i] = m + i;
    return detail::multiset_solve(k, variant, side_a, side_b, m + n);
}

}  // namespace romank
