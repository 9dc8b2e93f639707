#pragma once

#include <optional>
#include <string>
#include <vector>

#include "romank/graph.hpp"
#include "romank/solve.hpp"
#include "romank/weights.hpp"

namespace romank {

// No value strictly between 0 and k/2, i.e. every value v has v == 0 or
// 2v >= k.
bool is_gap_free(const WeightFunction& f, int k);

// Rewrites a strong-valid function into a gap-free strong-valid function
// without increasing its weight. Each mid-valued vertex is either zeroed
// outright (its strong neighbors already cover k) or zeroed with the
// deficit pushed onto one strong neighbor, capped at k. Throws when the
// input is not strong-valid.
WeightFunction normalize_strong(const Graph& g, WeightFunction f, int k);

// Gap-free strong-valid f for k becomes strong-valid for k+1: zeros stay,
// every positive value gains one. Weight grows by the number of positive
// vertices.
WeightFunction lift_strong(const Graph& g, const WeightFunction& f, int k);

// Roman-valid f for k becomes roman-valid for k+1: with r = floor(k/2),
// values <= r gain one, the rest stay; isolated vertices are re-pinned to
// k+1. Weight grows by |{v : f(v) <= r}| plus the number of isolated
// vertices.
WeightFunction lift_roman(const Graph& g, const WeightFunction& f, int k);

struct GadgetParams {
    int m = 3;    // >= 3
    int ell = 2;  // >= 2
};

// K_{m, m^ell} with three pendant leaves on every side-A vertex;
// m^ell + 4m vertices in total (capped at 10^4).
Graph build_gadget(const GadgetParams& p);

struct LiftReport {
    int k = 0;
    long long value_k = 0;
    long long value_k_plus_1 = 0;
    long long lifted_weight = 0;
    long long bound_rhs = 0;
    bool holds = false;  // value_k_plus_1 <= lifted_weight <= bound_rhs
};

struct CheckOutcome {
    std::string check;
    std::string graph_id;
    int k = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
    std::optional<std::vector<int>> witness;
};

struct SuiteReport {
    std::string graph_id;
    std::vector<CheckOutcome> checks;
    bool complete = true;  // false when a solver budget cut the run short

    bool all_hold() const;
    std::string to_json() const;
};

// Exact-solver-driven verification, for k = 1..k_max, of: the component
// and uniform sandwich bounds, the variant chain, existence/uniqueness of
// strong neighbors on optimal witnesses, the two lift inequalities (which
// read one k above), validity and weight accounting of both lift
// transforms, and edge-removal monotonicity for the roman and strong
// numbers. Budget overruns yield a partial report with complete=false.
SuiteReport check_inequality_suite(const Graph& g, const std::string& graph_id, int k_max,
                                   const Budget& budget = {});

struct GadgetReport {
    GadgetParams params;
    int k = 0;
    int vertices = 0;
    long long gamma_p = 0;
    long long bound = 0;  // m k + m^ell ceil(k/2)
    bool bound_holds = false;
    // weight-per-vertex ratio against the uniform target, kept as exact
    // rationals: gamma_p/|V| vs (k or k+1)/2
    long long ratio_num = 0, ratio_den = 1;
    long long target_num = 0, target_den = 2;
    bool ratio_at_least_target = false;
    bool exact = true;

    std::string to_json() const;
};

// Exact perfect-roman number of the pendant gadget compared against the
// mk + m^ell ceil(k/2) accounting; reports the weight-per-vertex ratio
// without claiming anything beyond this finite instance.
GadgetReport gadget_lower_bound_check(const GadgetParams& p, int k, const Budget& budget = {});

}  // namespace romank
