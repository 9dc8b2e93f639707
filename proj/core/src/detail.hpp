#pragma once

#include <vector>

#include "romank/solve.hpp"

namespace romank::detail {

// Multiset engine over an explicit bipartition labelling; the public
// solve_kmn_multiset wraps it with the side_a-first labelling.
SolveResult multiset_solve(int k, Variant variant, const std::vector<int>& side_a,
                           const std::vector<int>& side_b, int total_vertices);

}  // namespace romank::detail
