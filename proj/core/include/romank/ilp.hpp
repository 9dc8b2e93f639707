#pragma once

#include <string>

#include "romank/graph.hpp"
#include "romank/weights.hpp"

namespace romank {

// CPLEX-LP-format model whose optimal objective is the domination number.
//
// Binaries x_v_i (vertex v takes value i) with one assignment row per
// vertex; z_u is tied by equality to the low indicator sum over 2i < k.
// Covering rows per vertex u:
//   roman/perfect:          sum over N[u] of i*x_v_i  >= k z_u
//   strong/perfect-strong:  sum_i i*x_u_i + sum over N(u), 2i > k of
//                           i*x_v_i >= k z_u
// The perfect variants add the matching <= k + M (1 - z_u) row with
// M = k (deg(u) + 1). Isolated vertices are pinned with x_u_k = 1.
std::string export_ilp(const Graph& g, int k, Variant variant);

}  // namespace romank
