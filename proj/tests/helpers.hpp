#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "zf/approx.hpp"
#include "zf/arc_set.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/path_decomposition.hpp"

namespace zf::test {

// Every labeled graph on n vertices, by edge-subset mask. Keep n small.
void for_each_graph(Vertex n, bool connected_only, const std::function<void(const Graph&)>& fn);

// Quadratic closure that rescans all blue vertices until stable; shares no
// code with the counter-and-queue engine.
VertexSet naive_closure_white(const Graph& g, const VertexSet& seed);

bool naive_is_fort(const Graph& g, const VertexSet& f);

// Forcing restricted to the arcs: starting all sources blue, fire (u, v)
// only when v is u's unique white neighbour. True iff all blue at the end.
bool naive_restricted_simulation_completes(const Graph& g, const ArcSet& a);

// Random P1 arc set: shuffled edges with random orientation, each kept when
// degree caps and acyclicity allow.
ArcSet random_p1_arc_set(const Graph& g, std::mt19937_64& rng, double keep = 0.7);

// Literal sweep with per-step from-scratch white-set recomputation; the
// readable reference the incremental engine must reproduce exactly.
// s_sizes, when given, records |s| after every pass.
ApproxResult naive_sweep(const Graph& g, const NicePathDecomposition& npd,
                         std::vector<int>* s_sizes = nullptr);

// Pathwidth as the vertex separation number over all n! layouts. pre: n <= 8.
int permutation_pathwidth(const Graph& g);

// Minimum number of cliques covering all edges, by branch and bound over
// maximal cliques. pre: n <= 8.
int brute_force_clique_cover(const Graph& g);

std::uint64_t test_rng_seed(std::uint64_t salt);

}  // namespace zf::test
