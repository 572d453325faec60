#pragma once

#include <random>

#include "zf/graph.hpp"
#include "zf/path_decomposition.hpp"

namespace zf {

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);     // pre: n >= 3
Graph complete_graph(Vertex n);
Graph ladder_graph(Vertex rungs);  // vertices 2i, 2i+1 per rung; pre: rungs >= 1

// Random recursive spanning tree plus G(n, p) extra edges; always connected.
Graph random_connected_graph(Vertex n, double p, std::mt19937_64& rng);
Graph random_tree(Vertex n, std::mt19937_64& rng);
// Random connected umbrella graph on the identity ordering.
Graph random_proper_interval_graph(Vertex n, std::mt19937_64& rng);

// Width-1 bags {i, i+1} for a path graph.
PathDecomposition path_graph_decomposition(const Graph& g);
// Width-2 bags {i, i+1, n-1} for a cycle graph.
PathDecomposition cycle_graph_decomposition(const Graph& g);
// Width-2 sliding bags for a ladder graph.
PathDecomposition ladder_graph_decomposition(const Graph& g);
// Maximal-clique bags along an umbrella ordering.
PathDecomposition interval_decomposition(const Graph& g, const std::vector<Vertex>& order);

}  // namespace zf
