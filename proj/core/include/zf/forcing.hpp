#pragma once

#include <vector>

#include "zf/arc_set.hpp"
#include "zf/graph.hpp"

namespace zf {

struct Colouring {
  VertexSet blue;
  VertexSet white;
  std::vector<Arc> history;  // forces in application order
};

// Colour change rule to fixpoint: a blue vertex with exactly one white
// neighbour forces it. O(n + m) via white-neighbour counters and a queue.
Colouring closure(const Graph& g, const VertexSet& seed);

VertexSet white_set(const Graph& g, const VertexSet& seed);
bool is_zero_forcing_set(const Graph& g, const VertexSet& seed);

// f nonempty and no vertex outside f has exactly one neighbour in f.
bool is_fort(const Graph& g, const VertexSet& f);

// Deterministic forcing run: always fire the lowest-indexed eligible blue
// vertex; each force re-examines the blue neighbours of the forced vertex.
// pre: seed is a zero forcing set of g.
ArcSet canonical_fas(const Graph& g, const VertexSet& seed);

}  // namespace zf
