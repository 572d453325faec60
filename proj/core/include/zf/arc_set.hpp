#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

struct Arc {
  Vertex tail, head;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Directed selection of host-graph edges, at most one direction per edge.
// Arcs are kept sorted; in/out-degrees are kept for O(1) queries.
class ArcSet {
 public:
  ArcSet() = default;
  // Validates that every arc is an edge and that no edge appears twice
  // (same or opposite direction).
  static ArcSet build(const Graph& g, std::vector<Arc> arcs);

  int size() const { return static_cast<int>(arcs_.size()); }
  Vertex vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool contains(Vertex tail, Vertex head) const;
  int in_degree(Vertex v) const { return in_deg_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return out_deg_[static_cast<std::size_t>(v)]; }

  ArcSet reversed() const;
  ArcSet restricted(const std::function<bool(const Arc&)>& keep) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::int32_t> in_deg_, out_deg_;
};

// All in/out-degrees <= 1 and no directed cycle: disjoint directed paths.
bool satisfies_p1(const ArcSet& a);

// Vertices with no in-arc (resp. out-arc). pre: satisfies_p1(a).
VertexSet sources(const ArcSet& a);
VertexSet sinks(const ArcSet& a);

// Cycle v_0..v_{k-1} with arc_flags[i] = ((v_i, v_{i+1 mod k}) is an arc);
// wherever a step is not an arc, both neighbouring steps are arcs.
struct ChainTwist {
  std::vector<Vertex> cycle;
  std::vector<bool> arc_flags;
};
bool is_chain_twist(const Graph& g, const ArcSet& a, const ChainTwist& t);

// Simulates forcing restricted to the arcs of a, starting from sources(a).
// Completion proves a is a forcing arc set; a stall yields a twist witness:
// same-path stalls close directly, otherwise stalled paths chain into a
// cycle of path segments joined by blocked-frontier edges, reduced until
// the walk is a cycle. pre: satisfies_p1(a).
std::optional<ChainTwist> find_chain_twist(const Graph& g, const ArcSet& a);

// True iff satisfies_p1(a) and find_chain_twist finds no witness.
bool is_forcing_arc_set(const Graph& g, const ArcSet& a);

// Composition across a vertex cut: a1 on g[v1 ∪ c] kept, a2 on g - v1
// reversed, both translated to g ids. pre: c is a cut, v1 is one component
// of g - c, a1/a2 are forcing arc sets of their sides, and every vertex of
// c is a source of both. The result is verified to be a forcing arc set.
ArcSet merge_via_cut(const Graph& g, const VertexSet& c, const VertexSet& v1,
                     const ArcSet& a1, const ArcSet& a2);

// Checks |a| <= n - z_exact. Errors when a is not a forcing arc set.
bool fas_size_bound_check(const Graph& g, const ArcSet& a, int z_exact);

}  // namespace zf
