#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

// Bags X_1..X_k over a host graph; X_0 = X_{k+1} = empty sentinels are
// implicit. Valid means: every vertex and edge is covered (D1) and each
// vertex's occurrences are contiguous (D2).
class PathDecomposition {
 public:
  PathDecomposition() = default;
  static PathDecomposition build(const Graph& g, std::vector<VertexSet> bags);

  int bag_count() const { return static_cast<int>(bags_.size()); }
  // 0 <= i <= k+1; sentinel indices return the empty set.
  const VertexSet& bag(int i) const;
  const std::vector<VertexSet>& bags() const { return bags_; }
  int width() const;  // max |X_i| - 1; -1 for the empty decomposition

  // First/last bag index containing v, 1-based.
  int first_bag(Vertex v) const { return first_[static_cast<std::size_t>(v)]; }
  int last_bag(Vertex v) const { return last_[static_cast<std::size_t>(v)]; }

  // Union of bags i..j via first occurrences: |X_i| plus one bucket per
  // slot in (i, j]. pre: 0 <= i <= j <= k+1.
  VertexSet prefix_union(int i, int j) const;

  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;

 private:
  std::vector<VertexSet> bags_;
  std::vector<int> first_, last_;
  std::vector<std::vector<Vertex>> introduced_;  // vertices with first_bag == i (1-based slot)
  Vertex n_ = 0;
};

// Additionally: no empty interior bag (D3) and consecutive bags differ by
// exactly one insertion or deletion, sentinels included (D4).
class NicePathDecomposition {
 public:
  struct Step {
    bool insert;
    Vertex v;
  };

  NicePathDecomposition() = default;
  static NicePathDecomposition build(const Graph& g, PathDecomposition pd);

  const PathDecomposition& pd() const { return pd_; }
  int bag_count() const { return pd_.bag_count(); }
  const VertexSet& bag(int i) const { return pd_.bag(i); }
  int width() const { return pd_.width(); }
  // steps()[i-1] transforms bag(i-1) into bag(i), for i = 1..k+1.
  const std::vector<Step>& steps() const { return steps_; }

 private:
  PathDecomposition pd_;
  std::vector<Step> steps_;
};

// Width-preserving rewrite: between consecutive bags delete the departing
// vertices one at a time, then insert the arriving ones; ramps up from and
// down to the sentinels; drops duplicate bags. Errors when an interior bag
// would become empty (the covered graph is disconnected there).
NicePathDecomposition make_nice(const Graph& g, const PathDecomposition& pd);

enum class BagClass { EndSet, Cut };
// EndSet iff all bags on one side of t are contained in X_t; otherwise X_t
// must be a vertex cut (cross-checked, disagreement is an error).
// pre: g connected, 1 <= t <= k.
BagClass classify_bag(const Graph& g, const NicePathDecomposition& npd, int t);

// Text format: one bag per line as ascending space-separated ids, in path
// order; sentinel bags are omitted; LF endings.
PathDecomposition parse_decomposition(std::string_view text, const Graph& g);
std::string serialize_decomposition(const PathDecomposition& pd);

struct ExactPathwidth {
  int width = -1;
  PathDecomposition decomposition;
};
// Subset dynamic program over vertex orderings (max boundary objective).
// pre: n <= max_n.
ExactPathwidth exact_pathwidth(const Graph& g, int max_n = 12);

}  // namespace zf
