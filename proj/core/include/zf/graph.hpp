#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zf/errors.hpp"

namespace zf {

using Vertex = std::int32_t;

// Sorted duplicate-free vertex ids with value semantics.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> ids);
  static VertexSet range(Vertex n);

  bool contains(Vertex v) const;
  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<Vertex>& ids() const { return ids_; }
  Vertex operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

struct Edge {
  Vertex u, v;  // normalized u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1, adjacency kept sorted.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex n, const std::vector<Edge>& edges);

  Vertex vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;  // lexicographically sorted

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// Text format: "n m" header, then exactly m lines "u v" with 0 <= u < v < n,
// LF endings, no comments. Serialization sorts edges lexicographically.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_global;   // local id -> global id, ascending
  Vertex to_local(Vertex global) const;  // -1 when absent
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// True iff g - c has more components than g. pre: c proper subset of V(g).
bool is_vertex_cut(const Graph& g, const VertexSet& c);

struct StrongProduct {
  Graph graph;
  Vertex factor_h = 0;  // (u, u') <-> u * factor_h + u'
  Vertex index(Vertex u, Vertex up) const { return u * factor_h + up; }
  std::pair<Vertex, Vertex> unindex(Vertex x) const { return {x / factor_h, x % factor_h}; }
};
StrongProduct strong_product(const Graph& g, const Graph& h);

// Umbrella ordering: for every edge at positions i < j, positions i..j form a
// clique. Returns an ordering when one exists (proper interval recognition).
std::optional<std::vector<Vertex>> proper_interval_order(const Graph& g);
bool is_umbrella_order(const Graph& g, const std::vector<Vertex>& order);

// Minimum set of maximal cliques covering all edges. pre: order is umbrella.
std::vector<VertexSet> minimum_clique_cover_interval(const Graph& g,
                                                     const std::vector<Vertex>& order);

}  // namespace zf
