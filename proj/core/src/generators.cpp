#include "zf/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zf {

namespace {

// Engine output mapped to [0, 1) and [0, k) directly; the std distributions
// are implementation-defined and would break cross-platform determinism.
double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

}  // namespace

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<Vertex>(i + 1)});
  return Graph(n, edges);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<Vertex>(i + 1)});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, edges);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph ladder_graph(Vertex rungs) {
  if (rungs < 1) throw std::invalid_argument("ladder_graph: rungs must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < rungs; ++i) {
    const Vertex top = 2 * i, bottom = 2 * i + 1;
    edges.push_back({top, bottom});
    if (i + 1 < rungs) {
      edges.push_back({top, static_cast<Vertex>(top + 2)});
      edges.push_back({bottom, static_cast<Vertex>(bottom + 2)});
    }
  }
  return Graph(2 * rungs, edges);
}

Graph random_tree(Vertex n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex parent = static_cast<Vertex>(below(rng, static_cast<std::uint64_t>(v)));
    edges.push_back({parent, v});
  }
  return Graph(n, edges);
}

Graph random_connected_graph(Vertex n, double p, std::mt19937_64& rng) {
  const Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  const std::vector<Edge> spine = edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Edge e{u, v};
      if (std::binary_search(spine.begin(), spine.end(), e)) continue;
      if (unit_real(rng) < p) edges.push_back(e);
    }
  }
  return Graph(n, edges);
}

Graph random_proper_interval_graph(Vertex n, std::mt19937_64& rng) {
  // Nondecreasing right reach over the identity order yields an umbrella
  // ordering; reach >= i + 1 keeps the graph connected.
  std::vector<Edge> edges;
  Vertex reach = 0;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex lowest = i + 1 < n ? i + 1 : i;
    reach = std::min<Vertex>(n - 1, std::max<Vertex>(reach, lowest + static_cast<Vertex>(below(rng, 3))));
    for (Vertex j = i + 1; j <= reach; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

PathDecomposition path_graph_decomposition(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<VertexSet> bags;
  if (n == 1) bags.emplace_back(std::vector<Vertex>{0});
  for (Vertex i = 0; i + 1 < n; ++i) {
    bags.emplace_back(std::vector<Vertex>{i, static_cast<Vertex>(i + 1)});
  }
  return PathDecomposition::build(g, std::move(bags));
}

PathDecomposition cycle_graph_decomposition(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<VertexSet> bags;
  for (Vertex i = 0; i + 2 < n; ++i) {
    bags.emplace_back(std::vector<Vertex>{i, static_cast<Vertex>(i + 1), static_cast<Vertex>(n - 1)});
  }
  return PathDecomposition::build(g, std::move(bags));
}

PathDecomposition ladder_graph_decomposition(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<VertexSet> bags;
  if (n == 2) {
    bags.emplace_back(std::vector<Vertex>{0, 1});
  }
  for (Vertex j = 0; j + 2 < n; ++j) {
    bags.emplace_back(std::vector<Vertex>{j, static_cast<Vertex>(j + 1), static_cast<Vertex>(j + 2)});
  }
  return PathDecomposition::build(g, std::move(bags));
}

PathDecomposition interval_decomposition(const Graph& g, const std::vector<Vertex>& order) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> pos(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<VertexSet> bags;
  bags.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) {
    Vertex reach = i;
    for (Vertex w : g.neighbors(order[static_cast<std::size_t>(i)])) {
      reach = std::max(reach, pos[static_cast<std::size_t>(w)]);
    }
    std::vector<Vertex> ids;
    for (Vertex j = i; j <= reach; ++j) ids.push_back(order[static_cast<std::size_t>(j)]);
    bags.emplace_back(std::move(ids));
  }
  return PathDecomposition::build(g, std::move(bags));
}

}  // namespace zf
