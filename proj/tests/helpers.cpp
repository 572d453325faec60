#include "helpers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace zf::test {

void for_each_graph(Vertex n, bool connected_only, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::uint32_t limit = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    Graph g(n, edges);
    if (connected_only && !is_connected(g)) continue;
    fn(g);
  }
}

VertexSet naive_closure_white(const Graph& g, const VertexSet& seed) {
  const Vertex n = g.vertex_count();
  std::vector<char> blue(static_cast<std::size_t>(n), 0);
  for (Vertex v : seed) blue[static_cast<std::size_t>(v)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < n; ++u) {
      if (!blue[static_cast<std::size_t>(u)]) continue;
      Vertex white_nb = -1;
      int whites = 0;
      for (Vertex w : g.neighbors(u))
        if (!blue[static_cast<std::size_t>(w)]) {
          ++whites;
          white_nb = w;
        }
      if (whites == 1) {
        blue[static_cast<std::size_t>(white_nb)] = 1;
        changed = true;
      }
    }
  }
  std::vector<Vertex> white;
  for (Vertex v = 0; v < n; ++v)
    if (!blue[static_cast<std::size_t>(v)]) white.push_back(v);
  return VertexSet(std::move(white));
}

bool naive_is_fort(const Graph& g, const VertexSet& f) {
  if (f.empty()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (f.contains(v)) continue;
    int inside = 0;
    for (Vertex w : g.neighbors(v))
      if (f.contains(w)) ++inside;
    if (inside == 1) return false;
  }
  return true;
}

bool naive_restricted_simulation_completes(const Graph& g, const ArcSet& a) {
  const Vertex n = g.vertex_count();
  std::vector<char> blue(static_cast<std::size_t>(n), 1);
  for (const Arc& arc : a.arcs()) blue[static_cast<std::size_t>(arc.head)] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arc& arc : a.arcs()) {
      if (!blue[static_cast<std::size_t>(arc.tail)] || blue[static_cast<std::size_t>(arc.head)])
        continue;
      int whites = 0;
      for (Vertex w : g.neighbors(arc.tail))
        if (!blue[static_cast<std::size_t>(w)]) ++whites;
      if (whites == 1) {
        blue[static_cast<std::size_t>(arc.head)] = 1;
        changed = true;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!blue[static_cast<std::size_t>(v)]) return false;
  return true;
}

ArcSet random_p1_arc_set(const Graph& g, std::mt19937_64& rng, double keep) {
  const Vertex n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[rng() % i]);
  std::vector<Vertex> next(static_cast<std::size_t>(n), -1);
  std::vector<char> has_in(static_cast<std::size_t>(n), 0);
  std::vector<Arc> arcs;
  for (const Edge& e : edges) {
    if ((rng() >> 11) * 0x1.0p-53 >= keep) continue;
    const bool flip = rng() & 1;
    const Vertex tail = flip ? e.v : e.u;
    const Vertex head = flip ? e.u : e.v;
    if (next[static_cast<std::size_t>(tail)] != -1 || has_in[static_cast<std::size_t>(head)])
      continue;
    Vertex x = head;  // tail has no out-arc, so a cycle ends exactly at tail
    while (next[static_cast<std::size_t>(x)] != -1) x = next[static_cast<std::size_t>(x)];
    if (x == tail) continue;
    next[static_cast<std::size_t>(tail)] = head;
    has_in[static_cast<std::size_t>(head)] = 1;
    arcs.push_back({tail, head});
  }
  return ArcSet::build(g, std::move(arcs));
}

namespace {

// White(seed, window) recomputed from scratch on the induced subgraph.
VertexSet window_white(const Graph& g, const VertexSet& window, const VertexSet& seed) {
  const InducedSubgraph sub = induced_subgraph(g, window);
  std::vector<Vertex> local;
  for (Vertex v : seed) local.push_back(sub.to_local(v));
  const VertexSet lw = white_set(sub.graph, VertexSet(std::move(local)));
  std::vector<Vertex> global;
  for (Vertex v : lw) global.push_back(sub.to_global[static_cast<std::size_t>(v)]);
  return VertexSet(std::move(global));
}

// Canonical forcing arcs of the window from the seed, in host ids.
void append_window_fas(const Graph& g, const VertexSet& window, const VertexSet& seed,
                       std::vector<Arc>& acc) {
  const InducedSubgraph sub = induced_subgraph(g, window);
  std::vector<Vertex> local;
  for (Vertex v : seed) local.push_back(sub.to_local(v));
  const ArcSet fas = canonical_fas(sub.graph, VertexSet(std::move(local)));
  for (const Arc& a : fas.arcs())
    acc.push_back({sub.to_global[static_cast<std::size_t>(a.tail)],
                   sub.to_global[static_cast<std::size_t>(a.head)]});
}

}  // namespace

ApproxResult naive_sweep(const Graph& g, const NicePathDecomposition& npd,
                         std::vector<int>* s_sizes) {
  ApproxResult out;
  out.width_used = npd.width();
  if (g.vertex_count() == 0) {
    out.fas = ArcSet::build(g, {});
    return out;
  }
  const int k = npd.bag_count();
  const Vertex n = g.vertex_count();
  std::vector<Arc> acc;
  int t = 0;
  VertexSet s;
  for (;;) {
    int z = t;
    VertexSet w;
    while (w.empty() && z <= k) {
      ++z;
      w = window_white(g, npd.pd().prefix_union(t, z), set_union(npd.bag(t), npd.bag(z)));
    }
    for (Arc& a : acc) std::swap(a.tail, a.head);
    {
      std::vector<char> has_in(static_cast<std::size_t>(n), 0);
      for (const Arc& a : acc) has_in[static_cast<std::size_t>(a.head)] = 1;
      std::vector<Vertex> ids;
      for (Vertex v : npd.pd().prefix_union(0, t))
        if (!has_in[static_cast<std::size_t>(v)]) ids.push_back(v);
      s = VertexSet(std::move(ids));
    }
    out.iterations.push_back({t, z});
    if (!w.empty()) {
      out.packing.forts.push_back(w);
      s = set_union(s, npd.bag(z - 1));
      if (s_sizes) s_sizes->push_back(s.size());
      append_window_fas(g, npd.pd().prefix_union(t, z), set_union(npd.bag(t), npd.bag(z - 1)),
                        acc);
      std::vector<Arc> kept;
      for (const Arc& a : acc)
        if (!npd.bag(z).contains(a.head)) kept.push_back(a);
      acc = std::move(kept);
      t = z;
      continue;
    }
    if (s_sizes) s_sizes->push_back(s.size());
    append_window_fas(g, npd.pd().prefix_union(t, z), npd.bag(t), acc);
    break;
  }
  out.s = s;
  out.fas = ArcSet::build(g, std::move(acc));
  return out;
}

int permutation_pathwidth(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::uint32_t prefix = 0;
    int sep = 0;
    for (Vertex v : order) {
      prefix |= 1u << v;
      int boundary = 0;
      for (Vertex u = 0; u < n; ++u) {
        if (!(prefix & (1u << u))) continue;
        bool outside = false;
        for (Vertex w : g.neighbors(u))
          if (!(prefix & (1u << w))) outside = true;
        if (outside) ++boundary;
      }
      sep = std::max(sep, boundary);
      if (sep >= best) break;
    }
    best = std::min(best, sep);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

struct CoverSearch {
  std::vector<std::uint32_t> clique_edges;  // edge mask per maximal clique
  std::vector<std::uint32_t> clique_verts;
  int best = 0;

  void run(std::uint32_t remaining, int used) {
    if (used >= best) return;
    if (remaining == 0) {
      best = used;
      return;
    }
    const int e = std::countr_zero(remaining);
    for (std::size_t i = 0; i < clique_edges.size(); ++i)
      if (clique_edges[i] & (1u << e)) run(remaining & ~clique_edges[i], used + 1);
  }
};

}  // namespace

int brute_force_clique_cover(const Graph& g) {
  const Vertex n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  if (edges.empty()) return 0;
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (Vertex u = 0; u < n && clique; ++u) {
      if (!(mask & (1u << u))) continue;
      for (Vertex v = u + 1; v < n && clique; ++v)
        if ((mask & (1u << v)) && !g.has_edge(u, v)) clique = false;
    }
    if (clique) cliques.push_back(mask);
  }
  CoverSearch search;
  for (std::uint32_t c : cliques) {
    bool maximal = true;
    for (std::uint32_t d : cliques)
      if (d != c && (c & d) == c) maximal = false;
    if (!maximal) continue;
    std::uint32_t em = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((c & (1u << edges[i].u)) && (c & (1u << edges[i].v))) em |= 1u << i;
    search.clique_edges.push_back(em);
    search.clique_verts.push_back(c);
  }
  search.best = static_cast<int>(edges.size()) + 1;
  search.run((1u << edges.size()) - 1, 0);
  return search.best;
}

std::uint64_t test_rng_seed(std::uint64_t salt) {
  return 0x9e3779b97f4a7c15ull * (salt + 1) ^ 0xda39a3ee5e6b4b0dull;
}

}  // namespace zf::test
