#include "zf/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zf {

namespace {

void require_component_budget(const char* op, int size, int budget) {
  if (size > budget) {
    throw PreconditionError(PreconditionError::Kind::BudgetExceeded,
                            std::string(op) + ": component of size " + std::to_string(size) +
                                " exceeds budget " + std::to_string(budget));
  }
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
  }
  return adj;
}

// Colour change rule to fixpoint over bitmask adjacency.
std::uint64_t mask_closure(const std::vector<std::uint64_t>& adj, std::uint64_t blue,
                           std::uint64_t full) {
  bool changed = true;
  while (changed && blue != full) {
    changed = false;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if (!(blue >> u & 1)) continue;
      const std::uint64_t white = adj[u] & ~blue;
      if (white != 0 && (white & (white - 1)) == 0) {
        blue |= white;
        changed = true;
      }
    }
  }
  return blue;
}

}  // namespace

ExactZ exact_z(const Graph& g, const OracleBudget& budget) {
  ExactZ out;
  std::vector<Vertex> witness;
  for (const VertexSet& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const int cn = sub.graph.vertex_count();
    require_component_budget("exact_z", cn, budget.max_n_zexact);
    require_component_budget("exact_z", cn, 63);
    const std::vector<std::uint64_t> adj = adjacency_masks(sub.graph);
    const std::uint64_t full = (std::uint64_t{1} << cn) - 1;

    // Increasing cardinality, masks in increasing numeric order; the first
    // success is the minimum and fixes a deterministic witness.
    std::uint64_t best = full;
    int best_k = cn;
    for (int k = 1; k < cn && best_k == cn; ++k) {
      for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s <= full;) {
        if (mask_closure(adj, s, full) == full) {
          best = s;
          best_k = k;
          break;
        }
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
      }
    }
    out.z += best_k;
    for (int i = 0; i < cn; ++i) {
      if (best >> i & 1) witness.push_back(sub.to_global[static_cast<std::size_t>(i)]);
    }
  }
  out.witness = VertexSet(std::move(witness));
  return out;
}

ExactFt exact_ft(const Graph& g, const OracleBudget& budget) {
  ExactFt out;
  for (const VertexSet& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const int cn = sub.graph.vertex_count();
    require_component_budget("exact_ft", cn, budget.max_n_ft);
    require_component_budget("exact_ft", cn, 20);
    std::vector<std::uint64_t> adj64 = adjacency_masks(sub.graph);
    std::vector<std::uint32_t> adj(adj64.begin(), adj64.end());
    const std::uint32_t full = (std::uint32_t{1} << cn) - 1;

    // All forts of the component, then the inclusion-minimal ones. A fort
    // keeps every outside vertex away from exactly one inside neighbour.
    std::vector<std::uint32_t> forts;
    for (std::uint32_t w = 1; w <= full; ++w) {
      bool fort = true;
      for (int v = 0; v < cn && fort; ++v) {
        if (w >> v & 1) continue;
        fort = std::popcount(adj[static_cast<std::size_t>(v)] & w) != 1;
      }
      if (fort) forts.push_back(w);
    }
    std::sort(forts.begin(), forts.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t w : forts) {
      bool keep = true;
      for (std::uint32_t m : minimal) {
        if ((m & w) == m) {
          keep = false;
          break;
        }
      }
      if (keep) minimal.push_back(w);
    }

    // Exact packing: best[s] = max disjoint minimal forts inside vertex set
    // s, branching on the lowest available vertex.
    std::vector<std::vector<int>> with_vertex(static_cast<std::size_t>(cn));
    for (int fi = 0; fi < static_cast<int>(minimal.size()); ++fi) {
      for (int v = 0; v < cn; ++v) {
        if (minimal[static_cast<std::size_t>(fi)] >> v & 1) {
          with_vertex[static_cast<std::size_t>(v)].push_back(fi);
        }
      }
    }
    std::vector<std::int16_t> best(std::size_t{1} << cn, 0);
    std::vector<std::int32_t> choice(std::size_t{1} << cn, -1);
    for (std::uint32_t s = 1; s <= full; ++s) {
      const int v = std::countr_zero(s);
      best[s] = best[s & (s - 1)];
      for (int fi : with_vertex[static_cast<std::size_t>(v)]) {
        const std::uint32_t f = minimal[static_cast<std::size_t>(fi)];
        if ((f & s) != f) continue;
        const std::int16_t cand = static_cast<std::int16_t>(1 + best[s & ~f]);
        if (cand > best[s]) {
          best[s] = cand;
          choice[s] = fi;
        }
      }
    }
    out.ft += best[full];
    for (std::uint32_t s = full; s != 0;) {
      if (choice[s] < 0) {
        s &= s - 1;
        continue;
      }
      const std::uint32_t f = minimal[static_cast<std::size_t>(choice[s])];
      std::vector<Vertex> ids;
      for (int i = 0; i < cn; ++i) {
        if (f >> i & 1) ids.push_back(sub.to_global[static_cast<std::size_t>(i)]);
      }
      out.witness.forts.emplace_back(std::move(ids));
      s &= ~f;
    }
  }
  return out;
}

ProperIntervalZ z_proper_interval(const Graph& g) {
  const std::optional<std::vector<Vertex>> order = proper_interval_order(g);
  if (!order) {
    throw PreconditionError(PreconditionError::Kind::NotProperInterval,
                            "z_proper_interval: graph has no umbrella ordering");
  }
  ProperIntervalZ out;
  out.cover = minimum_clique_cover_interval(g, *order);
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) pos[static_cast<std::size_t>((*order)[static_cast<std::size_t>(i)])] = i;
  std::vector<Arc> arcs;
  arcs.reserve(out.cover.size());
  for (const VertexSet& q : out.cover) {
    Vertex lo = q[0], hi = q[0];
    for (Vertex v : q) {
      if (pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(lo)]) lo = v;
      if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(hi)]) hi = v;
    }
    arcs.push_back({lo, hi});
  }
  out.fas = ArcSet::build(g, std::move(arcs));
  if (!is_forcing_arc_set(g, out.fas)) {
    throw std::logic_error("z_proper_interval: cover arcs failed to certify");
  }
  out.z = g.vertex_count() - static_cast<int>(out.cover.size());
  if (sources(out.fas).size() != out.z) {
    throw std::logic_error("z_proper_interval: source count disagrees with cover size");
  }
  return out;
}

CutBounds cut_bounds(const Graph& g, const VertexSet& c, const VertexSet& v1,
                     const OracleBudget& budget) {
  if (!is_vertex_cut(g, c)) {
    throw PreconditionError(PreconditionError::Kind::NotACut,
                            "cut_bounds: removing c does not disconnect g");
  }
  const VertexSet rest = set_difference(VertexSet::range(g.vertex_count()), c);
  const InducedSubgraph minus = induced_subgraph(g, rest);
  bool matched = false;
  for (const VertexSet& comp : connected_components(minus.graph)) {
    std::vector<Vertex> global;
    global.reserve(static_cast<std::size_t>(comp.size()));
    for (Vertex v : comp) global.push_back(minus.to_global[static_cast<std::size_t>(v)]);
    if (VertexSet(std::move(global)) == v1) {
      matched = true;
      break;
    }
  }
  if (!matched) {
    throw PreconditionError(PreconditionError::Kind::NotAComponent,
                            "cut_bounds: v1 is not a component of g - c");
  }
  CutBounds out;
  out.z1 = exact_z(induced_subgraph(g, set_union(v1, c)).graph, budget).z;
  out.z2 = exact_z(induced_subgraph(g, set_difference(VertexSet::range(g.vertex_count()), v1)).graph,
                   budget)
               .z;
  out.lower = out.z1 + out.z2 - c.size();
  out.upper = out.z1 + out.z2 + c.size();
  return out;
}

ProductBound strong_product_bound(const Graph& g, const Graph& h, const OracleBudget& budget) {
  require_component_budget("strong_product_bound", g.vertex_count(), budget.max_n_zexact);
  require_component_budget("strong_product_bound", h.vertex_count(), budget.max_n_zexact);
  const ExactZ zg = exact_z(g, budget);
  const ExactZ zh = exact_z(h, budget);
  ProductBound out;
  out.product = strong_product(g, h);
  const std::int64_t ng = g.vertex_count(), nh = h.vertex_count();
  out.bound = ng * zh.z + nh * zg.z - std::int64_t{zg.z} * zh.z;

  // One product arc per pair of factor arcs; sources are exactly the pairs
  // with a source coordinate, so their count equals the bound.
  const ArcSet ag = canonical_fas(g, zg.witness);
  const ArcSet ah = canonical_fas(h, zh.witness);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(ag.size()) * static_cast<std::size_t>(ah.size()));
  for (const Arc& a : ag.arcs()) {
    for (const Arc& b : ah.arcs()) {
      arcs.push_back({out.product.index(a.tail, b.tail), out.product.index(a.head, b.head)});
    }
  }
  out.fas = ArcSet::build(out.product.graph, std::move(arcs));
  if (out.fas.size() != ag.size() * ah.size()) {
    throw std::logic_error("strong_product_bound: product arc count mismatch");
  }
  if (!is_forcing_arc_set(out.product.graph, out.fas)) {
    throw std::logic_error("strong_product_bound: product arc set failed to certify");
  }
  if (sources(out.fas).size() != out.bound) {
    throw std::logic_error("strong_product_bound: source count disagrees with the bound");
  }
  return out;
}

}  // namespace zf
