#include "zf/arc_set.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "zf/errors.hpp"

namespace zf {

ArcSet ArcSet::build(const Graph& g, std::vector<Arc> arcs) {
  ArcSet out;
  out.n_ = g.vertex_count();
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw std::invalid_argument("duplicate arc");
  out.in_deg_.assign(static_cast<std::size_t>(out.n_), 0);
  out.out_deg_.assign(static_cast<std::size_t>(out.n_), 0);
  for (const Arc& a : arcs) {
    if (!g.has_edge(a.tail, a.head)) throw std::invalid_argument("arc is not an edge");
    ++out.out_deg_[static_cast<std::size_t>(a.tail)];
    ++out.in_deg_[static_cast<std::size_t>(a.head)];
  }
  for (const Arc& a : arcs)
    if (std::binary_search(arcs.begin(), arcs.end(), Arc{a.head, a.tail}))
      throw std::invalid_argument("edge selected in both directions");
  out.arcs_ = std::move(arcs);
  return out;
}

bool ArcSet::contains(Vertex tail, Vertex head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

ArcSet ArcSet::reversed() const {
  ArcSet out;
  out.n_ = n_;
  out.arcs_.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.arcs_.push_back({a.head, a.tail});
  std::sort(out.arcs_.begin(), out.arcs_.end());
  out.in_deg_ = out_deg_;
  out.out_deg_ = in_deg_;
  return out;
}

ArcSet ArcSet::restricted(const std::function<bool(const Arc&)>& keep) const {
  ArcSet out;
  out.n_ = n_;
  out.in_deg_.assign(static_cast<std::size_t>(n_), 0);
  out.out_deg_.assign(static_cast<std::size_t>(n_), 0);
  for (const Arc& a : arcs_) {
    if (!keep(a)) continue;
    out.arcs_.push_back(a);
    ++out.out_deg_[static_cast<std::size_t>(a.tail)];
    ++out.in_deg_[static_cast<std::size_t>(a.head)];
  }
  return out;
}

bool satisfies_p1(const ArcSet& a) {
  Vertex n = a.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    if (a.in_degree(v) > 1 || a.out_degree(v) > 1) return false;
  // With all degrees <= 1 the arc components are dipaths and dicycles;
  // walking from every source visits exactly the dipath arcs.
  std::vector<Vertex> next(static_cast<std::size_t>(n), -1);
  for (const Arc& arc : a.arcs()) next[static_cast<std::size_t>(arc.tail)] = arc.head;
  std::int64_t walked = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (a.in_degree(v) != 0) continue;
    for (Vertex u = v; next[static_cast<std::size_t>(u)] != -1; u = next[static_cast<std::size_t>(u)])
      ++walked;
  }
  return walked == a.size();
}

namespace {

void require_p1(const ArcSet& a) {
  if (!satisfies_p1(a))
    throw PreconditionError(PreconditionError::Kind::NotP1,
                            "arc set is not a disjoint union of dipaths");
}

}  // namespace

VertexSet sources(const ArcSet& a) {
  require_p1(a);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    if (a.in_degree(v) == 0) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet sinks(const ArcSet& a) {
  require_p1(a);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    if (a.out_degree(v) == 0) out.push_back(v);
  return VertexSet(std::move(out));
}

bool is_chain_twist(const Graph& g, const ArcSet& a, const ChainTwist& t) {
  std::size_t k = t.cycle.size();
  if (k < 3 || t.arc_flags.size() != k) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : t.cycle) {
    if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vertex u = t.cycle[i];
    Vertex v = t.cycle[(i + 1) % k];
    if (!g.has_edge(u, v)) return false;
    if (t.arc_flags[i] != a.contains(u, v)) return false;
    if (!t.arc_flags[i] && (!t.arc_flags[(i + k - 1) % k] || !t.arc_flags[(i + 1) % k]))
      return false;
  }
  return true;
}

namespace {

struct WalkStep {
  Vertex v;
  bool arc;  // step leaving v is an arc
};

bool walk_satisfies_ct(const std::vector<WalkStep>& w) {
  std::size_t k = w.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!w[i].arc && (!w[(i + k - 1) % k].arc || !w[(i + 1) % k].arc)) return false;
  return true;
}

// Splits a closed walk at repeated vertices until it is a cycle, keeping a
// sub-walk that satisfies the twist condition at every step.
std::vector<WalkStep> reduce_walk(std::vector<WalkStep> w, Vertex n) {
  std::vector<std::size_t> first_at(static_cast<std::size_t>(n));
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::size_t p = 0, q = 0;
    bool found = false;
    for (std::size_t i = 0; i < w.size() && !found; ++i) {
      Vertex v = w[i].v;
      if (mark[static_cast<std::size_t>(v)]) {
        p = first_at[static_cast<std::size_t>(v)];
        q = i;
        found = true;
      } else {
        mark[static_cast<std::size_t>(v)] = 1;
        first_at[static_cast<std::size_t>(v)] = i;
      }
    }
    for (const WalkStep& s : w) mark[static_cast<std::size_t>(s.v)] = 0;
    if (!found) return w;
    std::vector<WalkStep> inner(w.begin() + static_cast<std::ptrdiff_t>(p),
                                w.begin() + static_cast<std::ptrdiff_t>(q));
    std::vector<WalkStep> outer;
    outer.insert(outer.end(), w.begin() + static_cast<std::ptrdiff_t>(q), w.end());
    outer.insert(outer.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    if (walk_satisfies_ct(inner))
      w = std::move(inner);
    else if (walk_satisfies_ct(outer))
      w = std::move(outer);
    else
      throw std::logic_error("walk reduction lost the twist condition");
  }
}

}  // namespace

std::optional<ChainTwist> find_chain_twist(const Graph& g, const ArcSet& a) {
  require_p1(a);
  Vertex n = g.vertex_count();
  std::vector<Vertex> next(static_cast<std::size_t>(n), -1);
  for (const Arc& arc : a.arcs()) next[static_cast<std::size_t>(arc.tail)] = arc.head;

  // Forcing restricted to the arcs: a blue tail whose only white neighbour
  // is its arc head colours that head. Heads turn blue only via their unique
  // in-arc, so completion means every arc fired.
  std::vector<char> blue(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> white_cnt(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) white_cnt[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<Vertex> queue;
  Vertex blue_total = 0;
  auto make_blue = [&](Vertex v) {
    blue[static_cast<std::size_t>(v)] = 1;
    ++blue_total;
    for (Vertex w : g.neighbors(v)) {
      --white_cnt[static_cast<std::size_t>(w)];
      if (blue[static_cast<std::size_t>(w)] && white_cnt[static_cast<std::size_t>(w)] == 1)
        queue.push_back(w);
    }
    if (white_cnt[static_cast<std::size_t>(v)] == 1) queue.push_back(v);
  };
  for (Vertex v = 0; v < n; ++v)
    if (a.in_degree(v) == 0) make_blue(v);
  std::size_t qi = 0;
  while (qi < queue.size()) {
    Vertex u = queue[qi++];
    if (white_cnt[static_cast<std::size_t>(u)] != 1) continue;
    Vertex h = next[static_cast<std::size_t>(u)];
    if (h == -1 || blue[static_cast<std::size_t>(h)]) continue;
    make_blue(h);
  }
  if (blue_total == n) return std::nullopt;

  // Stalled. Each stuck dipath has a unique frontier: a blue tail whose arc
  // head is still white. Collect frontiers in ascending vertex order.
  std::vector<Vertex> frontier;
  for (Vertex v = 0; v < n; ++v)
    if (blue[static_cast<std::size_t>(v)] && next[static_cast<std::size_t>(v)] != -1 &&
        !blue[static_cast<std::size_t>(next[static_cast<std::size_t>(v)])])
      frontier.push_back(v);
  assert(!frontier.empty());
  std::size_t k = frontier.size();

  // Label every white vertex with the stuck path it lies on.
  std::vector<int> path_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex u = next[static_cast<std::size_t>(frontier[i])]; u != -1;
         u = next[static_cast<std::size_t>(u)])
      path_of[static_cast<std::size_t>(u)] = static_cast<int>(i);

  // The frontier is blocked by a second white neighbour; take the lowest.
  std::vector<Vertex> blocker(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    Vertex b = frontier[i];
    Vertex head = next[static_cast<std::size_t>(b)];
    for (Vertex w : g.neighbors(b))
      if (!blue[static_cast<std::size_t>(w)] && w != head) {
        blocker[i] = w;
        break;
      }
    assert(blocker[i] != -1);
  }

  std::vector<WalkStep> walk;
  auto append_segment = [&](std::size_t path, Vertex upto) {
    // Frontier, then arc steps along the path through upto; the step leaving
    // upto is the non-arc edge back to the blocked frontier.
    walk.push_back({frontier[path], true});
    for (Vertex u = next[static_cast<std::size_t>(frontier[path])];; u = next[static_cast<std::size_t>(u)]) {
      assert(u != -1);
      walk.push_back({u, u != upto});
      if (u == upto) break;
    }
  };

  // A blocker on its own path closes a twist immediately.
  for (std::size_t i = 0; i < k; ++i) {
    if (path_of[static_cast<std::size_t>(blocker[i])] != static_cast<int>(i)) continue;
    append_segment(i, blocker[i]);
    ChainTwist t;
    for (const WalkStep& s : walk) {
      t.cycle.push_back(s.v);
      t.arc_flags.push_back(s.arc);
    }
    if (!is_chain_twist(g, a, t)) throw std::logic_error("invalid same-path twist witness");
    return t;
  }

  // Otherwise each blocker lands on another stuck path: the map i -> path of
  // blocker[i] has out-degree one, so following it from the first frontier
  // reaches a cycle of paths. The twist walks each cycle path from its
  // frontier to the blocker that landed on it, then jumps to the blocked
  // frontier, visiting the cycle against the direction of the map.
  std::vector<int> order_seen(k, -1);
  std::vector<std::size_t> chain;
  std::size_t cur = 0;
  while (order_seen[cur] == -1) {
    order_seen[cur] = static_cast<int>(chain.size());
    chain.push_back(cur);
    cur = static_cast<std::size_t>(path_of[static_cast<std::size_t>(blocker[cur])]);
  }
  std::vector<std::size_t> cyc(chain.begin() + order_seen[cur], chain.end());
  std::size_t c = cyc.size();
  assert(c >= 2);
  for (std::size_t t = 0; t < c; ++t) {
    std::size_t at = cyc[t == 0 ? 0 : c - t];        // i_0, i_{c-1}, ..., i_1
    std::size_t from = cyc[t == c - 1 ? 0 : c - t - 1];  // D-predecessor of at
    append_segment(at, blocker[from]);
  }

  std::vector<WalkStep> cycle_walk = reduce_walk(std::move(walk), n);
  ChainTwist t;
  for (const WalkStep& s : cycle_walk) {
    t.cycle.push_back(s.v);
    t.arc_flags.push_back(s.arc);
  }
  if (!is_chain_twist(g, a, t)) throw std::logic_error("invalid multi-path twist witness");
  return t;
}

bool is_forcing_arc_set(const Graph& g, const ArcSet& a) {
  return satisfies_p1(a) && !find_chain_twist(g, a).has_value();
}

ArcSet merge_via_cut(const Graph& g, const VertexSet& c, const VertexSet& v1,
                     const ArcSet& a1, const ArcSet& a2) {
  if (!is_vertex_cut(g, c))
    throw PreconditionError(PreconditionError::Kind::NotACut, "separator is not a vertex cut");
  VertexSet rest = set_difference(VertexSet::range(g.vertex_count()), c);
  bool component = false;
  for (const VertexSet& comp : connected_components(induced_subgraph(g, rest).graph)) {
    std::vector<Vertex> ids;
    const auto& sub = induced_subgraph(g, rest);
    for (Vertex lv : comp) ids.push_back(sub.to_global[static_cast<std::size_t>(lv)]);
    if (VertexSet(std::move(ids)) == v1) {
      component = true;
      break;
    }
  }
  if (!component)
    throw PreconditionError(PreconditionError::Kind::NotAComponent,
                            "side is not a component of the graph minus the cut");

  InducedSubgraph side1 = induced_subgraph(g, set_union(v1, c));
  InducedSubgraph side2 =
      induced_subgraph(g, set_difference(VertexSet::range(g.vertex_count()), v1));
  if (a1.vertex_count() != side1.graph.vertex_count() || !is_forcing_arc_set(side1.graph, a1))
    throw PreconditionError(PreconditionError::Kind::NotAForcingArcSet,
                            "first arc set is not a forcing arc set of its side");
  if (a2.vertex_count() != side2.graph.vertex_count() || !is_forcing_arc_set(side2.graph, a2))
    throw PreconditionError(PreconditionError::Kind::NotAForcingArcSet,
                            "second arc set is not a forcing arc set of its side");
  for (Vertex v : c) {
    Vertex l1 = side1.to_local(v);
    Vertex l2 = side2.to_local(v);
    if (a1.in_degree(l1) != 0 || a2.in_degree(l2) != 0)
      throw PreconditionError(PreconditionError::Kind::CutNotSources,
                              "every cut vertex must be a source on both sides");
  }

  std::vector<Arc> merged;
  merged.reserve(static_cast<std::size_t>(a1.size() + a2.size()));
  for (const Arc& a : a1.arcs())
    merged.push_back({side1.to_global[static_cast<std::size_t>(a.tail)],
                      side1.to_global[static_cast<std::size_t>(a.head)]});
  for (const Arc& a : a2.arcs())
    merged.push_back({side2.to_global[static_cast<std::size_t>(a.head)],
                      side2.to_global[static_cast<std::size_t>(a.tail)]});
  ArcSet out = ArcSet::build(g, std::move(merged));
  if (out.size() != a1.size() + a2.size() || !is_forcing_arc_set(g, out))
    throw std::logic_error("merged arc set failed verification");
  return out;
}

bool fas_size_bound_check(const Graph& g, const ArcSet& a, int z_exact) {
  if (!is_forcing_arc_set(g, a))
    throw PreconditionError(PreconditionError::Kind::NotAForcingArcSet,
                            "arc set is not a forcing arc set");
  return a.size() <= g.vertex_count() - z_exact;
}

}  // namespace zf
