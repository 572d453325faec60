#include "zf/forcing.hpp"

#include <algorithm>
#include <queue>

namespace zf {

namespace {

// Shared closure walk. emit(b, w) is called once per force, in order.
template <typename Emit>
void run_closure(const Graph& g, const VertexSet& seed, std::vector<char>& blue, Emit&& emit) {
  Vertex n = g.vertex_count();
  blue.assign(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> white_cnt(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) white_cnt[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<Vertex> queue;
  for (Vertex v : seed) {
    blue[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) --white_cnt[static_cast<std::size_t>(w)];
  }
  for (Vertex v : seed)
    if (white_cnt[static_cast<std::size_t>(v)] == 1) queue.push_back(v);
  std::size_t qi = 0;
  while (qi < queue.size()) {
    Vertex b = queue[qi++];
    if (white_cnt[static_cast<std::size_t>(b)] != 1) continue;
    Vertex forced = -1;
    for (Vertex w : g.neighbors(b))
      if (!blue[static_cast<std::size_t>(w)]) {
        forced = w;
        break;
      }
    blue[static_cast<std::size_t>(forced)] = 1;
    emit(b, forced);
    for (Vertex w : g.neighbors(forced)) {
      --white_cnt[static_cast<std::size_t>(w)];
      if (blue[static_cast<std::size_t>(w)] && white_cnt[static_cast<std::size_t>(w)] == 1)
        queue.push_back(w);
    }
    if (white_cnt[static_cast<std::size_t>(forced)] == 1) queue.push_back(forced);
  }
}

}  // namespace

Colouring closure(const Graph& g, const VertexSet& seed) {
  Colouring out;
  std::vector<char> blue;
  run_closure(g, seed, blue, [&](Vertex b, Vertex w) { out.history.push_back({b, w}); });
  std::vector<Vertex> bs, ws;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    (blue[static_cast<std::size_t>(v)] ? bs : ws).push_back(v);
  out.blue = VertexSet(std::move(bs));
  out.white = VertexSet(std::move(ws));
  return out;
}

VertexSet white_set(const Graph& g, const VertexSet& seed) {
  return closure(g, seed).white;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& seed) {
  return closure(g, seed).white.empty();
}

bool is_fort(const Graph& g, const VertexSet& f) {
  if (f.empty()) return false;
  for (Vertex v : f)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (Vertex v : f)
    for (Vertex w : g.neighbors(v)) {
      if (f.contains(w)) continue;
      Vertex inside = 0;
      for (Vertex x : g.neighbors(w))
        if (f.contains(x)) ++inside;
      if (inside == 1) return false;
    }
  return true;
}

ArcSet canonical_fas(const Graph& g, const VertexSet& seed) {
  Vertex n = g.vertex_count();
  std::vector<char> blue(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> white_cnt(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) white_cnt[static_cast<std::size_t>(v)] = g.degree(v);
  // Min-heap of candidate forcers; stale entries are skipped on pop, so the
  // force applied at each step is by the lowest-indexed eligible blue vertex.
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<Vertex>> heap;
  for (Vertex v : seed) {
    blue[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) --white_cnt[static_cast<std::size_t>(w)];
  }
  for (Vertex v : seed)
    if (white_cnt[static_cast<std::size_t>(v)] == 1) heap.push(v);
  std::vector<Arc> arcs;
  Vertex forced_total = seed.size();
  while (!heap.empty()) {
    Vertex b = heap.top();
    heap.pop();
    if (white_cnt[static_cast<std::size_t>(b)] != 1) continue;
    Vertex forced = -1;
    for (Vertex w : g.neighbors(b))
      if (!blue[static_cast<std::size_t>(w)]) {
        forced = w;
        break;
      }
    blue[static_cast<std::size_t>(forced)] = 1;
    ++forced_total;
    arcs.push_back({b, forced});
    for (Vertex w : g.neighbors(forced)) {
      --white_cnt[static_cast<std::size_t>(w)];
      if (blue[static_cast<std::size_t>(w)] && white_cnt[static_cast<std::size_t>(w)] == 1)
        heap.push(w);
    }
    if (white_cnt[static_cast<std::size_t>(forced)] == 1) heap.push(forced);
  }
  if (forced_total != n)
    throw PreconditionError(PreconditionError::Kind::NotAZeroForcingSet,
                            "seed does not force the whole graph");
  return ArcSet::build(g, arcs);
}

}  // namespace zf
