#include "zf/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

namespace zf {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(Vertex n) {
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) ids[static_cast<std::size_t>(v)] = v;
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto i = ids_.begin();
  auto j = other.ids_.begin();
  while (i != ids_.end() && j != other.ids_.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(a.size() + b.size()));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(Vertex n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.u > e.v) throw std::invalid_argument("edge endpoints not ordered");
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  m_ = static_cast<std::int64_t>(edges.size());
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("duplicate edge");
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.push_back({u, v});
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;

  bool next(std::string_view& out) {
    if (pos >= text.size()) return false;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      out = text.substr(pos);
      pos = text.size();
    } else {
      out = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line;
    return true;
  }
};

// Exactly two decimals separated by one space, nothing else.
bool parse_pair(std::string_view s, long& a, long& b) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto r1 = std::from_chars(begin, end, a);
  if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != ' ') return false;
  auto r2 = std::from_chars(r1.ptr + 1, end, b);
  return r2.ec == std::errc() && r2.ptr == end;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  LineReader r{text};
  std::string_view line;
  if (!r.next(line)) throw ParseError(ParseError::Kind::Header, 1, "missing header line");
  long n = 0, m = 0;
  if (!parse_pair(line, n, m) || n < 0 || m < 0)
    throw ParseError(ParseError::Kind::Header, 1, "header must be \"n m\"");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::int64_t> seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);
  for (long i = 0; i < m; ++i) {
    if (!r.next(line))
      throw ParseError(ParseError::Kind::LineCount, r.line + 1,
                       "expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    long u = 0, v = 0;
    if (!parse_pair(line, u, v))
      throw ParseError(ParseError::Kind::EdgeSyntax, r.line, "edge line must be \"u v\"");
    if (u == v) throw ParseError(ParseError::Kind::SelfLoop, r.line, "self-loop");
    if (u > v)
      throw ParseError(ParseError::Kind::EndpointOrder, r.line, "edge endpoints must satisfy u < v");
    if (u < 0 || v >= n)
      throw ParseError(ParseError::Kind::VertexRange, r.line, "vertex id outside [0, n)");
    if (!seen.insert(u * n + v).second)
      throw ParseError(ParseError::Kind::DuplicateEdge, r.line, "duplicate edge");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (r.next(line))
    throw ParseError(ParseError::Kind::LineCount, r.line, "trailing content after last edge");
  return Graph(static_cast<Vertex>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  out.reserve(static_cast<std::size_t>(16 + 14 * g.edge_count()));
  char buf[32];
  auto append_num = [&](std::int64_t x) {
    auto r = std::to_chars(buf, buf + sizeof(buf), x);
    out.append(buf, r.ptr);
  };
  append_num(g.vertex_count());
  out.push_back(' ');
  append_num(g.edge_count());
  out.push_back('\n');
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      append_num(u);
      out.push_back(' ');
      append_num(v);
      out.push_back('\n');
    }
  }
  return out;
}

Vertex InducedSubgraph::to_local(Vertex global) const {
  auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
  if (it == to_global.end() || *it != global) return -1;
  return static_cast<Vertex>(it - to_global.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_global = s.ids();
  std::vector<Edge> edges;
  for (Vertex lu = 0; lu < s.size(); ++lu) {
    Vertex gu = out.to_global[static_cast<std::size_t>(lu)];
    if (gu < 0 || gu >= g.vertex_count()) throw std::invalid_argument("vertex outside host graph");
    for (Vertex gv : g.neighbors(gu)) {
      if (gv <= gu) continue;
      Vertex lv = out.to_local(gv);
      if (lv >= 0) edges.push_back({lu, lv});
    }
  }
  std::sort(edges.begin(), edges.end());
  out.graph = Graph(s.size(), edges);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack, comp;
  for (Vertex v0 = 0; v0 < g.vertex_count(); ++v0) {
    if (seen[static_cast<std::size_t>(v0)]) continue;
    comp.clear();
    stack.push_back(v0);
    seen[static_cast<std::size_t>(v0)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    comps.emplace_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

bool is_vertex_cut(const Graph& g, const VertexSet& c) {
  if (c.size() >= g.vertex_count())
    throw PreconditionError(PreconditionError::Kind::CutIsWholeGraph,
                            "cut candidate must be a proper subset of the vertices");
  std::size_t base = connected_components(g).size();
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : c) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex outside host graph");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::size_t comps = 0;
  std::vector<Vertex> stack;
  for (Vertex v0 = 0; v0 < g.vertex_count(); ++v0) {
    if (seen[static_cast<std::size_t>(v0)]) continue;
    ++comps;
    stack.push_back(v0);
    seen[static_cast<std::size_t>(v0)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return comps > base;
}

StrongProduct strong_product(const Graph& g, const Graph& h) {
  StrongProduct out;
  out.factor_h = std::max<Vertex>(h.vertex_count(), 1);
  Vertex n = g.vertex_count() * h.vertex_count();
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
  };
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (const Edge& eh : h.edges()) add(out.index(u, eh.u), out.index(u, eh.v));
  for (const Edge& eg : g.edges())
    for (Vertex up = 0; up < h.vertex_count(); ++up) add(out.index(eg.u, up), out.index(eg.v, up));
  for (const Edge& eg : g.edges())
    for (const Edge& eh : h.edges()) {
      add(out.index(eg.u, eh.u), out.index(eg.v, eh.v));
      add(out.index(eg.u, eh.v), out.index(eg.v, eh.u));
    }
  std::sort(edges.begin(), edges.end());
  out.graph = Graph(n, edges);
  return out;
}

namespace {

// Lexicographic BFS via partition refinement; ties resolved by the highest
// value of prio. O(n + m) moves, selection scans the front class.
std::vector<Vertex> lex_bfs(const Graph& g, const std::vector<int>& prio) {
  Vertex n = g.vertex_count();
  // Classes as a doubly linked list of vectors.
  struct Cls {
    std::vector<Vertex> members;
    int prev = -1, next = -1;
  };
  std::vector<Cls> cls;
  cls.reserve(static_cast<std::size_t>(n) + 1);
  cls.push_back({});
  int head = 0;
  cls[0].members.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) cls[0].members[static_cast<std::size_t>(v)] = v;
  std::vector<int> cls_of(static_cast<std::size_t>(n), 0);
  std::vector<int> idx_in_cls(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) idx_in_cls[static_cast<std::size_t>(v)] = v;
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  // Split bookkeeping: per refinement round, the class created for each class.
  std::vector<int> split_of(cls.capacity(), -1);

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (Vertex step = 0; step < n; ++step) {
    // Drop exhausted classes at the front.
    while (head != -1 && cls[static_cast<std::size_t>(head)].members.empty())
      head = cls[static_cast<std::size_t>(head)].next;
    assert(head != -1);
    auto& front = cls[static_cast<std::size_t>(head)].members;
    std::size_t best = 0;
    for (std::size_t i = 1; i < front.size(); ++i)
      if (prio[static_cast<std::size_t>(front[i])] > prio[static_cast<std::size_t>(front[best])])
        best = i;
    Vertex v = front[best];
    front[best] = front.back();
    idx_in_cls[static_cast<std::size_t>(front[best])] = static_cast<int>(best);
    front.pop_back();
    done[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);

    std::vector<int> touched;
    for (Vertex w : g.neighbors(v)) {
      if (done[static_cast<std::size_t>(w)]) continue;
      int c = cls_of[static_cast<std::size_t>(w)];
      if (split_of[static_cast<std::size_t>(c)] == -1) {
        // New class positioned just before c.
        cls.push_back({});
        if (split_of.size() < cls.size()) split_of.resize(cls.size(), -1);
        int nc = static_cast<int>(cls.size()) - 1;
        split_of[static_cast<std::size_t>(c)] = nc;
        touched.push_back(c);
        // c may still carry a stale prev into classes already drained and
        // skipped; only c == head decides whether the new class leads.
        int p = cls[static_cast<std::size_t>(c)].prev;
        cls[static_cast<std::size_t>(nc)].prev = p;
        cls[static_cast<std::size_t>(nc)].next = c;
        cls[static_cast<std::size_t>(c)].prev = nc;
        if (p != -1) cls[static_cast<std::size_t>(p)].next = nc;
        if (c == head) head = nc;
      }
      int nc = split_of[static_cast<std::size_t>(c)];
      auto& from = cls[static_cast<std::size_t>(c)].members;
      std::size_t at = static_cast<std::size_t>(idx_in_cls[static_cast<std::size_t>(w)]);
      from[at] = from.back();
      idx_in_cls[static_cast<std::size_t>(from[at])] = static_cast<int>(at);
      from.pop_back();
      auto& to = cls[static_cast<std::size_t>(nc)].members;
      idx_in_cls[static_cast<std::size_t>(w)] = static_cast<int>(to.size());
      to.push_back(w);
      cls_of[static_cast<std::size_t>(w)] = nc;
    }
    for (int c : touched) split_of[static_cast<std::size_t>(c)] = -1;
  }
  return order;
}

}  // namespace

bool is_umbrella_order(const Graph& g, const std::vector<Vertex>& order) {
  Vertex n = g.vertex_count();
  if (static_cast<Vertex>(order.size()) != n) return false;
  std::vector<Vertex> pos(static_cast<std::size_t>(n), -1);
  for (Vertex i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) return false;
    pos[static_cast<std::size_t>(v)] = i;
  }
  // Umbrella iff every vertex's earlier and later neighbours each form a
  // contiguous run of positions touching it.
  for (Vertex i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    Vertex before = 0, after = 0, minp = i, maxp = i;
    for (Vertex w : g.neighbors(v)) {
      Vertex p = pos[static_cast<std::size_t>(w)];
      if (p < i) {
        ++before;
        minp = std::min(minp, p);
      } else {
        ++after;
        maxp = std::max(maxp, p);
      }
    }
    if (maxp != i + after || minp != i - before) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> proper_interval_order(const Graph& g) {
  Vertex n = g.vertex_count();
  if (n == 0) return std::vector<Vertex>{};
  // Three lexicographic BFS sweeps; the final order is umbrella exactly for
  // proper interval graphs, and the check keeps the routine self-certifying.
  std::vector<int> prio(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) prio[static_cast<std::size_t>(v)] = -v;
  std::vector<Vertex> order = lex_bfs(g, prio);
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (Vertex i = 0; i < n; ++i) prio[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    order = lex_bfs(g, prio);
  }
  if (!is_umbrella_order(g, order)) return std::nullopt;
  return order;
}

std::vector<VertexSet> minimum_clique_cover_interval(const Graph& g,
                                                     const std::vector<Vertex>& order) {
  if (!is_umbrella_order(g, order))
    throw PreconditionError(PreconditionError::Kind::NotProperInterval,
                            "ordering is not an umbrella ordering");
  Vertex n = g.vertex_count();
  std::vector<Vertex> pos(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  // reach[i]: furthest position adjacent to position i (nondecreasing).
  std::vector<Vertex> reach(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) {
    Vertex r = i;
    for (Vertex w : g.neighbors(order[static_cast<std::size_t>(i)]))
      r = std::max(r, pos[static_cast<std::size_t>(w)]);
    reach[static_cast<std::size_t>(i)] = r;
  }
  // Greedy: start a clique at i whenever the edge (i, reach[i]) is uncovered.
  std::vector<VertexSet> cover;
  Vertex covered_to = -1;
  for (Vertex i = 0; i < n; ++i) {
    Vertex r = reach[static_cast<std::size_t>(i)];
    if (r == i || r <= covered_to) continue;
    std::vector<Vertex> clique;
    clique.reserve(static_cast<std::size_t>(r - i + 1));
    for (Vertex j = i; j <= r; ++j) clique.push_back(order[static_cast<std::size_t>(j)]);
    cover.emplace_back(std::move(clique));
    covered_to = r;
  }
  return cover;
}

}  // namespace zf
