#include "zf/path_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <charconv>
#include <stdexcept>

#include "zf/errors.hpp"

namespace zf {

namespace {

const VertexSet kEmptySet{};

std::string vertex_list(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

PathDecomposition PathDecomposition::build(const Graph& g, std::vector<VertexSet> bags) {
  PathDecomposition out;
  out.n_ = g.vertex_count();
  out.bags_ = std::move(bags);
  int k = static_cast<int>(out.bags_.size());
  out.first_.assign(static_cast<std::size_t>(out.n_), 0);
  out.last_.assign(static_cast<std::size_t>(out.n_), 0);
  out.introduced_.assign(static_cast<std::size_t>(k) + 2, {});
  for (int i = 1; i <= k; ++i) {
    for (Vertex v : out.bags_[static_cast<std::size_t>(i - 1)]) {
      if (v < 0 || v >= out.n_)
        throw DecompositionError(DecompositionError::Axiom::VertexCoverage,
                                 "bag " + std::to_string(i) + " mentions vertex " +
                                     std::to_string(v) + " outside the graph");
      auto& first = out.first_[static_cast<std::size_t>(v)];
      auto& last = out.last_[static_cast<std::size_t>(v)];
      if (first == 0) {
        first = last = i;
        out.introduced_[static_cast<std::size_t>(i)].push_back(v);
      } else {
        if (last != i - 1 && last != i)
          throw DecompositionError(DecompositionError::Axiom::Contiguity,
                                   "vertex " + std::to_string(v) + " absent at bag " +
                                       std::to_string(last + 1) + " but present again at bag " +
                                       std::to_string(i));
        last = i;
      }
    }
  }
  for (Vertex v = 0; v < out.n_; ++v)
    if (out.first_[static_cast<std::size_t>(v)] == 0)
      throw DecompositionError(DecompositionError::Axiom::VertexCoverage,
                               "vertex " + std::to_string(v) + " appears in no bag");
  for (const Edge& e : g.edges()) {
    // Contiguity holds for every vertex by now, so each vertex fills the
    // whole index interval [first, last]; the edge is covered iff the two
    // intervals intersect.
    int lo = std::max(out.first_[static_cast<std::size_t>(e.u)],
                      out.first_[static_cast<std::size_t>(e.v)]);
    int hi = std::min(out.last_[static_cast<std::size_t>(e.u)],
                      out.last_[static_cast<std::size_t>(e.v)]);
    if (lo > hi)
      throw DecompositionError(DecompositionError::Axiom::EdgeCoverage,
                               "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                   " is contained in no bag");
  }
  return out;
}

const VertexSet& PathDecomposition::bag(int i) const {
  if (i < 0 || i > bag_count() + 1) throw std::out_of_range("bag index");
  if (i == 0 || i == bag_count() + 1) return kEmptySet;
  return bags_[static_cast<std::size_t>(i - 1)];
}

int PathDecomposition::width() const {
  int w = -1;
  for (const VertexSet& b : bags_) w = std::max(w, b.size() - 1);
  return w;
}

VertexSet PathDecomposition::prefix_union(int i, int j) const {
  if (i < 0 || j > bag_count() + 1 || i > j) throw std::out_of_range("bag range");
  // bag(i) plus everything first introduced in (i, j]; later bags add no
  // other vertices by contiguity.
  std::vector<Vertex> out = bag(i).ids();
  for (int s = i + 1; s <= j && s <= bag_count(); ++s)
    for (Vertex v : introduced_[static_cast<std::size_t>(s)]) out.push_back(v);
  return VertexSet(std::move(out));
}

NicePathDecomposition NicePathDecomposition::build(const Graph& g, PathDecomposition pd) {
  (void)g;
  NicePathDecomposition out;
  int k = pd.bag_count();
  for (int i = 1; i <= k; ++i)
    if (pd.bag(i).empty())
      throw DecompositionError(DecompositionError::Axiom::EmptyInteriorBag,
                               "bag " + std::to_string(i) + " is empty");
  for (int i = 1; k > 0 && i <= k + 1; ++i) {
    VertexSet added = set_difference(pd.bag(i), pd.bag(i - 1));
    VertexSet removed = set_difference(pd.bag(i - 1), pd.bag(i));
    if (added.size() + removed.size() != 1)
      throw DecompositionError(DecompositionError::Axiom::StepSize,
                               "bags " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                   " differ by " + std::to_string(added.size() + removed.size()) +
                                   " vertices");
    if (added.size() == 1)
      out.steps_.push_back({true, added[0]});
    else
      out.steps_.push_back({false, removed[0]});
  }
  out.pd_ = std::move(pd);
  return out;
}

NicePathDecomposition make_nice(const Graph& g, const PathDecomposition& pd) {
  std::vector<VertexSet> bags;
  VertexSet cur;
  auto emit = [&]() {
    if (cur.empty()) return;
    if (!bags.empty() && bags.back() == cur) return;
    bags.push_back(cur);
  };
  int k = pd.bag_count();
  int first_filled = k + 1, last_filled = 0;
  for (int i = 1; i <= k; ++i)
    if (!pd.bag(i).empty()) {
      first_filled = std::min(first_filled, i);
      last_filled = std::max(last_filled, i);
    }
  for (int i = first_filled; i < last_filled; ++i)
    if (pd.bag(i).empty())
      throw DecompositionError(DecompositionError::Axiom::EmptyInteriorBag,
                               "no nice form: bag " + std::to_string(i) +
                                   " is empty between covered regions");
  for (int i = 1; i <= k + 1; ++i) {
    const VertexSet& target = pd.bag(i);
    for (Vertex v : set_difference(cur, target)) {
      cur = set_difference(cur, VertexSet({v}));
      // An empty bag strictly between covered regions means the regions
      // share no vertex and a nice form does not exist.
      if (cur.empty() && i <= k && !target.empty())
        throw DecompositionError(DecompositionError::Axiom::EmptyInteriorBag,
                                 "no nice form: coverage is disconnected at bag " +
                                     std::to_string(i));
      emit();
    }
    for (Vertex v : set_difference(target, cur)) {
      cur = set_union(cur, VertexSet({v}));
      emit();
    }
  }
  return NicePathDecomposition::build(g, PathDecomposition::build(g, std::move(bags)));
}

BagClass classify_bag(const Graph& g, const NicePathDecomposition& npd, int t) {
  if (t < 1 || t > npd.bag_count())
    throw PreconditionError(PreconditionError::Kind::BadIndex, "bag index outside 1..k");
  if (!is_connected(g))
    throw PreconditionError(PreconditionError::Kind::Disconnected, "graph must be connected");
  const VertexSet& xt = npd.bag(t);
  VertexSet before = npd.pd().prefix_union(0, t - 1);
  VertexSet after = npd.pd().prefix_union(t + 1, npd.bag_count() + 1);
  if (before.is_subset_of(xt) || after.is_subset_of(xt)) return BagClass::EndSet;
  if (!is_vertex_cut(g, xt))
    throw DecompositionError(DecompositionError::Axiom::BagClassification,
                             "bag " + std::to_string(t) + " ({" + vertex_list(xt) +
                                 "}) is neither an end set nor a vertex cut");
  return BagClass::Cut;
}

PathDecomposition parse_decomposition(std::string_view text, const Graph& g) {
  std::vector<VertexSet> bags;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.empty()) throw ParseError(ParseError::Kind::BagSyntax, line_no, "empty bag line");
    std::vector<Vertex> ids;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (;;) {
      long v = 0;
      auto r = std::from_chars(p, end, v);
      if (r.ec != std::errc())
        throw ParseError(ParseError::Kind::BagSyntax, line_no,
                         "bag line must be space-separated vertex ids");
      if (v < 0 || v >= g.vertex_count())
        throw ParseError(ParseError::Kind::VertexRange, line_no, "vertex id outside [0, n)");
      if (!ids.empty() && ids.back() >= v)
        throw ParseError(ParseError::Kind::BagSyntax, line_no,
                         "bag ids must be strictly ascending");
      ids.push_back(static_cast<Vertex>(v));
      if (r.ptr == end) break;
      if (*r.ptr != ' ' || r.ptr + 1 == end)
        throw ParseError(ParseError::Kind::BagSyntax, line_no,
                         "bag line must be space-separated vertex ids");
      p = r.ptr + 1;
    }
    bags.emplace_back(std::move(ids));
  }
  return PathDecomposition::build(g, std::move(bags));
}

std::string serialize_decomposition(const PathDecomposition& pd) {
  std::string out;
  for (int i = 1; i <= pd.bag_count(); ++i) {
    out += vertex_list(pd.bag(i));
    out.push_back('\n');
  }
  return out;
}

ExactPathwidth exact_pathwidth(const Graph& g, int max_n) {
  Vertex n = g.vertex_count();
  if (n > max_n || n > 26)
    throw PreconditionError(PreconditionError::Kind::BudgetExceeded,
                            "graph too large for the exact pathwidth search");
  ExactPathwidth out;
  if (n == 0) {
    out.decomposition = PathDecomposition::build(g, {});
    return out;
  }
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nb[static_cast<std::size_t>(v)] |= 1u << w;
  std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // dp[S]: the best achievable maximum boundary over all layouts placing S
  // first, where the boundary of a prefix counts its vertices that still
  // have a neighbour outside it.
  std::vector<std::int8_t> dp(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::int8_t> choice(static_cast<std::size_t>(full) + 1, -1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int boundary = 0;
    for (std::uint32_t rest = s; rest;) {
      Vertex v = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      if (nb[static_cast<std::size_t>(v)] & ~s) ++boundary;
    }
    int best = n + 1;
    Vertex best_v = -1;
    for (std::uint32_t rest = s; rest;) {
      Vertex v = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      int cand = std::max<int>(dp[s ^ (1u << v)], boundary);
      if (cand < best) {
        best = cand;
        best_v = v;
      }
    }
    dp[s] = static_cast<std::int8_t>(best);
    choice[s] = static_cast<std::int8_t>(best_v);
  }
  std::vector<Vertex> layout(static_cast<std::size_t>(n));
  for (std::uint32_t s = full; s;) {
    Vertex v = choice[s];
    layout[static_cast<std::size_t>(std::popcount(s)) - 1] = v;
    s ^= 1u << v;
  }
  // Bag i holds the i-th vertex plus every earlier vertex that still has a
  // neighbour placed at or after position i.
  std::vector<int> pos(static_cast<std::size_t>(n)), maxnb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(layout[static_cast<std::size_t>(i)])] = i;
  for (Vertex v = 0; v < n; ++v) {
    maxnb[static_cast<std::size_t>(v)] = pos[static_cast<std::size_t>(v)];
    for (Vertex w : g.neighbors(v))
      maxnb[static_cast<std::size_t>(v)] =
          std::max(maxnb[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(w)]);
  }
  std::vector<VertexSet> bags;
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> bag{layout[static_cast<std::size_t>(i)]};
    for (int j = 0; j < i; ++j) {
      Vertex u = layout[static_cast<std::size_t>(j)];
      if (maxnb[static_cast<std::size_t>(u)] >= i) bag.push_back(u);
    }
    bags.emplace_back(std::move(bag));
  }
  out.decomposition = PathDecomposition::build(g, std::move(bags));
  out.width = dp[full];
  assert(out.decomposition.width() == out.width);
  return out;
}

}  // namespace zf
