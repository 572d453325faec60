#include "zf/approx.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "zf/errors.hpp"

namespace zf {

namespace {

// Incremental sweep state. The window is the union of bags t..z of the
// current iteration; the seed is X_t union X_z. Insert steps cannot create
// white residue (the new vertex and all its window neighbours are seeded
// blue), so closures run only on delete steps, as probes that stop as soon
// as the deleted vertex is re-forced. Probe state is version-stamped so a
// probe costs only the work it actually touches.
struct Sweep {
  const Graph& g;
  const NicePathDecomposition& npd;
  Vertex n;

  // Accumulated arc set in its current orientation; reversal swaps the
  // arrays. Merges stay conflict-free because window arc heads are always
  // vertices never seen before and window tails inside the previous prefix
  // are sources of it.
  std::vector<Vertex> in_arc, out_arc;

  int gen = 0;  // iteration stamp
  std::vector<int> window_gen, xt_gen;
  std::vector<char> seed_flag;
  std::vector<Vertex> win_list;
  // Per window vertex: its white window neighbours with the seed blue.
  std::vector<int> base_cnt;

  int probe_id = 0;  // probe stamp
  std::vector<int> blue_gen, cnt_gen;
  std::vector<int> probe_cnt;
  std::vector<Vertex> queue;

  explicit Sweep(const Graph& graph, const NicePathDecomposition& decomp)
      : g(graph), npd(decomp), n(graph.vertex_count()) {
    in_arc.assign(static_cast<std::size_t>(n), -1);
    out_arc.assign(static_cast<std::size_t>(n), -1);
    window_gen.assign(static_cast<std::size_t>(n), 0);
    xt_gen.assign(static_cast<std::size_t>(n), 0);
    seed_flag.assign(static_cast<std::size_t>(n), 0);
    base_cnt.assign(static_cast<std::size_t>(n), 0);
    blue_gen.assign(static_cast<std::size_t>(n), 0);
    cnt_gen.assign(static_cast<std::size_t>(n), 0);
    probe_cnt.assign(static_cast<std::size_t>(n), 0);
  }

  bool in_window(Vertex v) const { return window_gen[static_cast<std::size_t>(v)] == gen; }
  bool in_seed(Vertex v) const {
    return in_window(v) && seed_flag[static_cast<std::size_t>(v)];
  }

  void begin_iteration(int t) {
    ++gen;
    win_list.clear();
    for (Vertex v : npd.bag(t)) {
      window_gen[static_cast<std::size_t>(v)] = gen;
      xt_gen[static_cast<std::size_t>(v)] = gen;
      seed_flag[static_cast<std::size_t>(v)] = 1;
      base_cnt[static_cast<std::size_t>(v)] = 0;
      win_list.push_back(v);
    }
  }

  void insert_step(Vertex v) {
    window_gen[static_cast<std::size_t>(v)] = gen;
    seed_flag[static_cast<std::size_t>(v)] = 1;
    int whites = 0;
    for (Vertex y : g.neighbors(v))
      if (in_window(y) && !in_seed(y)) ++whites;
    base_cnt[static_cast<std::size_t>(v)] = whites;
    win_list.push_back(v);
  }

  // The deleted vertex leaves the seed and turns white.
  void unseed(Vertex d) {
    seed_flag[static_cast<std::size_t>(d)] = 0;
    for (Vertex y : g.neighbors(d))
      if (in_window(y)) ++base_cnt[static_cast<std::size_t>(y)];
  }

  void reseed(Vertex d) {
    seed_flag[static_cast<std::size_t>(d)] = 1;
    for (Vertex y : g.neighbors(d))
      if (in_window(y)) --base_cnt[static_cast<std::size_t>(y)];
  }

  void touch_cnt(Vertex v) {
    if (cnt_gen[static_cast<std::size_t>(v)] != probe_id) {
      cnt_gen[static_cast<std::size_t>(v)] = probe_id;
      probe_cnt[static_cast<std::size_t>(v)] = base_cnt[static_cast<std::size_t>(v)];
    }
  }

  bool probe_blue(Vertex v) const { return blue_gen[static_cast<std::size_t>(v)] == probe_id; }

  void seed_probe(int t, const VertexSet& xz) {
    ++probe_id;
    queue.clear();
    for (Vertex s : npd.bag(t)) blue_gen[static_cast<std::size_t>(s)] = probe_id;
    for (Vertex s : xz) blue_gen[static_cast<std::size_t>(s)] = probe_id;
    auto arm = [&](Vertex s) {
      touch_cnt(s);
      if (probe_cnt[static_cast<std::size_t>(s)] == 1) queue.push_back(s);
    };
    for (Vertex s : npd.bag(t)) arm(s);
    for (Vertex s : xz) arm(s);
  }

  // One forcing move by u; returns the vertex it forced.
  Vertex fire(Vertex u) {
    Vertex x = -1;
    for (Vertex y : g.neighbors(u))
      if (in_window(y) && !probe_blue(y)) {
        x = y;
        break;
      }
    if (x == -1) throw std::logic_error("eligible forcer has no white neighbour");
    blue_gen[static_cast<std::size_t>(x)] = probe_id;
    touch_cnt(x);
    for (Vertex y : g.neighbors(x)) {
      if (!in_window(y)) continue;
      touch_cnt(y);
      --probe_cnt[static_cast<std::size_t>(y)];
      if (probe_blue(y) && probe_cnt[static_cast<std::size_t>(y)] == 1) queue.push_back(y);
    }
    if (probe_cnt[static_cast<std::size_t>(x)] == 1) queue.push_back(x);
    return x;
  }

  // Closure probe after deleting d. True means d was re-forced, so the seed
  // still forces the window; false leaves the white residue enumerable.
  bool probe(int t, const VertexSet& xz, Vertex d) {
    seed_probe(t, xz);
    std::size_t qi = 0;
    while (qi < queue.size()) {
      Vertex u = queue[qi++];
      if (probe_cnt[static_cast<std::size_t>(u)] != 1) continue;
      if (fire(u) == d) return true;
    }
    return false;
  }

  VertexSet residue() const {
    std::vector<Vertex> white;
    for (Vertex v : win_list)
      if (!probe_blue(v)) white.push_back(v);
    return VertexSet(std::move(white));
  }

  // Canonical forcing arc set of the window from the current seed, merged
  // into the accumulated arcs. Forces are taken lowest-eligible-tail first.
  void merge_window_fas(int t, const VertexSet& xz) {
    ++probe_id;
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<Vertex>> heap;
    std::size_t blue_total = 0;
    auto stamp = [&](Vertex s) {
      if (!probe_blue(s)) {
        blue_gen[static_cast<std::size_t>(s)] = probe_id;
        ++blue_total;
      }
    };
    for (Vertex s : npd.bag(t)) stamp(s);
    for (Vertex s : xz) stamp(s);
    auto arm = [&](Vertex s) {
      touch_cnt(s);
      if (probe_cnt[static_cast<std::size_t>(s)] == 1) heap.push(s);
    };
    for (Vertex s : npd.bag(t)) arm(s);
    for (Vertex s : xz) arm(s);
    while (!heap.empty()) {
      Vertex u = heap.top();
      heap.pop();
      if (probe_cnt[static_cast<std::size_t>(u)] != 1) continue;
      queue.clear();
      Vertex x = fire(u);
      ++blue_total;
      merge_arc(u, x);
      for (Vertex w : queue) heap.push(w);
    }
    if (blue_total != win_list.size())
      throw std::logic_error("window seed failed to force the window");
  }

  void merge_arc(Vertex u, Vertex v) {
    if (out_arc[static_cast<std::size_t>(u)] != -1 || in_arc[static_cast<std::size_t>(v)] != -1)
      throw std::logic_error("arc merge conflict");
    out_arc[static_cast<std::size_t>(u)] = v;
    in_arc[static_cast<std::size_t>(v)] = u;
  }

  void drop_in_arcs(const VertexSet& xz) {
    for (Vertex v : xz) {
      Vertex u = in_arc[static_cast<std::size_t>(v)];
      if (u == -1) continue;
      out_arc[static_cast<std::size_t>(u)] = -1;
      in_arc[static_cast<std::size_t>(v)] = -1;
    }
  }

  ArcSet current_arcs() const {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
      if (out_arc[static_cast<std::size_t>(u)] != -1)
        arcs.push_back({u, out_arc[static_cast<std::size_t>(u)]});
    return ArcSet::build(g, std::move(arcs));
  }
};

// Invariants re-derived after an iteration that packed a fort: the arcs lie
// inside the swept prefix and form a forcing arc set of it whose sources
// include the new boundary bag, and the fort avoids both boundary bags.
void assert_iteration_invariants(const Graph& g, const NicePathDecomposition& npd,
                                 const Sweep& sweep, int t_old, int z,
                                 const VertexSet& fort) {
  VertexSet prefix = npd.pd().prefix_union(0, z);
  InducedSubgraph sub = induced_subgraph(g, prefix);
  std::vector<Arc> local;
  for (Vertex u = 0; u < sweep.n; ++u) {
    Vertex v = sweep.out_arc[static_cast<std::size_t>(u)];
    if (v == -1) continue;
    Vertex lu = sub.to_local(u);
    Vertex lv = sub.to_local(v);
    if (lu == -1 || lv == -1) throw std::logic_error("arc escapes the swept prefix");
    local.push_back({lu, lv});
  }
  ArcSet a = ArcSet::build(sub.graph, std::move(local));
  if (!is_forcing_arc_set(sub.graph, a))
    throw std::logic_error("accumulated arcs are not a forcing arc set of the prefix");
  VertexSet src = sources(a);
  for (Vertex v : npd.bag(z))
    if (!src.contains(sub.to_local(v)))
      throw std::logic_error("boundary bag vertex is not a source");
  if (fort.intersects(set_union(npd.bag(t_old), npd.bag(z))))
    throw std::logic_error("fort touches a boundary bag");
  for (Vertex v : fort)
    if (!prefix.contains(v)) throw std::logic_error("fort escapes the window");
}

}  // namespace

ApproxResult approximate_zero_forcing(const Graph& g, const NicePathDecomposition& npd,
                                      const ApproxOptions& opts) {
  if (!is_connected(g))
    throw PreconditionError(PreconditionError::Kind::Disconnected,
                            "the sweep requires a connected graph");
  ApproxResult result;
  result.width_used = npd.width();
  if (g.vertex_count() == 0) {
    result.fas = ArcSet::build(g, {});
    return result;
  }
  int k = npd.bag_count();
  Sweep sweep(g, npd);
  int t = 0;
  for (;;) {
    sweep.begin_iteration(t);
    int z = t;
    bool stalled = false;
    while (z <= k) {
      ++z;
      const auto& step = npd.steps()[static_cast<std::size_t>(z - 1)];
      if (step.insert) {
        sweep.insert_step(step.v);
        continue;
      }
      if (sweep.xt_gen[static_cast<std::size_t>(step.v)] == sweep.gen)
        continue;  // still seeded through X_t; the white set stays empty
      sweep.unseed(step.v);
      if (!sweep.probe(t, npd.bag(z), step.v)) {
        stalled = true;
        break;
      }
    }
    std::swap(sweep.in_arc, sweep.out_arc);  // reverse the accumulated arcs
    result.iterations.push_back({t, z});
    if (stalled) {
      Vertex d = npd.steps()[static_cast<std::size_t>(z - 1)].v;
      result.packing.forts.push_back(sweep.residue());
      sweep.reseed(d);  // the forcing arcs come from the pre-delete seed
      sweep.merge_window_fas(t, npd.bag(z - 1));
      sweep.drop_in_arcs(npd.bag(z));
      if (opts.check_invariants)
        assert_iteration_invariants(g, npd, sweep, t, z, result.packing.forts.back());
      t = z;
      continue;
    }
    std::vector<Vertex> s;
    for (Vertex v : npd.pd().prefix_union(0, t))
      if (sweep.in_arc[static_cast<std::size_t>(v)] == -1) s.push_back(v);
    result.s = VertexSet(std::move(s));
    sweep.merge_window_fas(t, npd.bag(k + 1));
    result.fas = sweep.current_arcs();
    return result;
  }
}

bool VerificationReport::all_pass() const {
  for (const ClaimCheck& c : claims)
    if (!c.pass) return false;
  return true;
}

VerificationReport verify_result(const Graph& g, const ApproxResult& r) {
  VerificationReport report;
  {
    Colouring c = closure(g, r.s);
    report.claims.push_back({"s-forces-graph", c.white.empty(),
                             c.white.empty() ? "closure is all blue"
                                             : std::to_string(c.white.size()) +
                                                   " vertices stay white"});
  }
  {
    bool ok = true;
    std::string detail = "every member is a fort";
    for (std::size_t i = 0; i < r.packing.forts.size() && ok; ++i)
      if (!is_fort(g, r.packing.forts[i])) {
        ok = false;
        detail = "member " + std::to_string(i) + " is not a fort";
      }
    report.claims.push_back({"forts-valid", ok, detail});
  }
  {
    bool ok = true;
    std::string detail = "members are pairwise disjoint";
    std::vector<Vertex> all;
    for (const VertexSet& f : r.packing.forts)
      all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) {
      ok = false;
      detail = "vertex " + std::to_string(*dup) + " is in two forts";
    }
    report.claims.push_back({"forts-disjoint", ok, detail});
  }
  {
    std::int64_t bound =
        static_cast<std::int64_t>(r.width_used + 1) * r.packing.size();
    bool ok = r.s.size() <= bound;
    report.claims.push_back(
        {"packing-bound", ok,
         "|s| = " + std::to_string(r.s.size()) + ", (w+1)|F| = " + std::to_string(bound)});
  }
  {
    bool fas_ok = satisfies_p1(r.fas);
    std::string detail = "forcing arc set with sources s";
    if (!fas_ok) {
      detail = "arcs do not form disjoint directed paths";
    } else if (const std::optional<ChainTwist> twist = find_chain_twist(g, r.fas)) {
      fas_ok = false;
      detail = "chain twist at";
      for (const Vertex v : twist->cycle) detail += ' ' + std::to_string(v);
    }
    const bool src_ok = fas_ok && sources(r.fas) == r.s;
    if (fas_ok && !src_ok) detail = "arc sources differ from s";
    report.claims.push_back({"arc-set-sources", fas_ok && src_ok, detail});
  }
  return report;
}

RatioCertificate ratio_certificate(const ApproxResult& r) {
  RatioCertificate cert;
  cert.upper = r.s.size();
  if (r.packing.size() > 0) {
    cert.lower = r.packing.size();
    cert.bounded = true;
  } else {
    cert.lower = r.s.empty() ? 0 : 1;
    cert.bounded = r.s.empty();
  }
  return cert;
}

}  // namespace zf
