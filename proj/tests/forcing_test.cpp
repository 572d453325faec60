#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "zf/errors.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"

using namespace zf;
using namespace zf::test;

namespace {

// Replays a forcing history, checking each force is legal when applied.
bool history_is_legal(const Graph& g, const VertexSet& seed, const Colouring& c) {
  std::vector<char> blue(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : seed) blue[static_cast<std::size_t>(v)] = 1;
  for (const Arc& f : c.history) {
    if (!blue[static_cast<std::size_t>(f.tail)]) return false;
    if (blue[static_cast<std::size_t>(f.head)]) return false;
    for (Vertex w : g.neighbors(f.tail))
      if (!blue[static_cast<std::size_t>(w)] && w != f.head) return false;
    blue[static_cast<std::size_t>(f.head)] = 1;
  }
  for (Vertex v : c.blue)
    if (!blue[static_cast<std::size_t>(v)]) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("forcing");

TEST_CASE("closure of a path from one end runs down the path") {
  const Graph g = path_graph(5);
  const Colouring c = closure(g, VertexSet({0}));
  CHECK(c.white.empty());
  CHECK(c.blue == VertexSet::range(5));
  CHECK(c.history == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("closure agrees with the quadratic rescan on every small graph and seed") {
  for (Vertex n = 1; n <= 5; ++n) {
    for_each_graph(n, false, [&](const Graph& g) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> ids;
        for (Vertex v = 0; v < n; ++v)
          if (mask & (1u << v)) ids.push_back(v);
        const VertexSet seed(std::move(ids));
        const Colouring c = closure(g, seed);
        CHECK(c.white == naive_closure_white(g, seed));
        CHECK(set_union(c.blue, c.white) == VertexSet::range(n));
        CHECK(!c.blue.intersects(c.white));
        CHECK(history_is_legal(g, seed, c));
        CHECK(is_zero_forcing_set(g, seed) == c.white.empty());
      }
    });
  }
}

TEST_CASE("closure agrees with the quadratic rescan on random graphs") {
  std::mt19937_64 rng(test_rng_seed(21));
  for (int it = 0; it < 120; ++it) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 39);
    const Graph g = random_connected_graph(n, 0.15, rng);
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) ids.push_back(v);
    const VertexSet seed(std::move(ids));
    const Colouring c = closure(g, seed);
    CHECK(c.white == naive_closure_white(g, seed));
    CHECK(history_is_legal(g, seed, c));
  }
}

TEST_CASE("fort predicate matches the definition on all subsets") {
  for (Vertex n = 1; n <= 5; ++n) {
    for_each_graph(n, false, [&](const Graph& g) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> ids;
        for (Vertex v = 0; v < n; ++v)
          if (mask & (1u << v)) ids.push_back(v);
        const VertexSet f(std::move(ids));
        CHECK(is_fort(g, f) == naive_is_fort(g, f));
      }
    });
  }
}

TEST_CASE("a nonempty stalled white set is a fort") {
  std::mt19937_64 rng(test_rng_seed(22));
  int nonempty = 0;
  for (int it = 0; it < 200; ++it) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 19);
    const Graph g = random_connected_graph(n, 0.2, rng);
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 4 == 0) ids.push_back(v);
    const VertexSet w = white_set(g, VertexSet(std::move(ids)));
    if (!w.empty()) {
      ++nonempty;
      CHECK(is_fort(g, w));
    }
  }
  CHECK(nonempty > 50);  // the sample actually exercises the property
}

TEST_CASE("the empty set is never a fort") {
  CHECK(!is_fort(path_graph(3), VertexSet()));
  CHECK(!is_fort(Graph(0, {}), VertexSet()));
}

TEST_CASE("canonical forcing runs are deterministic and sized n minus seed") {
  const Graph g = path_graph(3);
  const ArcSet a = canonical_fas(g, VertexSet({0}));
  CHECK(a.arcs() == std::vector<Arc>{{0, 1}, {1, 2}});

  std::mt19937_64 rng(test_rng_seed(23));
  for (int it = 0; it < 150; ++it) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 12);
    const Graph h = random_connected_graph(n, 0.35, rng);
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2 == 0) ids.push_back(v);
    VertexSet seed(std::move(ids));
    if (!is_zero_forcing_set(h, seed)) seed = VertexSet::range(n);
    const ArcSet fas = canonical_fas(h, seed);
    CHECK(fas == canonical_fas(h, seed));
    CHECK(fas.size() == n - seed.size());
    CHECK(sources(fas) == seed);
    CHECK(is_forcing_arc_set(h, fas));
    CHECK(naive_restricted_simulation_completes(h, fas));
  }
}

TEST_CASE("canonical runs pick the lowest eligible forcer") {
  // after 0 forces 1, both 2 and 4 could force 3; the run picks 2
  const Graph g = path_graph(5);
  const ArcSet a = canonical_fas(g, VertexSet({0, 2, 4}));
  CHECK(a.arcs() == std::vector<Arc>{{0, 1}, {2, 3}});
}

TEST_CASE("canonical runs reject non forcing seeds") {
  CHECK_THROWS_AS(canonical_fas(path_graph(4), VertexSet({1})), PreconditionError);
  try {
    canonical_fas(cycle_graph(4), VertexSet({0}));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.kind() == PreconditionError::Kind::NotAZeroForcingSet);
  }
}

TEST_SUITE_END();
