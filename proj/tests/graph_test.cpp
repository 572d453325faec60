#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "zf/errors.hpp"
#include "zf/generators.hpp"
#include "zf/graph.hpp"

using namespace zf;
using namespace zf::test;

TEST_SUITE_BEGIN("graph");

TEST_CASE("vertex set operations stay sorted and duplicate free") {
  VertexSet a({3, 1, 3, 2});
  CHECK(a.ids() == std::vector<Vertex>{1, 2, 3});
  VertexSet b({2, 4});
  CHECK(set_union(a, b).ids() == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(set_intersection(a, b).ids() == std::vector<Vertex>{2});
  CHECK(set_difference(a, b).ids() == std::vector<Vertex>{1, 3});
  CHECK(b.is_subset_of(set_union(a, b)));
  CHECK(!a.is_subset_of(b));
  CHECK(a.intersects(b));
  CHECK(!VertexSet({5}).intersects(a));
  CHECK(VertexSet::range(3).ids() == std::vector<Vertex>{0, 1, 2});
  CHECK(VertexSet().empty());
}

TEST_CASE("parse and serialize round trip") {
  const std::string text = "3 2\n0 1\n1 2\n";
  const Graph g = parse_graph(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(serialize_graph(g) == text);
  CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("serialization sorts edges") {
  const Graph g(4, {{2, 3}, {0, 3}, {0, 1}});
  CHECK(serialize_graph(g) == "4 3\n0 1\n0 3\n2 3\n");
}

TEST_CASE("parse errors carry kind and line") {
  auto expect = [](const std::string& text, ParseError::Kind kind, int line) {
    try {
      parse_graph(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.kind() == kind);
      CHECK(e.line() == line);
    }
  };
  expect("nope\n", ParseError::Kind::Header, 1);
  expect("3\n", ParseError::Kind::Header, 1);
  expect("3 1\n0  1\n", ParseError::Kind::EdgeSyntax, 2);
  expect("3 1\n1 0\n", ParseError::Kind::EndpointOrder, 2);
  expect("3 1\n0 3\n", ParseError::Kind::VertexRange, 2);
  expect("3 1\n1 1\n", ParseError::Kind::SelfLoop, 2);
  expect("3 2\n0 1\n0 1\n", ParseError::Kind::DuplicateEdge, 3);
  expect("3 2\n0 1\n", ParseError::Kind::LineCount, 3);
  expect("3 1\n0 1\n1 2\n", ParseError::Kind::LineCount, 3);
}

TEST_CASE("induced subgraph keeps ascending ids and mappings") {
  const Graph g = parse_graph("5 5\n0 1\n0 2\n1 2\n2 3\n3 4\n");
  const InducedSubgraph sub = induced_subgraph(g, VertexSet({0, 2, 3}));
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.to_global == std::vector<Vertex>{0, 2, 3});
  CHECK(sub.to_local(2) == 1);
  CHECK(sub.to_local(1) == -1);
  CHECK(sub.graph.has_edge(0, 1));  // 0-2
  CHECK(sub.graph.has_edge(1, 2));  // 2-3
  CHECK(!sub.graph.has_edge(0, 2));
}

TEST_CASE("components and connectivity") {
  const Graph g = parse_graph("6 4\n0 1\n1 2\n3 4\n4 5\n");
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].ids() == std::vector<Vertex>{0, 1, 2});
  CHECK(comps[1].ids() == std::vector<Vertex>{3, 4, 5});
  CHECK(!is_connected(g));
  CHECK(is_connected(path_graph(4)));
  CHECK(is_connected(Graph(0, {})));
  CHECK(is_connected(Graph(1, {})));
  CHECK(!is_connected(Graph(2, {})));
}

TEST_CASE("vertex cuts") {
  const Graph p4 = path_graph(4);
  CHECK(is_vertex_cut(p4, VertexSet({1})));
  CHECK(is_vertex_cut(p4, VertexSet({2})));
  CHECK(!is_vertex_cut(p4, VertexSet({0})));
  CHECK(!is_vertex_cut(complete_graph(4), VertexSet({1, 2})));
}

TEST_CASE("strong product matches its adjacency rule") {
  std::mt19937_64 rng(test_rng_seed(11));
  for (int it = 0; it < 30; ++it) {
    const Graph g = random_connected_graph(2 + static_cast<Vertex>(rng() % 4), 0.5, rng);
    const Graph h = random_connected_graph(2 + static_cast<Vertex>(rng() % 4), 0.5, rng);
    const StrongProduct p = strong_product(g, h);
    REQUIRE(p.graph.vertex_count() == g.vertex_count() * h.vertex_count());
    for (Vertex a = 0; a < g.vertex_count(); ++a)
      for (Vertex b = 0; b < h.vertex_count(); ++b)
        for (Vertex c = 0; c < g.vertex_count(); ++c)
          for (Vertex d = 0; d < h.vertex_count(); ++d) {
            if (a == c && b == d) continue;
            const bool gs = a == c || g.has_edge(a, c);
            const bool hs = b == d || h.has_edge(b, d);
            CHECK(p.graph.has_edge(p.index(a, b), p.index(c, d)) == (gs && hs));
          }
  }
}

TEST_CASE("strong product of two edges is the complete graph on four") {
  const StrongProduct p = strong_product(path_graph(2), path_graph(2));
  CHECK(p.graph == complete_graph(4));
  CHECK(p.unindex(3) == std::pair<Vertex, Vertex>{1, 1});
}

TEST_CASE("proper interval recognition on known families") {
  CHECK(proper_interval_order(path_graph(6)).has_value());
  CHECK(proper_interval_order(complete_graph(5)).has_value());
  CHECK(proper_interval_order(Graph(3, {})).has_value());
  // claw and induced four-cycle are the canonical obstructions
  CHECK(!proper_interval_order(parse_graph("4 3\n0 1\n0 2\n0 3\n")).has_value());
  CHECK(!proper_interval_order(cycle_graph(4)).has_value());
  CHECK(!proper_interval_order(cycle_graph(6)).has_value());
  CHECK(proper_interval_order(cycle_graph(3)).has_value());
}

TEST_CASE("returned orders are umbrella orders") {
  std::mt19937_64 rng(test_rng_seed(12));
  for (int it = 0; it < 50; ++it) {
    const Graph g = random_proper_interval_graph(1 + static_cast<Vertex>(rng() % 14), rng);
    const auto order = proper_interval_order(g);
    REQUIRE(order.has_value());
    CHECK(is_umbrella_order(g, *order));
  }
}

TEST_CASE("recognition agrees with brute force over all orders") {
  for (Vertex n = 1; n <= 5; ++n) {
    for_each_graph(n, true, [&](const Graph& g) {
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      bool any = false;
      do {
        if (is_umbrella_order(g, perm)) any = true;
      } while (!any && std::next_permutation(perm.begin(), perm.end()));
      const auto order = proper_interval_order(g);
      CHECK(order.has_value() == any);
      if (order) CHECK(is_umbrella_order(g, *order));
    });
  }
}

TEST_CASE("recognition handles long umbrella orders") {
  // regression: class-list splits around a drained head used to corrupt the
  // refinement order on larger instances
  std::mt19937_64 rng(test_rng_seed(13));
  for (int it = 0; it < 10; ++it) {
    const Graph g = random_proper_interval_graph(200, rng);
    const auto order = proper_interval_order(g);
    REQUIRE(order.has_value());
    CHECK(is_umbrella_order(g, *order));
  }
}

TEST_CASE("clique cover on umbrella orders is minimum") {
  const Graph p4 = path_graph(4);
  auto order = proper_interval_order(p4);
  REQUIRE(order.has_value());
  CHECK(minimum_clique_cover_interval(p4, *order).size() == 3);

  const Graph k4 = complete_graph(4);
  order = proper_interval_order(k4);
  CHECK(minimum_clique_cover_interval(k4, *order).size() == 1);

  const Graph paw = parse_graph("4 4\n0 1\n0 2\n1 2\n2 3\n");
  order = proper_interval_order(paw);
  REQUIRE(order.has_value());
  CHECK(minimum_clique_cover_interval(paw, *order).size() == 2);

  std::mt19937_64 rng(test_rng_seed(14));
  for (int it = 0; it < 60; ++it) {
    const Graph g = random_proper_interval_graph(2 + static_cast<Vertex>(rng() % 7), rng);
    const auto o = proper_interval_order(g);
    REQUIRE(o.has_value());
    const auto cover = minimum_clique_cover_interval(g, *o);
    CHECK(static_cast<int>(cover.size()) == brute_force_clique_cover(g));
    // every cover member is a clique and every edge is covered
    std::vector<Edge> covered;
    for (const VertexSet& c : cover)
      for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j) {
          CHECK(g.has_edge(c[i], c[j]));
          covered.push_back({std::min(c[i], c[j]), std::max(c[i], c[j])});
        }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    CHECK(covered == g.edges());
  }
}

TEST_SUITE_END();
