#include <doctest.h>

#include <algorithm>
#include <set>

#include "og4/errors.hpp"
#include "og4/families.hpp"
#include "og4/graph.hpp"

using namespace og4;

namespace {

OrientedGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return OrientedGraph::from_arcs(n, std::move(arcs));
}

}  // namespace

TEST_CASE("from_arcs rejects loops, duplicates and double orientations") {
  CHECK_THROWS_AS(OrientedGraph::from_arcs(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(OrientedGraph::from_arcs(3, {{0, 1}, {1, 0}}), Error);
  CHECK_NOTHROW(OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("quartic validation") {
  const OrientedGraph g = gamma_graph(3, 3);
  const QuarticReport rep = validate_quartic(g);
  CHECK(rep.quartic);
  CHECK(rep.in_out_balanced);
  CHECK(rep.bad_vertices.empty());
  CHECK(g.edge_count() == 2 * g.vertex_count());

  const QuarticReport c5 = validate_quartic(cycle_graph(5));
  CHECK_FALSE(c5.quartic);
  CHECK(c5.bad_vertices.size() == 5);
}

TEST_CASE("connectivity and bipartiteness of the torus family") {
  for (int r = 3; r <= 6; ++r)
    for (int s = 3; s <= 6; ++s) {
      const OrientedGraph g = gamma_graph(r, s);
      CHECK(is_connected(g) == (r % 2 == 1 || s % 2 == 1));
      CHECK(is_bipartite(g).bipartite == (r % 2 == 0 || s % 2 == 0));
    }
}

TEST_CASE("bipartition witness is a proper two-colouring") {
  const OrientedGraph g = gamma_graph(3, 4);
  const BipartiteReport rep = is_bipartite(g);
  REQUIRE(rep.bipartite);
  for (auto [u, v] : g.edges()) CHECK(rep.side[u] != rep.side[v]);
}

TEST_CASE("induced subgraph") {
  const OrientedGraph g = gamma_graph(4, 4);
  std::vector<int> all(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
  CHECK(induced(g, all).graph == g);

  std::vector<int> plus;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i % 2 == j % 2) plus.push_back(i * 4 + j);
  const InducedSubgraph sub = induced(g, plus);
  CHECK(sub.graph.vertex_count() == 8);
  CHECK(validate_quartic(sub.graph).quartic);
  CHECK(is_connected(sub.graph));

  CHECK(induced(g, {5}).graph.vertex_count() == 1);
  CHECK_THROWS_AS(induced(g, {}), Error);
}

TEST_CASE("induced composes with index maps") {
  const OrientedGraph g = gamma_graph(3, 4);
  const std::vector<int> outer = {0, 1, 2, 4, 5, 6, 8, 9};
  const InducedSubgraph first = induced(g, outer);
  const std::vector<int> inner = {0, 1, 3, 4};
  const InducedSubgraph second = induced(first.graph, inner);

  std::vector<int> direct;
  for (int v : inner) direct.push_back(first.to_original[v]);
  const InducedSubgraph composed = induced(g, direct);
  CHECK(second.graph == composed.graph);
}

TEST_CASE("standard double cover of an edge is two disjoint edges") {
  const OrientedGraph k2 = OrientedGraph::from_arcs(2, {{0, 1}});
  const OrientedGraph cov = standard_double_cover(k2);
  CHECK(cov.vertex_count() == 4);
  CHECK(cov.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
  CHECK_FALSE(is_connected(cov));
}

TEST_CASE("standard double cover of a triangle is the hexagon") {
  const OrientedGraph c3 = cycle_graph(3);
  const OrientedGraph cov = standard_double_cover(c3);
  CHECK(cov.vertex_count() == 6);
  CHECK(cov.edges() == std::vector<std::pair<int, int>>{
                           {0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 5}, {3, 4}});
  CHECK(is_connected(cov));
  for (int v = 0; v < 6; ++v) CHECK(cov.degree(v) == 2);
}

TEST_CASE("double cover matches the alternating family graph") {
  const OrientedGraph base = gamma_graph(3, 3);
  const OrientedGraph cov = standard_double_cover(base);
  const OrientedPair direct = double_cover_pair(3, 3);
  CHECK(cov.vertex_count() == direct.graph().vertex_count());
  CHECK(cov.edges() == direct.graph().edges());
}

TEST_CASE("double cover connectivity tracks bipartiteness") {
  for (int r = 3; r <= 6; ++r)
    for (int s = 3; s <= 6; ++s) {
      const OrientedGraph g = gamma_graph(r, s);
      const bool conn = is_connected(g), bip = is_bipartite(g).bipartite;
      CHECK(is_connected(standard_double_cover(g)) == (conn && !bip));
    }
}

TEST_CASE("DOT output is deterministic and carries directions") {
  const OrientedGraph g = OrientedGraph::from_arcs(3, {{0, 1}, {2, 1}});
  const std::string dot = to_dot(g);
  CHECK(dot == to_dot(g));
  CHECK(dot.find("0 -- 1 [dir=forward];") != std::string::npos);
  CHECK(dot.find("1 -- 2 [dir=back];") != std::string::npos);
}
