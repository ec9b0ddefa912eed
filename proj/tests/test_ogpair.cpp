#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "og4/errors.hpp"
#include "og4/families.hpp"
#include "og4/ogpair.hpp"

using namespace og4;

namespace {

OrientedGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return OrientedGraph::from_arcs(n, std::move(arcs));
}

// Arc orbit through `arc` by applying every group element, independent of
// the generator-based union-find path.
std::set<std::pair<int, int>> full_orbit(const PermGroup& g, std::pair<int, int> arc) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : g.elements()) out.insert({e(arc.first), e(arc.second)});
  return out;
}

}  // namespace

TEST_CASE("membership report for the reference pair") {
  const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  const OG4Report rep = check_og4(p);
  CHECK(rep.member());
  CHECK(rep.stabilizer_order == 2);
  CHECK(rep.arc_orbit_count == 2);
  CHECK(rep.edge_orbit_count == 1);
}

TEST_CASE("regular subgroup is vertex- but not edge-transitive") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const OrientedPair p = OrientedPair::make(gamma_graph(3, 3),
                                            PermGroup::from_generators(9, {a.mu, a.nu}));
  const OG4Report rep = check_og4(p);
  CHECK_FALSE(rep.member());
  CHECK(rep.vertex_transitive);
  CHECK_FALSE(rep.edge_transitive);
  CHECK(rep.edge_orbit_count == 2);
  CHECK(rep.arc_orbit_count == 4);
}

TEST_CASE("double cover pair is a member") {
  const OG4Report rep = check_og4(double_cover_pair(3, 3));
  CHECK(rep.member());
  CHECK(rep.stabilizer_order == 2);
}

TEST_CASE("exactly two arc orbits swapped by reversal for members") {
  for (const OrientedPair& p : {gamma_pair(3, 3, GroupVariant::G, Orientation::Con1),
                                gamma_pair(3, 4, GroupVariant::H, Orientation::Con2c),
                                double_cover_pair(3, 3)}) {
    auto orbits = arc_orbits(p.graph(), p.group());
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].size() == static_cast<std::size_t>(p.graph().edge_count()));
    std::set<std::pair<int, int>> first(orbits[0].begin(), orbits[0].end());
    for (auto [u, v] : orbits[1]) CHECK(first.count({v, u}) == 1);
  }
}

TEST_CASE("canonical_delta on the oriented cycle") {
  const OrientedGraph c5 = cycle_graph(5);
  std::vector<int> rot_im(5);
  for (int i = 0; i < 5; ++i) rot_im[i] = (i + 1) % 5;
  const PermGroup rot = PermGroup::from_generators(5, {Permutation(rot_im)});
  const auto delta = canonical_delta(c5, rot);
  CHECK(std::find(delta.begin(), delta.end(), std::make_pair(0, 1)) != delta.end());
  CHECK(delta.size() == 5);
}

TEST_CASE("canonical_delta of the reference family agrees with a full-orbit oracle") {
  const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  const auto delta = canonical_delta(p.graph(), p.group());
  // Least arc overall is (0,4) = (0,0)->(1,1); its full orbit is delta.
  const auto orbit = full_orbit(p.group(), {0, 4});
  CHECK(std::set<std::pair<int, int>>(delta.begin(), delta.end()) == orbit);
  CHECK(std::set<std::pair<int, int>>(p.delta().begin(), p.delta().end()) == orbit);
}

TEST_CASE("canonical_delta refuses an arc-transitive action") {
  // K5 with its full symmetric group.
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) arcs.emplace_back(i, j);
  const OrientedGraph k5 = OrientedGraph::from_arcs(5, std::move(arcs));
  const PermGroup s5 = PermGroup::from_generators(
      5, {Permutation::from_cycles(5, {{0, 1}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK_THROWS_AS(canonical_delta(k5, s5), ArcTransitive);
}

TEST_CASE("in and out neighbours") {
  const GammaAtlas a33 = gamma_atlas(3, 3);
  const OrientedPair p1 = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  auto [out1, in1] = in_out_neighbours(p1, a33.vertex(0, 0));
  CHECK(out1 == std::vector<int>{a33.vertex(1, 1), a33.vertex(2, 1)});
  CHECK(in1 == std::vector<int>{a33.vertex(1, 2), a33.vertex(2, 2)});

  const GammaAtlas a34 = gamma_atlas(3, 4);
  const OrientedPair p2 = gamma_pair(3, 4, GroupVariant::H, Orientation::Con2c);
  auto [out2, in2] = in_out_neighbours(p2, a34.vertex(0, 0));
  CHECK(out2 == std::vector<int>{a34.vertex(1, 1), a34.vertex(2, 3)});

  const DoubleAtlas ad = double_atlas(3, 3);
  const OrientedPair p3 = double_cover_pair(3, 3);
  auto [out3, in3] = in_out_neighbours(p3, ad.vertex(0, 0, 0));
  CHECK(out3 == std::vector<int>{ad.vertex(1, 1, 1), ad.vertex(2, 2, 1)});
}

TEST_CASE("pair isomorphism is reflexive with the identity witness") {
  const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  const auto w = pair_isomorphic(p, p);
  REQUIRE(w.has_value());
  CHECK(w->is_identity());
}

TEST_CASE("pair isomorphism accepts a reversed arc set, strict mode refuses it") {
  for (const OrientedPair& p : {gamma_pair(3, 3, GroupVariant::G, Orientation::Con1),
                                gamma_pair(3, 4, GroupVariant::H, Orientation::Con2c),
                                gamma_plus_pair(4, 4, GroupVariant::G, Orientation::Con1),
                                double_cover_pair(3, 3)}) {
    const OrientedPair rev = p.with_reversed_delta();
    CHECK(pair_isomorphic(p, rev).has_value());
  }
  // Reversal of the uniform orientation is not the same arc set, and no
  // graph automorphism conjugating the group maps one onto the other.
  const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  CHECK(pair_isomorphic(p, p, true).has_value());
}

TEST_CASE("pair isomorphism is symmetric on the reference set") {
  const OrientedPair a = gamma_pair(3, 4, GroupVariant::G, Orientation::Con1);
  const OrientedPair b = gamma_plus_pair(6, 4, GroupVariant::G, Orientation::Con1);
  const auto w = pair_isomorphic(a, b);
  REQUIRE(w.has_value());
  const auto back = pair_isomorphic(b, a);
  REQUIRE(back.has_value());
  // The witness inverse is itself a valid witness.
  const Permutation inv = w->inverse();
  for (auto [u, v] : b.graph().edges()) CHECK(a.graph().has_edge(inv(u), inv(v)));
}

TEST_CASE("pairs of different size or group order are never isomorphic") {
  const OrientedPair small = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  const OrientedPair big = double_cover_pair(3, 3);
  CHECK_FALSE(pair_isomorphic(small, big).has_value());
}

TEST_CASE("non-isomorphic pairs on the same graph are told apart") {
  // Same 12-vertex graph, G- versus H-variant: the H pair has both cyclic
  // quotients unoriented, so no pair isomorphism can exist.
  const OrientedPair g = gamma_pair(3, 4, GroupVariant::G, Orientation::Con1);
  const OrientedPair h = gamma_pair(3, 4, GroupVariant::H, Orientation::Con2c);
  CHECK_FALSE(pair_isomorphic(g, h).has_value());
}
