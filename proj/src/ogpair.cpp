#include "og4/ogpair.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "og4/errors.hpp"

namespace og4 {

namespace {

bool generator_preserves_edges(const OrientedGraph& g, const Permutation& p) {
  for (auto [u, v] : g.arcs())
    if (!g.has_edge(p(u), p(v))) return false;
  return true;
}

bool generator_preserves_delta(const OrientedGraph& g, const Permutation& p) {
  for (auto [u, v] : g.arcs())
    if (!g.has_arc(p(u), p(v))) return false;
  return true;
}

}  // namespace

OrientedPair OrientedPair::make(OrientedGraph graph, PermGroup group, DeltaPolicy policy) {
  if (group.degree() != graph.vertex_count())
    throw DegreeMismatch("group degree does not match vertex count");
  for (const auto& gen : group.generators()) {
    if (!generator_preserves_edges(graph, gen))
      throw Error("a generator does not preserve the edge set");
    if (policy == DeltaPolicy::Require && !generator_preserves_delta(graph, gen))
      throw Error("a generator does not preserve the arc set");
  }
  OrientedPair p;
  p.graph_ = std::move(graph);
  p.group_ = std::move(group);
  return p;
}

OrientedPair OrientedPair::with_reversed_delta() const {
  OrientedPair p;
  p.graph_ = graph_.reversed();
  p.group_ = group_;
  return p;
}

namespace {

// Orbit partition of indexed objects under a permutation action given as
// index maps per generator.
int orbit_count(int count, const std::vector<std::vector<int>>& gen_maps,
                std::vector<int>* orbit_id_out = nullptr) {
  std::vector<int> orbit_id(count, -1);
  int orbits = 0;
  for (int start = 0; start < count; ++start) {
    if (orbit_id[start] != -1) continue;
    const int id = orbits++;
    std::vector<int> stack{start};
    orbit_id[start] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& m : gen_maps) {
        if (orbit_id[m[x]] == -1) {
          orbit_id[m[x]] = id;
          stack.push_back(m[x]);
        }
      }
    }
  }
  if (orbit_id_out) *orbit_id_out = std::move(orbit_id);
  return orbits;
}

struct ArcIndex {
  std::vector<std::pair<int, int>> arcs;  // both directions of every edge
  std::map<std::pair<int, int>, int> index;

  explicit ArcIndex(const OrientedGraph& g) {
    for (auto [u, v] : g.edges()) {
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) index[arcs[i]] = static_cast<int>(i);
  }

  std::vector<std::vector<int>> gen_maps(const PermGroup& group) const {
    std::vector<std::vector<int>> maps;
    for (const auto& gen : group.generators()) {
      std::vector<int> m(arcs.size());
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto it = index.find({gen(arcs[i].first), gen(arcs[i].second)});
        if (it == index.end()) throw Error("group does not act on the arc set");
        m[i] = it->second;
      }
      maps.push_back(std::move(m));
    }
    return maps;
  }
};

}  // namespace

int edge_orbit_count(const OrientedGraph& g, const PermGroup& group) {
  auto edges = g.edges();
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> maps;
  for (const auto& gen : group.generators()) {
    std::vector<int> m(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int a = gen(edges[i].first), b = gen(edges[i].second);
      auto it = index.find({std::min(a, b), std::max(a, b)});
      if (it == index.end()) throw Error("group does not act on the edge set");
      m[i] = it->second;
    }
    maps.push_back(std::move(m));
  }
  return orbit_count(static_cast<int>(edges.size()), maps);
}

int arc_orbit_count(const OrientedGraph& g, const PermGroup& group) {
  ArcIndex ai(g);
  return orbit_count(static_cast<int>(ai.arcs.size()), ai.gen_maps(group));
}

std::vector<std::vector<std::pair<int, int>>> arc_orbits(const OrientedGraph& g,
                                                         const PermGroup& group) {
  ArcIndex ai(g);
  std::vector<int> orbit_id;
  const int count = orbit_count(static_cast<int>(ai.arcs.size()), ai.gen_maps(group), &orbit_id);
  std::vector<std::vector<std::pair<int, int>>> out(count);
  for (std::size_t i = 0; i < ai.arcs.size(); ++i) out[orbit_id[i]].push_back(ai.arcs[i]);
  return out;
}

OG4Report check_og4(const OrientedPair& pair) {
  const OrientedGraph& g = pair.graph();
  const PermGroup& group = pair.group();
  if (group.degree() != g.vertex_count()) throw DegreeMismatch("check_og4 degree mismatch");

  OG4Report r;
  r.connected = is_connected(g);
  r.quartic = validate_quartic(g).quartic;
  r.vertex_orbit_count = orbits(group).cell_count();
  r.vertex_transitive = (r.vertex_orbit_count == 1);
  r.edge_orbit_count = edge_orbit_count(g, group);
  r.edge_transitive = (r.edge_orbit_count == 1);

  ArcIndex ai(g);
  std::vector<int> orbit_id;
  r.arc_orbit_count =
      orbit_count(static_cast<int>(ai.arcs.size()), ai.gen_maps(group), &orbit_id);
  r.arc_transitive = (r.arc_orbit_count == 1);

  // Delta is one full arc orbit, and the other orbit is its reversal.
  if (!pair.delta().empty() && !r.arc_transitive) {
    const int delta_orbit = orbit_id[ai.index.at(pair.delta().front())];
    std::size_t orbit_size = 0;
    for (std::size_t i = 0; i < ai.arcs.size(); ++i)
      if (orbit_id[i] == delta_orbit) ++orbit_size;
    r.delta_is_single_orbit = (orbit_size == pair.delta().size());
    if (r.delta_is_single_orbit) {
      for (auto [u, v] : pair.delta())
        if (orbit_id[ai.index.at({u, v})] != delta_orbit) {
          r.delta_is_single_orbit = false;
          break;
        }
    }
  }

  r.orientation_preserved = true;
  for (const auto& gen : group.generators())
    if (!generator_preserves_delta(g, gen)) {
      r.orientation_preserved = false;
      break;
    }

  if (r.vertex_transitive && g.vertex_count() > 0)
    r.stabilizer_order = group.order() / static_cast<std::size_t>(g.vertex_count());
  else if (g.vertex_count() > 0)
    r.stabilizer_order = stabilizer(group, 0).order();
  return r;
}

std::vector<std::pair<int, int>> canonical_delta(const OrientedGraph& g, const PermGroup& group) {
  auto orbits = arc_orbits(g, group);
  if (orbits.size() == 1) throw ArcTransitive("single arc orbit: no orientation to choose");
  if (orbits.size() != 2)
    throw Error("expected exactly two arc orbits (group is not half-transitive on arcs)");
  for (auto& o : orbits) std::sort(o.begin(), o.end());
  // The two orbits must be reverses of each other.
  for (auto [u, v] : orbits[0]) {
    if (std::binary_search(orbits[0].begin(), orbits[0].end(), std::make_pair(v, u)))
      throw Error("arc orbit contains both directions of an edge");
  }
  return orbits[0].front() <= orbits[1].front() ? orbits[0] : orbits[1];
}

std::pair<std::vector<int>, std::vector<int>> in_out_neighbours(const OrientedPair& pair,
                                                                int vertex) {
  return {pair.graph().out_neighbours(vertex), pair.graph().in_neighbours(vertex)};
}

namespace {

struct IsoSearch {
  const OrientedGraph& g1;
  const OrientedGraph& g2;
  bool reversed;  // map arcs of g1 onto reversed arcs of g2
  std::vector<int> order;   // g1 vertices in search order (component-wise BFS)
  std::vector<int> map;     // g1 vertex -> g2 vertex or -1
  std::vector<char> used;   // g2 vertex used

  IsoSearch(const OrientedGraph& a, const OrientedGraph& b, bool rev)
      : g1(a), g2(b), reversed(rev) {
    map.assign(g1.vertex_count(), -1);
    used.assign(g2.vertex_count(), 0);
    std::vector<char> seen(g1.vertex_count(), 0);
    for (int start = 0; start < g1.vertex_count(); ++start) {
      if (seen[start]) continue;
      std::size_t head = order.size();
      order.push_back(start);
      seen[start] = 1;
      while (head < order.size()) {
        const int x = order[head++];
        for (int y : g1.neighbours(x))
          if (!seen[y]) {
            seen[y] = 1;
            order.push_back(y);
          }
      }
    }
  }

  bool arc_matches(int u1, int v1, int u2, int v2) const {
    const bool fwd1 = g1.has_arc(u1, v1);
    const bool fwd2 = reversed ? g2.has_arc(v2, u2) : g2.has_arc(u2, v2);
    return fwd1 == fwd2;
  }

  bool consistent(int v, int w) const {
    if (g1.degree(v) != g2.degree(w)) return false;
    for (int u = 0; u < g1.vertex_count(); ++u) {
      if (map[u] == -1) continue;
      const bool e1 = g1.has_edge(v, u);
      const bool e2 = g2.has_edge(w, map[u]);
      if (e1 != e2) return false;
      if (e1 && !arc_matches(v, u, w, map[u])) return false;
    }
    return true;
  }

  template <typename Accept>
  bool search(std::size_t depth, const Accept& accept) {
    if (depth == order.size()) return accept(map);
    const int v = order[depth];
    for (int w = 0; w < g2.vertex_count(); ++w) {
      if (used[w] || !consistent(v, w)) continue;
      map[v] = w;
      used[w] = 1;
      if (search(depth + 1, accept)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> pair_isomorphic(const OrientedPair& p1, const OrientedPair& p2,
                                           bool strict_delta) {
  const OrientedGraph& g1 = p1.graph();
  const OrientedGraph& g2 = p2.graph();
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  if (p1.group().order() != p2.group().order()) return std::nullopt;
  {
    std::vector<int> d1, d2;
    for (int v = 0; v < g1.vertex_count(); ++v) d1.push_back(g1.degree(v));
    for (int v = 0; v < g2.vertex_count(); ++v) d2.push_back(g2.degree(v));
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return std::nullopt;
  }

  auto accept = [&](const std::vector<int>& map) {
    Permutation f(map);
    const Permutation f_inv = f.inverse();
    for (const auto& gen : p1.group().generators())
      if (!p2.group().contains(f_inv * gen * f)) return false;
    return true;
  };

  std::optional<Permutation> witness;
  auto run = [&](bool rev) {
    IsoSearch s(g1, g2, rev);
    auto hold = [&](const std::vector<int>& map) {
      if (!accept(map)) return false;
      witness = Permutation(map);
      return true;
    };
    return s.search(0, hold);
  };

  if (run(false)) return witness;
  if (!strict_delta && run(true)) return witness;
  return std::nullopt;
}

}  // namespace og4
