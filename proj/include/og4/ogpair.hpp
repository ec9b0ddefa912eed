#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "og4/graph.hpp"
#include "og4/permgroup.hpp"

namespace og4 {

/// How strictly the orientation must be respected when a pair is built.
enum class DeltaPolicy {
  Require,  // every generator must map the arc set onto itself
  Allow,    // edge preservation only; orientation checked later by check_og4
};

/// The candidate object (graph, group, arc set): a 4-valent graph with a
/// chosen orientation and a group acting on its vertices. The arc set is
/// the graph's own orientation overlay.
class OrientedPair {
 public:
  OrientedPair() = default;
  static OrientedPair make(OrientedGraph graph, PermGroup group,
                           DeltaPolicy policy = DeltaPolicy::Require);

  const OrientedGraph& graph() const { return graph_; }
  const PermGroup& group() const { return group_; }
  const std::vector<std::pair<int, int>>& delta() const { return graph_.arcs(); }

  /// Same graph and group with all arcs reversed.
  OrientedPair with_reversed_delta() const;

 private:
  OrientedGraph graph_;
  PermGroup group_;
};

struct OG4Report {
  bool connected = false;
  bool quartic = false;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool delta_is_single_orbit = false;
  bool orientation_preserved = false;
  bool arc_transitive = false;
  std::size_t stabilizer_order = 0;
  int vertex_orbit_count = 0;
  int edge_orbit_count = 0;
  int arc_orbit_count = 0;

  bool member() const {
    return connected && quartic && vertex_transitive && edge_transitive &&
           delta_is_single_orbit && orientation_preserved && !arc_transitive;
  }
};

OG4Report check_og4(const OrientedPair& pair);

/// Orbit counts of the group action on edges / ordered arcs (both
/// directions of every edge). Generator action only.
int edge_orbit_count(const OrientedGraph& g, const PermGroup& group);
int arc_orbit_count(const OrientedGraph& g, const PermGroup& group);
std::vector<std::vector<std::pair<int, int>>> arc_orbits(const OrientedGraph& g,
                                                         const PermGroup& group);

/// Of the two reverse-paired arc orbits of a half-transitive action,
/// return the one containing the lexicographically least arc.
/// Throws ArcTransitive if the group has a single arc orbit.
std::vector<std::pair<int, int>> canonical_delta(const OrientedGraph& g, const PermGroup& group);

/// (out-neighbours, in-neighbours) of a vertex under the pair's arc set.
std::pair<std::vector<int>, std::vector<int>> in_out_neighbours(const OrientedPair& pair,
                                                                int vertex);

/// Graph--group pair isomorphism. Searches for a vertex bijection f that
/// is a graph isomorphism, conjugates the first group onto the second,
/// and maps the first arc set onto the second (or its reversal, unless
/// `strict_delta`). Returns the first witness found, or nothing.
std::optional<Permutation> pair_isomorphic(const OrientedPair& p1, const OrientedPair& p2,
                                           bool strict_delta = false);

}  // namespace og4
