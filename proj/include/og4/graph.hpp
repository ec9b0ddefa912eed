#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace og4 {

/// A simple undirected graph together with an orientation overlay: every
/// edge carries exactly one ordered pair (an arc) in `arcs()`. No loops,
/// no duplicate edges, and never both directions of the same edge.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  static OrientedGraph from_arcs(int vertex_count, std::vector<std::pair<int, int>> arcs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  std::vector<std::pair<int, int>> edges() const;  // sorted (min,max) pairs

  bool has_arc(int u, int v) const;
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  const std::vector<int>& out_neighbours(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbours(int v) const { return in_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// Same graph with every arc reversed.
  OrientedGraph reversed() const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;  // sorted
  std::vector<std::vector<int>> adj_, out_, in_;
};

struct QuarticReport {
  bool quartic = false;           // every vertex has undirected degree 4
  bool in_out_balanced = false;   // every vertex has in-degree 2 and out-degree 2
  std::vector<int> bad_vertices;  // vertices with degree != 4
  int min_degree = 0;
  int max_degree = 0;
};

QuarticReport validate_quartic(const OrientedGraph& g);

bool is_connected(const OrientedGraph& g);
std::vector<std::vector<int>> connected_components(const OrientedGraph& g);

struct BipartiteReport {
  bool bipartite = false;
  std::vector<int> side;  // 0/1 per vertex; meaningful only when bipartite
};

BipartiteReport is_bipartite(const OrientedGraph& g);

struct InducedSubgraph {
  OrientedGraph graph;
  std::vector<int> to_original;    // new index -> original vertex
  std::vector<int> from_original;  // original vertex -> new index, -1 outside
};

/// Induced subgraph on a nonempty vertex set, keeping inherited arc
/// directions; vertices are renumbered by ascending original index.
InducedSubgraph induced(const OrientedGraph& g, const std::vector<int>& vertex_set);

/// Standard double cover: vertices x_d encoded as 2x+d, with an edge
/// {x_d, y_d'} iff d != d' and {x,y} is an edge. The input orientation is
/// ignored; result arcs run from the lower to the higher encoded vertex.
OrientedGraph standard_double_cover(const OrientedGraph& g);

/// Deterministic DOT serialization: edges as `--` with the orientation
/// rendered as a direction attribute.
std::string to_dot(const OrientedGraph& g, const std::vector<std::string>* labels = nullptr);

}  // namespace og4
