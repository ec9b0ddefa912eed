#include "og4/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "og4/errors.hpp"

namespace og4 {

OrientedGraph OrientedGraph::from_arcs(int vertex_count, std::vector<std::pair<int, int>> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  OrientedGraph g;
  g.n_ = vertex_count;
  std::set<std::pair<int, int>> edge_seen;
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw Error("arc endpoint out of range");
    if (u == v) throw Error("loops are not allowed");
    if (!edge_seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw Error("duplicate edge (or both directions of one edge) in arc set");
  }
  g.arcs_ = std::move(arcs);
  g.adj_.resize(vertex_count);
  g.out_.resize(vertex_count);
  g.in_.resize(vertex_count);
  for (auto [u, v] : g.arcs_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.out_[u].push_back(v);
    g.in_[v].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  for (auto& a : g.out_) std::sort(a.begin(), a.end());
  for (auto& a : g.in_) std::sort(a.begin(), a.end());
  return g;
}

std::vector<std::pair<int, int>> OrientedGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(arcs_.size());
  for (auto [u, v] : arcs_) e.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(e.begin(), e.end());
  return e;
}

bool OrientedGraph::has_arc(int u, int v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

bool OrientedGraph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

OrientedGraph OrientedGraph::reversed() const {
  std::vector<std::pair<int, int>> rev;
  rev.reserve(arcs_.size());
  for (auto [u, v] : arcs_) rev.emplace_back(v, u);
  return from_arcs(n_, std::move(rev));
}

QuarticReport validate_quartic(const OrientedGraph& g) {
  QuarticReport r;
  r.quartic = true;
  r.in_out_balanced = true;
  if (g.vertex_count() == 0) {
    r.quartic = false;
    r.in_out_balanced = false;
    return r;
  }
  r.min_degree = g.degree(0);
  r.max_degree = g.degree(0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    r.min_degree = std::min(r.min_degree, d);
    r.max_degree = std::max(r.max_degree, d);
    if (d != 4) {
      r.quartic = false;
      r.bad_vertices.push_back(v);
    }
    if (static_cast<int>(g.out_neighbours(v).size()) != 2 ||
        static_cast<int>(g.in_neighbours(v).size()) != 2)
      r.in_out_balanced = false;
  }
  return r;
}

std::vector<std::vector<int>> connected_components(const OrientedGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int y : g.neighbours(comp[k]))
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const OrientedGraph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

BipartiteReport is_bipartite(const OrientedGraph& g) {
  BipartiteReport r;
  r.bipartite = true;
  r.side.assign(g.vertex_count(), -1);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (r.side[start] != -1) continue;
    r.side[start] = 0;
    std::deque<int> q{start};
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : g.neighbours(x)) {
        if (r.side[y] == -1) {
          r.side[y] = 1 - r.side[x];
          q.push_back(y);
        } else if (r.side[y] == r.side[x]) {
          r.bipartite = false;
          return r;
        }
      }
    }
  }
  return r;
}

InducedSubgraph induced(const OrientedGraph& g, const std::vector<int>& vertex_set) {
  if (vertex_set.empty()) throw Error("induced: vertex set is empty");
  InducedSubgraph out;
  out.to_original = vertex_set;
  std::sort(out.to_original.begin(), out.to_original.end());
  out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()),
                        out.to_original.end());
  out.from_original.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    const int v = out.to_original[i];
    if (v < 0 || v >= g.vertex_count()) throw Error("induced: vertex out of range");
    out.from_original[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.arcs())
    if (out.from_original[u] != -1 && out.from_original[v] != -1)
      arcs.emplace_back(out.from_original[u], out.from_original[v]);
  out.graph = OrientedGraph::from_arcs(static_cast<int>(out.to_original.size()), std::move(arcs));
  return out;
}

OrientedGraph standard_double_cover(const OrientedGraph& g) {
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.edges()) {
    for (int d = 0; d < 2; ++d) {
      const int a = 2 * u + d;
      const int b = 2 * v + (1 - d);
      arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return OrientedGraph::from_arcs(2 * g.vertex_count(), std::move(arcs));
}

std::string to_dot(const OrientedGraph& g, const std::vector<std::string>* labels) {
  std::ostringstream os;
  os << "graph pair {\n";
  if (labels) {
    for (int v = 0; v < g.vertex_count(); ++v)
      os << "  " << v << " [label=\"" << (*labels)[v] << "\"];\n";
  }
  auto e = g.edges();
  for (auto [u, v] : e) {
    os << "  " << u << " -- " << v
       << (g.has_arc(u, v) ? " [dir=forward];\n" : " [dir=back];\n");
  }
  os << "}\n";
  return os.str();
}

}  // namespace og4
