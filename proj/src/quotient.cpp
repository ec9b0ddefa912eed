#include "og4/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "og4/errors.hpp"

namespace og4 {

const char* to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::Cover: return "cover";
    case QuotientKind::K1: return "K1";
    case QuotientKind::K2: return "K2";
    case QuotientKind::CycleOriented: return "oriented cycle";
    case QuotientKind::CycleUnoriented: return "unoriented cycle";
  }
  return "?";
}

namespace {

void check_partition_invariant(const OrientedPair& pair, const Partition& partition) {
  if (partition.point_count() != pair.graph().vertex_count())
    throw DegreeMismatch("partition does not match the vertex set");
  for (const auto& g : pair.group().generators()) {
    for (const auto& cell : partition.cells()) {
      const int target = partition.cell_of(g(cell.front()));
      for (int x : cell)
        if (partition.cell_of(g(x)) != target)
          throw NotInvariant("partition is not invariant under the group");
    }
  }
}

struct CellStructure {
  int m = 0;
  bool in_cell_edges = false;
  // Per ordered adjacent pair (B,C): neighbour count of each vertex of B in C.
  std::map<std::pair<int, int>, std::vector<int>> counts;
  std::vector<std::set<int>> adjacent;     // undirected cell adjacency
  std::vector<std::set<int>> out_targets;  // cells receiving out-arcs per cell
};

CellStructure cell_structure(const OrientedGraph& g, const Partition& p) {
  CellStructure cs;
  cs.m = p.cell_count();
  cs.adjacent.resize(cs.m);
  cs.out_targets.resize(cs.m);
  for (auto [u, v] : g.arcs()) {
    const int cu = p.cell_of(u), cv = p.cell_of(v);
    if (cu == cv) {
      cs.in_cell_edges = true;
      continue;
    }
    cs.adjacent[cu].insert(cv);
    cs.adjacent[cv].insert(cu);
    cs.out_targets[cu].insert(cv);
  }
  for (int c = 0; c < cs.m; ++c)
    for (int d : cs.adjacent[c])
      cs.counts[{c, d}].assign(p.cell(c).size(), 0);
  for (auto [u, v] : g.arcs()) {
    const int cu = p.cell_of(u), cv = p.cell_of(v);
    if (cu == cv) continue;
    auto pos = [&](int cell, int x) {
      const auto& vec = p.cell(cell);
      return std::lower_bound(vec.begin(), vec.end(), x) - vec.begin();
    };
    cs.counts[{cu, cv}][pos(cu, u)]++;
    cs.counts[{cv, cu}][pos(cv, v)]++;
  }
  return cs;
}

int constant_ell(const CellStructure& cs) {
  int ell = -1;
  for (const auto& [key, counts] : cs.counts) {
    for (int c : counts) {
      if (ell == -1) ell = c;
      if (c != ell)
        throw InconsistentEll("per-cell neighbour multiplicity is not constant");
    }
  }
  return ell == -1 ? 0 : ell;
}

}  // namespace

int ell_constant(const OrientedPair& pair, const Partition& partition) {
  check_partition_invariant(pair, partition);
  const CellStructure cs = cell_structure(pair.graph(), partition);
  if (cs.in_cell_edges && cs.m > 1)
    throw InconsistentEll("edges inside a cell of a proper quotient partition");
  const int ell = constant_ell(cs);
  return cs.m == 1 ? 0 : ell;
}

QuotientShape quotient_shape(const OrientedPair& pair, const Partition& partition) {
  check_partition_invariant(pair, partition);
  const CellStructure cs = cell_structure(pair.graph(), partition);

  QuotientShape shape;
  if (cs.m == 1) {
    shape.kind = QuotientKind::K1;
    shape.ell = 0;
    return shape;
  }
  if (cs.in_cell_edges)
    throw InconsistentEll("edges inside a cell of a proper quotient partition");
  shape.ell = constant_ell(cs);
  if (cs.m == 2) {
    shape.kind = QuotientKind::K2;
    return shape;
  }

  std::size_t valency = cs.adjacent[0].size();
  for (int c = 0; c < cs.m; ++c)
    if (cs.adjacent[c].size() != valency)
      throw TheoremViolation("quotient cell valency is not constant");

  if (valency == 4) {
    shape.kind = QuotientKind::Cover;
    return shape;
  }
  if (valency != 2) throw TheoremViolation("quotient valency is neither 2 nor 4");

  shape.cycle_length = cs.m;
  std::size_t targets = cs.out_targets[0].size();
  for (int c = 0; c < cs.m; ++c)
    if (cs.out_targets[c].size() != targets)
      throw TheoremViolation("quotient orientation pattern is not uniform over cells");
  shape.kind = (targets == 1) ? QuotientKind::CycleOriented : QuotientKind::CycleUnoriented;
  return shape;
}

namespace {

OrientedPair build_cover_pair(const OrientedPair& pair, const Partition& p) {
  // For a cover every adjacent cell pair carries arcs in one direction only.
  std::set<std::pair<int, int>> cell_arcs;
  for (auto [u, v] : pair.graph().arcs())
    cell_arcs.insert({p.cell_of(u), p.cell_of(v)});
  for (auto [a, b] : cell_arcs)
    if (cell_arcs.count({b, a}))
      throw TheoremViolation("cover quotient edge carries both orientations");
  OrientedGraph qg = OrientedGraph::from_arcs(
      p.cell_count(), std::vector<std::pair<int, int>>(cell_arcs.begin(), cell_arcs.end()));
  std::vector<Permutation> gens;
  for (const auto& g : pair.group().generators()) gens.push_back(induced_on_cells(g, p));
  return OrientedPair::make(std::move(qg), PermGroup::from_generators(p.cell_count(), gens));
}

}  // namespace

QuotientResult normal_quotient(const OrientedPair& pair, const PermGroup& n) {
  if (!is_normal(n, pair.group())) throw NotNormal("quotient subgroup is not normal");
  const Partition p = orbits(n);
  const QuotientShape shape = quotient_shape(pair, p);

  QuotientResult res;
  res.kind = shape.kind;
  res.cycle_length = shape.cycle_length;
  res.ell = shape.ell;
  res.orbit_partition = p;
  res.kernel = kernel_on_partition(pair.group(), p);

  // Cross-check the arc-based orientedness decision against the kernel.
  switch (res.kind) {
    case QuotientKind::CycleUnoriented:
      if (!res.kernel.same_elements(n) || !is_semiregular(res.kernel))
        throw TheoremViolation(
            "unoriented cycle quotient whose kernel is not the semiregular acting subgroup");
      break;
    case QuotientKind::CycleOriented: {
      const PermGroup stab = stabilizer(pair.group(), 0);
      for (const auto& e : stab.elements())
        if (!res.kernel.contains(e))
          throw TheoremViolation(
              "oriented cycle quotient whose kernel misses a vertex stabilizer");
      break;
    }
    case QuotientKind::Cover:
      if (res.ell != 1 || !res.kernel.same_elements(n))
        throw TheoremViolation("cover quotient without semiregular kernel equal to N");
      res.cover_pair = build_cover_pair(pair, p);
      break;
    default:
      break;
  }
  return res;
}

std::vector<CensusRow> cyclic_quotient_census(const OrientedPair& pair,
                                              std::size_t order_bound) {
  const auto subgroups = normal_subgroups(pair.group(), order_bound);
  std::vector<CensusRow> rows;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const QuotientResult q = normal_quotient(pair, subgroups[i]);
    if (!q.is_cycle()) continue;
    CensusRow row;
    row.subgroup = subgroups[i];
    row.subgroup_id = static_cast<int>(i);
    row.length = q.cycle_length;
    row.oriented = (q.kind == QuotientKind::CycleOriented);
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    row.maximal = true;
    for (const auto& other : rows) {
      if (other.length <= row.length) continue;
      if (other.subgroup.order() < row.subgroup.order() &&
          other.subgroup.is_subgroup_of(row.subgroup)) {
        row.maximal = false;
        break;
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.subgroup.order() != b.subgroup.order()) return a.subgroup.order() < b.subgroup.order();
    return a.subgroup_id < b.subgroup_id;
  });
  return rows;
}

IndependenceResult independent(const OrientedPair& pair, const PermGroup& n,
                               const PermGroup& m) {
  const QuotientResult qn = normal_quotient(pair, n);
  const QuotientResult qm = normal_quotient(pair, m);
  if (!qn.is_cycle() || !qm.is_cycle())
    throw Error("independence is defined for two cycle quotients");
  IndependenceResult res;
  res.kernel_n = qn.kernel;
  res.kernel_m = qm.kernel;
  res.meet = intersection(res.kernel_n, res.kernel_m);
  const QuotientResult qk = normal_quotient(pair, res.meet);
  res.joint_kind = qk.kind;
  res.joint_length = qk.cycle_length;
  res.independent = !qk.is_cycle();
  return res;
}

std::vector<int> canonical_cycle_positions(const OrientedGraph& cycle) {
  const int m = cycle.vertex_count();
  if (m < 3) throw Error("cycle has fewer than 3 vertices");
  for (int v = 0; v < m; ++v)
    if (cycle.degree(v) != 2) throw Error("graph is not a cycle");
  std::vector<int> pos(m, -1);
  int prev = 0;
  int cur = std::min(cycle.neighbours(0)[0], cycle.neighbours(0)[1]);
  pos[0] = 0;
  for (int step = 1; step < m; ++step) {
    if (pos[cur] != -1) throw Error("graph is not a single cycle");
    pos[cur] = step;
    const auto& nb = cycle.neighbours(cur);
    const int next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (cur != 0) throw Error("graph is not a single cycle");
  return pos;
}

CycleSymmetry cycle_symmetry(const Permutation& p, const OrientedGraph& cycle) {
  if (p.degree() != cycle.vertex_count())
    throw DegreeMismatch("permutation degree does not match the cycle");
  for (auto [u, v] : cycle.edges())
    if (!cycle.has_edge(p(u), p(v)))
      throw NotAutomorphism("permutation does not preserve the cycle adjacency");

  const std::vector<int> pos = canonical_cycle_positions(cycle);
  const int m = cycle.vertex_count();
  std::vector<int> vertex_at(m);
  for (int v = 0; v < m; ++v) vertex_at[pos[v]] = v;

  const int k = pos[p(vertex_at[0])];
  const int at1 = pos[p(vertex_at[1])];

  CycleSymmetry sym;
  sym.length = m;
  if (at1 == (k + 1) % m) {
    sym.kind = CycleSymmetry::Rotation;
    sym.shift = k;
    for (int i = 0; i < m; ++i)
      if (pos[p(vertex_at[i])] != (k + i) % m)
        throw NotAutomorphism("permutation is not a cycle symmetry");
  } else {
    sym.kind = CycleSymmetry::Reflection;
    sym.shift = k;
    for (int i = 0; i < m; ++i)
      if (pos[p(vertex_at[i])] != ((k - i) % m + m) % m)
        throw NotAutomorphism("permutation is not a cycle symmetry");
  }
  return sym;
}

ActionSignature quotient_action_signature(const OrientedPair& pair, const PermGroup& n,
                                          const PermGroup& m) {
  const QuotientResult qn = normal_quotient(pair, n);
  const QuotientResult qm = normal_quotient(pair, m);
  if (!qn.is_cycle() || !qm.is_cycle())
    throw NotKernel("both quotients must be cycles");
  if (!qn.kernel.same_elements(n) || !qm.kernel.same_elements(m))
    throw NotKernel("subgroups must be the full kernels of their orbit partitions");

  // Rebuild the quotient cycles as plain graphs on the cells.
  auto cell_cycle = [&](const Partition& p) {
    std::set<std::pair<int, int>> arcs;
    for (auto [u, v] : pair.graph().arcs()) {
      int a = p.cell_of(u), b = p.cell_of(v);
      if (a != b) arcs.insert({std::min(a, b), std::max(a, b)});
    }
    return OrientedGraph::from_arcs(p.cell_count(),
                                    std::vector<std::pair<int, int>>(arcs.begin(), arcs.end()));
  };
  const OrientedGraph cyc_n = cell_cycle(qn.orbit_partition);
  const OrientedGraph cyc_m = cell_cycle(qm.orbit_partition);

  ActionSignature sig;
  sig.r = qn.cycle_length;
  sig.s = qm.cycle_length;
  sig.m_quotient_oriented = (qm.kind == QuotientKind::CycleOriented);

  std::set<std::pair<CycleSymmetry, CycleSymmetry>> image_set;
  std::set<CycleSymmetry> proj1, proj2;
  for (const auto& g : pair.group().elements()) {
    const CycleSymmetry s1 = cycle_symmetry(induced_on_cells(g, qn.orbit_partition), cyc_n);
    const CycleSymmetry s2 = cycle_symmetry(induced_on_cells(g, qm.orbit_partition), cyc_m);
    sig.images.emplace_back(s1, s2);
    image_set.insert({s1, s2});
    proj1.insert(s1);
    proj2.insert(s2);
  }
  sig.injective = (image_set.size() == pair.group().order());
  sig.proj1_image_order = proj1.size();
  sig.proj2_image_order = proj2.size();
  sig.proj1_full_dihedral = (proj1.size() == static_cast<std::size_t>(2 * sig.r));
  if (sig.m_quotient_oriented) {
    bool all_rotations = true;
    for (const auto& s : proj2)
      if (s.kind != CycleSymmetry::Rotation) all_rotations = false;
    sig.proj2_matches_expected =
        all_rotations && proj2.size() == static_cast<std::size_t>(sig.s);
  } else {
    sig.proj2_matches_expected = proj2.size() == static_cast<std::size_t>(2 * sig.s);
  }
  return sig;
}

}  // namespace og4
