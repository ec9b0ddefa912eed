#pragma once

#include <optional>
#include <vector>

#include "og4/ogpair.hpp"
#include "og4/partition.hpp"
#include "og4/permgroup.hpp"

namespace og4 {

enum class QuotientKind { Cover, K1, K2, CycleOriented, CycleUnoriented };

const char* to_string(QuotientKind k);

inline bool is_cycle_kind(QuotientKind k) {
  return k == QuotientKind::CycleOriented || k == QuotientKind::CycleUnoriented;
}

/// Shape of the quotient modulo a partition: degenerate cases, cycles with
/// their orientedness, or a full-valency cover, plus the constant edge
/// multiplicity between adjacent cells. No group-theoretic checks.
struct QuotientShape {
  QuotientKind kind;
  int cycle_length = 0;  // set for cycle kinds
  int ell = 0;           // 0 for K1
};

/// Classify the quotient modulo a group-invariant partition. Validates
/// partition invariance (NotInvariant) and multiplicity constancy
/// (InconsistentEll) but never materializes the group.
QuotientShape quotient_shape(const OrientedPair& pair, const Partition& partition);

struct QuotientResult {
  QuotientKind kind;
  int cycle_length = 0;
  int ell = 0;
  PermGroup kernel;          // all elements fixing each cell setwise
  Partition orbit_partition;
  std::optional<OrientedPair> cover_pair;  // set when kind == Cover

  bool is_cycle() const { return is_cycle_kind(kind); }
};

/// The normal quotient of the pair by a normal subgroup N: vertices are
/// the N-orbits, adjacent when joined by at least one edge. Verifies
/// normality, computes the kernel, and cross-checks the orientedness
/// decision against the kernel criteria (semiregular kernel equal to N
/// for unoriented cycles, kernel containing a vertex stabilizer for
/// oriented ones); disagreement is a hard error.
QuotientResult normal_quotient(const OrientedPair& pair, const PermGroup& n);

/// The constant number of neighbours every vertex of a cell has in an
/// adjacent cell. Throws InconsistentEll if any vertex deviates.
int ell_constant(const OrientedPair& pair, const Partition& partition);

struct CensusRow {
  PermGroup subgroup;
  int subgroup_id = 0;  // index into the canonical normal-subgroup list
  int length = 0;
  bool oriented = false;
  bool maximal = false;
};

/// All normal subgroups with cycle quotients (length >= 3), sorted by
/// length descending. A row is maximal when no listed subgroup properly
/// contained in it yields a longer cycle.
std::vector<CensusRow> cyclic_quotient_census(const OrientedPair& pair,
                                              std::size_t order_bound = kDefaultOrderBound);

struct IndependenceResult {
  bool independent = false;
  QuotientKind joint_kind;   // kind of the quotient by the kernel meet
  int joint_length = 0;      // cycle length of that quotient, when a cycle
  PermGroup kernel_n;        // elements fixing each N-orbit setwise
  PermGroup kernel_m;
  PermGroup meet;            // kernel_n intersect kernel_m
};

/// Two cycle quotients are independent when the quotient modulo the meet
/// of their kernels is not a cycle.
IndependenceResult independent(const OrientedPair& pair, const PermGroup& n, const PermGroup& m);

/// A symmetry of an m-cycle in its canonical labelling: Rotation moves
/// position i to i+shift, Reflection moves position i to shift-i (mod m).
struct CycleSymmetry {
  enum Kind { Rotation, Reflection } kind;
  int shift = 0;
  int length = 0;

  friend bool operator==(const CycleSymmetry&, const CycleSymmetry&) = default;
  friend auto operator<=>(const CycleSymmetry&, const CycleSymmetry&) = default;
};

/// Positions of the cycle's vertices in the canonical labelling: start at
/// vertex 0, walk first towards its smaller-indexed neighbour.
std::vector<int> canonical_cycle_positions(const OrientedGraph& cycle);

/// Decompose an adjacency-preserving permutation of a cycle's vertices as
/// a rotation or reflection in the canonical labelling.
CycleSymmetry cycle_symmetry(const Permutation& p, const OrientedGraph& cycle);

struct ActionSignature {
  std::vector<std::pair<CycleSymmetry, CycleSymmetry>> images;  // aligned with group elements
  bool injective = false;
  int r = 0;  // length of the first cycle quotient
  int s = 0;
  bool m_quotient_oriented = false;
  std::size_t proj1_image_order = 0;
  std::size_t proj2_image_order = 0;
  bool proj1_full_dihedral = false;   // image order 2r
  bool proj2_matches_expected = false;  // rotations only of order s, or full 2s
};

/// The map g -> (action on the N-cycle, action on the M-cycle), with
/// injectivity and projection-image diagnostics. Requires both quotients
/// to be cycles and N, M to be the full kernels of their partitions.
ActionSignature quotient_action_signature(const OrientedPair& pair, const PermGroup& n,
                                          const PermGroup& m);

}  // namespace og4
