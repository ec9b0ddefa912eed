#pragma once

#include <cstddef>
#include <memory>
#include <unordered_set>
#include <vector>

#include "og4/partition.hpp"
#include "og4/perm.hpp"

namespace og4 {

inline constexpr std::size_t kDefaultCloseCap = 2'000'000;
inline constexpr std::size_t kDefaultOrderBound = 10'000;

/// Breadth-first closure of a generating set into the full element list.
/// Generators are sorted first, so the discovery order (and hence the
/// element ordering) is fully deterministic. Throws CapExceeded when the
/// closure grows past `cap`.
std::vector<Permutation> close(int degree, std::vector<Permutation> generators,
                               std::size_t cap = kDefaultCloseCap);

/// A finitely generated permutation group with a lazily materialized full
/// element set. Values are immutable after construction; the element cache
/// is shared between copies.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(int degree);
  static PermGroup from_generators(int degree, std::vector<Permutation> generators,
                                   std::size_t cap = kDefaultCloseCap);
  /// Wrap an already-closed element list; a small generating set is derived.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const std::vector<Permutation>& elements() const;  // materializes on first use
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }
  bool same_elements(const PermGroup& other) const;
  bool is_subgroup_of(const PermGroup& other) const;

 private:
  struct Cache;
  const Cache& cache() const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::size_t cap_ = kDefaultCloseCap;
  mutable std::shared_ptr<Cache> cache_;
};

/// Orbits of the natural action on {0..degree-1}; needs only generator
/// action, never the full element set.
Partition orbits(const PermGroup& group);

bool is_transitive(const PermGroup& group);
/// Only the identity fixes a point.
bool is_semiregular(const PermGroup& group);
bool is_regular(const PermGroup& group);

/// Subgroup of all elements fixing `point`. Materializes the group.
PermGroup stabilizer(const PermGroup& group, int point);

/// True iff every conjugate of a generator of `sub` by a generator of
/// `group` lies in `sub`. `sub` must be contained in `group`.
bool is_normal(const PermGroup& sub, const PermGroup& group);

/// Smallest normal subgroup of `group` containing `seed`.
PermGroup normal_closure(const PermGroup& group, const Permutation& seed);

/// Complete list of normal subgroups, computed as the join-closure of
/// {normal_closure(g) : g in group} together with the trivial subgroup.
/// Deduplicated by element set; sorted by order, then by element list.
/// Throws BoundExceeded when |group| exceeds `order_bound`.
std::vector<PermGroup> normal_subgroups(const PermGroup& group,
                                        std::size_t order_bound = kDefaultOrderBound);

/// Subgroup of elements fixing every cell of the partition setwise.
/// Throws NotInvariant unless the group permutes the cells.
PermGroup kernel_on_partition(const PermGroup& group, const Partition& partition);

/// Subgroup generated by both groups together (re-closes the generator union).
PermGroup join(const PermGroup& a, const PermGroup& b,
               std::size_t cap = kDefaultCloseCap);

/// Element-set intersection, regenerated as a group.
PermGroup intersection(const PermGroup& a, const PermGroup& b);

/// Permutation induced on the cells of a group-invariant partition.
Permutation induced_on_cells(const Permutation& p, const Partition& partition);

}  // namespace og4
