#pragma once

#include <vector>

#include "og4/permgroup.hpp"

namespace og4 {

/// Independent oracle for the normal-subgroup list, used only by the
/// verification harness. Builds the complete subgroup lattice bottom-up:
/// seed with every cyclic subgroup, close the set under pairwise join
/// (every subgroup is a join of the cyclic subgroups of its elements),
/// then filter for normality by conjugating whole element sets. All
/// products go through a precomputed multiplication table, so the group
/// order must stay small (the caller enforces a bound).
std::vector<PermGroup> oracle_normal_subgroups(const PermGroup& group);

/// Element-set equality of two subgroup lists (order-insensitive).
bool same_subgroup_lists(const std::vector<PermGroup>& a, const std::vector<PermGroup>& b);

}  // namespace og4
