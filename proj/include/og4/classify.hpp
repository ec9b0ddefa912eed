#pragma once

#include <optional>
#include <string>
#include <vector>

#include "og4/families.hpp"
#include "og4/ogpair.hpp"
#include "og4/quotient.hpp"

namespace og4 {

/// One unordered pair of independent cyclic normal quotients, stored with
/// the full kernels. Normalized so the unoriented quotient comes first;
/// when both are unoriented the shorter one comes first.
struct IndependentPair {
  PermGroup kernel_n;
  PermGroup kernel_m;
  int r = 0;
  int s = 0;
  bool n_oriented = false;
  bool m_oriented = false;
  /// Catalogue line this pair's parameters and orientation pattern point
  /// at (before any reduction), 0 if none fits.
  int line_hint = 0;
};

/// All independent pairs among the cyclic normal quotients, after
/// replacing every subgroup by the full kernel of its orbit partition.
std::vector<IndependentPair> find_independent_quotients(
    const OrientedPair& pair, std::size_t order_bound = kDefaultOrderBound);

struct BaseReduction {
  PermGroup meet;        // kernel intersection the pair is reduced by
  OrientedPair base;     // quotient pair (a cover of it was given)
  PermGroup n_bar;       // image of N on the base
  PermGroup m_bar;       // image of M on the base
};

/// Reduce modulo the meet of the two kernels. The quotient must keep full
/// valency (NotACover otherwise); the images of N and M intersect
/// trivially on the base.
BaseReduction reduce_to_base(const OrientedPair& pair, const PermGroup& n, const PermGroup& m);

/// Which catalogue line the parameters and orientation pattern select:
///   1: gamma/G, second quotient oriented, at least one parameter odd
///   2: gamma-plus/G, oriented, both even
///   3: gamma/H, both unoriented, first odd second even
///   4: same construction as 3 with the parameters transposed
///   5: gamma-plus/H, both unoriented, both even
///   6: double cover, both unoriented, both odd
/// Returns 0 when nothing fits.
int table_line_for(int r, int s, bool n_oriented, bool m_oriented);

/// Reference pair for a catalogue line at parameters (r, s).
OrientedPair reference_pair(int line, int r, int s);
FamilySpec reference_spec(int line, int r, int s);

struct ClassificationReport {
  std::vector<IndependentPair> found;
  BaseReduction reduction;
  int table_line = 0;       // 1..6; the lines-3/4 family reports as 3
  bool params_swapped = false;  // canonical order had the even parameter first
  int r = 0;
  int s = 0;
  std::size_t stabilizer_order = 0;
  Permutation witness;      // pair isomorphism from the base to the reference
  FamilySpec reference;
};

/// Classify one specific independent quotient pair: reduce to the base,
/// select the catalogue line, and confirm with a pair isomorphism onto
/// the reference construction. A pair can match several lines through
/// different quotient pairs; this pins down the line for the given one.
ClassificationReport classify_entry(const OrientedPair& pair, const IndependentPair& entry,
                                    bool strict_delta = false);

/// The full pipeline: find independent cyclic normal quotients, classify
/// the canonical (lexicographically least) pair, and attach the whole
/// list. Throws NoMatch when the pair has no independent quotients, no
/// line fits, or no witness exists.
ClassificationReport classify_independent(const OrientedPair& pair,
                                          std::size_t order_bound = kDefaultOrderBound,
                                          bool strict_delta = false);

}  // namespace og4
