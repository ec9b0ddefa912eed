#pragma once

#include <optional>
#include <string>
#include <vector>

#include "og4/ogpair.hpp"

namespace og4 {

enum class Family { LexCycle, Gamma, GammaPlus, GammaDouble };
enum class GroupVariant { G, H };
enum class Orientation { Con1, Con2c, Con2a };

std::string to_string(Family f);
std::string to_string(GroupVariant v);
std::string to_string(Orientation o);
Family family_from_string(const std::string& s);
GroupVariant variant_from_string(const std::string& s);
Orientation orientation_from_string(const std::string& s);

struct FamilySpec {
  Family family = Family::Gamma;
  int r = 0;
  int s = 0;
  GroupVariant variant = GroupVariant::G;
  Orientation orientation = Orientation::Con1;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// The blown-up cycle: each vertex of an r-cycle replaced by two
/// independent vertices, complete joins along cycle edges, all edges
/// oriented in the direction of increasing cycle position. The group is
/// generated by the r per-position swaps and the rotation.
OrientedPair lex_cycle_pair(int r);

/// The torus-like family on Z_r x Z_s with (i,j) adjacent to the four
/// vertices (i+-1, j+-1), carrying the requested group and orientation.
OrientedPair gamma_pair(int r, int s, GroupVariant variant, Orientation orientation);

/// Induced pair on the same-parity vertex class (r, s both even).
OrientedPair gamma_plus_pair(int r, int s, GroupVariant variant, Orientation orientation);

/// The standard double cover of the torus-like graph with its alternating
/// orientation and the extended group (connected only for r, s both odd).
OrientedPair double_cover_pair(int r, int s, bool force_even = false);

/// A Cayley graph pair: vertices are the elements of `k` (in element
/// order), edges {x, s*x} for s in the inverse-closed connection set, the
/// group generated by right translations plus the supplied vertex
/// permutations stabilizing the identity, and the canonical orientation.
OrientedPair cayley_pair(const PermGroup& k, const std::vector<Permutation>& connection,
                         const std::vector<Permutation>& stabilizer_gens);

OrientedPair build(const FamilySpec& spec);

/// Human-readable coordinate labels for a family's vertex numbering.
std::vector<std::string> vertex_labels(const FamilySpec& spec);

// Named vertex maps and generators, for building subgroups in analyses.

struct GammaAtlas {
  int r = 0, s = 0;
  Permutation mu, nu, sigma, tau;
  int vertex(int i, int j) const;
};
GammaAtlas gamma_atlas(int r, int s);
OrientedGraph gamma_graph(int r, int s, Orientation orientation = Orientation::Con1);

struct GammaPlusAtlas {
  int r = 0, s = 0;
  Permutation mu2, munu, sigma, sigmamunu, tau;  // restricted to the parity class
  std::vector<int> to_original, from_original;
  /// Restrict a parity-preserving permutation of the full vertex set.
  Permutation restrict(const Permutation& p) const;
  int vertex(int i, int j) const;  // throws unless i, j share parity
};
GammaPlusAtlas gamma_plus_atlas(int r, int s);

struct DoubleAtlas {
  int r = 0, s = 0;
  Permutation mu, nu, sigma, tau;
  int vertex(int i, int j, int delta) const;
};
DoubleAtlas double_atlas(int r, int s);

struct LexAtlas {
  int r = 0;
  std::vector<Permutation> swaps;  // per-position fibre swaps
  Permutation shift;
  int vertex(int i, int j) const;
};
LexAtlas lex_atlas(int r);

}  // namespace og4
