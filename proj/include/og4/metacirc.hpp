#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "og4/ogpair.hpp"
#include "og4/partition.hpp"
#include "og4/quotient.hpp"

namespace og4 {

enum class RhoQuotientStatus {
  NotNormal,
  NormalUnorientedCycle,
  NormalOrientedCycle,
  NormalNonCycle,
};

const char* to_string(RhoQuotientStatus s);

struct RhoQuotientReport {
  RhoQuotientStatus status;
  int cycle_length = 0;
  Partition cells;              // cycle partition of rho
  bool partition_invariant = false;
  bool kernel_cell_transitive = false;
  std::optional<PermGroup> kernel;  // set when the partition is invariant
};

/// Status of the quotient modulo the cycles of rho: it is a normal
/// quotient of the pair exactly when the cycle partition is invariant
/// under the full group and the kernel on the cells is transitive on each
/// cell; in that case the quotient shape and orientedness are classified.
RhoQuotientReport rho_quotient_status(const OrientedPair& pair, const Permutation& rho);

struct MetaReport {
  bool is_weak = false;          // all clauses hold
  int m = 0;                     // number of rho-cycles
  int n = 0;                     // common rho-cycle length
  int r_exp = 0;                 // conjugation exponent: rho^lambda = rho^r_exp
  bool is_metacirculant = false; // weak and lambda^m fixes a vertex

  bool rho_cycles_uniform = false;      // rho is semiregular with m cycles of length n
  bool exponent_found = false;          // some r_exp coprime to n works
  bool lambda_transitive_on_cells = false;
  bool h_vertex_transitive = false;     // <rho, lambda> transitive on vertices
  bool lambda_power_fixes_vertex = false;

  RhoQuotientStatus rho_quotient = RhoQuotientStatus::NotNormal;
};

/// Check every clause of the weak metacirculant definition for the given
/// automorphisms; the report carries individual clause outcomes.
MetaReport check_weak_metacirculant(const OrientedPair& pair, const Permutation& rho,
                                    const Permutation& lambda);

/// Brute-force search for all (rho, lambda) element pairs of the group
/// making the graph a weak metacirculant with at least `min_cells` cycles.
std::vector<std::pair<Permutation, Permutation>> weak_metacirculant_pairs(
    const OrientedPair& pair, int min_cells = 3);

struct CorollaryWmReport {
  int line = 0;
  int m_bar = 0;
  int n_bar = 0;
  bool pass = false;
  std::string detail;
};

/// Check the reduced-pair statement for the two metacirculant catalogue
/// lines: line 1 builds gamma(r,s)/G with (rho, lambda) = (mu, nu) and
/// expects a weak (s, r)-metacirculant; line 2 builds gamma-plus(r,s)/G
/// with (mu^2, mu*nu) and expects a weak (s, r/2)-metacirculant. Also
/// requires the rho-quotient to be a normal oriented cycle.
/// Throws AssertionFailed with the violated clause.
CorollaryWmReport verify_corollary_wm(int r, int s, int line);

}  // namespace og4
