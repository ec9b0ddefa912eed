#include "og4/metacirc.hpp"

#include <algorithm>
#include <numeric>

#include "og4/errors.hpp"
#include "og4/families.hpp"

namespace og4 {

const char* to_string(RhoQuotientStatus s) {
  switch (s) {
    case RhoQuotientStatus::NotNormal: return "not_normal";
    case RhoQuotientStatus::NormalUnorientedCycle: return "normal_unoriented_cycle";
    case RhoQuotientStatus::NormalOrientedCycle: return "normal_oriented_cycle";
    case RhoQuotientStatus::NormalNonCycle: return "normal_noncycle";
  }
  return "?";
}

namespace {

Partition cycle_partition(const Permutation& p) {
  return Partition::from_cells(p.degree(), p.cycles(true));
}

bool partition_invariant(const PermGroup& group, const Partition& cells) {
  for (const auto& g : group.generators())
    for (const auto& cell : cells.cells()) {
      const int target = cells.cell_of(g(cell.front()));
      for (int x : cell)
        if (cells.cell_of(g(x)) != target) return false;
    }
  return true;
}

}  // namespace

RhoQuotientReport rho_quotient_status(const OrientedPair& pair, const Permutation& rho) {
  if (!pair.group().contains(rho)) throw Error("rho is not an element of the group");
  RhoQuotientReport rep;
  rep.cells = cycle_partition(rho);
  rep.partition_invariant = partition_invariant(pair.group(), rep.cells);
  if (!rep.partition_invariant) {
    rep.status = RhoQuotientStatus::NotNormal;
    return rep;
  }
  PermGroup kernel = kernel_on_partition(pair.group(), rep.cells);
  // The quotient is a normal quotient iff some normal subgroup has exactly
  // these orbits; any such subgroup lies in the kernel, so the kernel's
  // orbits must be the cells, i.e. the kernel is transitive on each cell.
  rep.kernel_cell_transitive = (orbits(kernel) == rep.cells);
  rep.kernel = kernel;
  if (!rep.kernel_cell_transitive) {
    rep.status = RhoQuotientStatus::NotNormal;
    return rep;
  }
  const QuotientResult q = normal_quotient(pair, kernel);
  switch (q.kind) {
    case QuotientKind::CycleOriented:
      rep.status = RhoQuotientStatus::NormalOrientedCycle;
      rep.cycle_length = q.cycle_length;
      break;
    case QuotientKind::CycleUnoriented:
      rep.status = RhoQuotientStatus::NormalUnorientedCycle;
      rep.cycle_length = q.cycle_length;
      break;
    default:
      rep.status = RhoQuotientStatus::NormalNonCycle;
      break;
  }
  return rep;
}

MetaReport check_weak_metacirculant(const OrientedPair& pair, const Permutation& rho,
                                    const Permutation& lambda) {
  if (!pair.group().contains(rho) || !pair.group().contains(lambda))
    throw Error("rho and lambda must be elements of the group");

  MetaReport rep;
  const Partition cells = cycle_partition(rho);
  rep.m = cells.cell_count();
  rep.n = static_cast<int>(cells.cell(0).size());
  rep.rho_cycles_uniform = true;
  for (const auto& cell : cells.cells())
    if (static_cast<int>(cell.size()) != rep.n) rep.rho_cycles_uniform = false;

  // Conjugation exponent: rho^lambda = rho^e with gcd(e, n) = 1.
  if (rep.rho_cycles_uniform && rep.n >= 1) {
    const Permutation conj = rho.conjugated_by(lambda);
    for (int e = 0; e < rep.n; ++e) {
      if (std::gcd(e, rep.n) != 1 && !(e == 0 && rep.n == 1)) continue;
      if (conj == rho.power(e)) {
        rep.exponent_found = true;
        rep.r_exp = e;
        break;
      }
    }
  }

  if (rep.exponent_found) {
    // lambda then permutes the rho-cycles; <lambda> is transitive on them
    // iff the induced permutation is a single m-cycle.
    const Permutation induced = induced_on_cells(lambda, cells);
    const auto cyc = induced.cycles(true);
    rep.lambda_transitive_on_cells =
        (cyc.size() == 1 && static_cast<int>(cyc[0].size()) == rep.m);
  }

  rep.h_vertex_transitive =
      is_transitive(PermGroup::from_generators(pair.group().degree(), {rho, lambda}));

  rep.is_weak = rep.rho_cycles_uniform && rep.exponent_found && rep.lambda_transitive_on_cells;

  const Permutation lam_m = lambda.power(rep.m);
  for (int x = 0; x < lam_m.degree(); ++x)
    if (lam_m(x) == x) {
      rep.lambda_power_fixes_vertex = true;
      break;
    }
  rep.is_metacirculant = rep.is_weak && rep.lambda_power_fixes_vertex;

  rep.rho_quotient = rho_quotient_status(pair, rho).status;
  return rep;
}

std::vector<std::pair<Permutation, Permutation>> weak_metacirculant_pairs(
    const OrientedPair& pair, int min_cells) {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& rho : pair.group().elements()) {
    if (rho.is_identity()) continue;
    const auto cyc = rho.cycles(true);
    const std::size_t len = cyc[0].size();
    bool uniform = true;
    for (const auto& c : cyc)
      if (c.size() != len) uniform = false;
    if (!uniform || static_cast<int>(cyc.size()) < min_cells) continue;
    for (const auto& lambda : pair.group().elements()) {
      const MetaReport rep = check_weak_metacirculant(pair, rho, lambda);
      if (rep.is_weak) out.emplace_back(rho, lambda);
    }
  }
  return out;
}

CorollaryWmReport verify_corollary_wm(int r, int s, int line) {
  CorollaryWmReport rep;
  rep.line = line;
  auto fail = [&](const std::string& clause) -> CorollaryWmReport& {
    throw AssertionFailed("metacirculant check, line " + std::to_string(line) + ": " + clause);
  };

  OrientedPair pair;
  Permutation rho, lambda;
  int expect_m = 0, expect_n = 0;
  if (line == 1) {
    if (r % 2 == 0 && s % 2 == 0) fail("needs at least one of r, s odd");
    pair = gamma_pair(r, s, GroupVariant::G, Orientation::Con1);
    const GammaAtlas a = gamma_atlas(r, s);
    rho = a.mu;
    lambda = a.nu;
    expect_m = s;
    expect_n = r;
  } else if (line == 2) {
    if (r % 2 != 0 || s % 2 != 0) fail("needs r and s both even");
    pair = gamma_plus_pair(r, s, GroupVariant::G, Orientation::Con1);
    const GammaPlusAtlas a = gamma_plus_atlas(r, s);
    rho = a.mu2;
    lambda = a.munu;
    expect_m = s;
    expect_n = r / 2;
  } else {
    fail("unknown line");
  }

  const MetaReport meta = check_weak_metacirculant(pair, rho, lambda);
  rep.m_bar = meta.m;
  rep.n_bar = meta.n;
  if (!meta.is_weak) fail("pair is not a weak metacirculant for the stated (rho, lambda)");
  if (meta.m != expect_m || meta.n != expect_n)
    fail("expected a weak (" + std::to_string(expect_m) + ", " + std::to_string(expect_n) +
         ")-metacirculant, found (" + std::to_string(meta.m) + ", " + std::to_string(meta.n) +
         ")");
  // The premise: the rho-quotient is a cyclic oriented normal quotient.
  const RhoQuotientReport rq = rho_quotient_status(pair, rho);
  if (rq.status != RhoQuotientStatus::NormalOrientedCycle)
    fail("rho-quotient is not a normal oriented cycle");
  rep.pass = true;
  rep.detail = "weak (" + std::to_string(meta.m) + ", " + std::to_string(meta.n) +
               ")-metacirculant; rho-quotient " + to_string(rq.status);
  return rep;
}

}  // namespace og4
