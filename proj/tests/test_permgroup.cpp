#include <doctest.h>

#include <algorithm>
#include <set>

#include "og4/errors.hpp"
#include "og4/families.hpp"
#include "og4/permgroup.hpp"
#include "og4/subgroup_oracle.hpp"

using namespace og4;

namespace {

// Conjugation-orbit oracle for normal closures: conjugate the seed by
// every group element, then close the conjugate set.
PermGroup brute_normal_closure(const PermGroup& group, const Permutation& seed) {
  std::vector<Permutation> gens;
  for (const auto& g : group.elements()) gens.push_back(seed.conjugated_by(g));
  return PermGroup::from_generators(group.degree(), std::move(gens));
}

}  // namespace

TEST_CASE("close of the empty generating set is the identity") {
  const auto elems = close(5, {});
  REQUIRE(elems.size() == 1);
  CHECK(elems[0].is_identity());
}

TEST_CASE("close is deterministic and hits known orders") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const auto run1 = close(9, {a.mu, a.nu, a.sigma});
  const auto run2 = close(9, {a.mu, a.nu, a.sigma});
  CHECK(run1 == run2);  // identical element orderings
  CHECK(run1.size() == 18);

  const LexAtlas lx = lex_atlas(3);
  std::vector<Permutation> gens = lx.swaps;
  gens.push_back(lx.shift);
  CHECK(close(6, gens).size() == 24);  // 2^3 * 3
}

TEST_CASE("close respects the cap") {
  const GammaAtlas a = gamma_atlas(3, 3);
  CHECK_THROWS_AS(close(9, {a.mu, a.nu, a.sigma}, 10), CapExceeded);
}

TEST_CASE("orbits") {
  CHECK(orbits(PermGroup::trivial(5)).cell_count() == 5);

  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup n = PermGroup::from_generators(9, {a.nu});
  const Partition pn = orbits(n);
  REQUIRE(pn.cell_count() == 3);
  for (const auto& cell : pn.cells()) CHECK(cell.size() == 3);
  CHECK(pn.cell(0) == std::vector<int>{0, 1, 2});  // the i = 0 column

  const PermGroup m = PermGroup::from_generators(9, {a.mu});
  const Partition pm = orbits(m);
  REQUIRE(pm.cell_count() == 3);
  CHECK(pm.cell(0) == std::vector<int>{0, 3, 6});  // the j = 0 row
}

TEST_CASE("stabilizer") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup regular = PermGroup::from_generators(9, {a.mu, a.nu});
  CHECK(stabilizer(regular, 4).is_trivial());

  const PermGroup g = PermGroup::from_generators(9, {a.mu, a.nu, a.sigma});
  const PermGroup stab = stabilizer(g, 0);
  CHECK(stab.order() == 2);
  CHECK(stab.contains(a.sigma));

  const GammaPlusAtlas ap = gamma_plus_atlas(4, 4);
  const PermGroup hplus =
      PermGroup::from_generators(8, {ap.mu2, ap.sigmamunu, ap.tau});
  const PermGroup stab_h = stabilizer(hplus, 0);
  CHECK(stab_h.order() == 2);
  CHECK(stab_h.contains(ap.tau));
}

TEST_CASE("orbit-stabilizer identity over sample groups") {
  const GammaAtlas a = gamma_atlas(3, 4);
  const std::vector<PermGroup> samples = {
      PermGroup::from_generators(12, {a.mu, a.nu, a.sigma}),
      PermGroup::from_generators(12, {a.mu, a.sigma * a.nu, a.tau}),
      PermGroup::from_generators(12, {a.nu}),
  };
  for (const auto& g : samples) {
    const Partition orb = orbits(g);
    for (int x = 0; x < g.degree(); ++x)
      CHECK(orb.cell(orb.cell_of(x)).size() * stabilizer(g, x).order() == g.order());
  }
}

TEST_CASE("is_normal") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup g = PermGroup::from_generators(9, {a.mu, a.nu, a.sigma});
  CHECK(is_normal(g, g));
  CHECK(is_normal(PermGroup::from_generators(9, {a.nu}), g));
  CHECK_FALSE(is_normal(PermGroup::from_generators(9, {a.mu * a.nu}), g));
}

TEST_CASE("normal_closure against the conjugation oracle") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup g = PermGroup::from_generators(9, {a.mu, a.nu, a.sigma});

  CHECK(normal_closure(g, Permutation::identity(9)).is_trivial());

  for (const Permutation& seed : {a.nu, a.mu, a.sigma, a.mu * a.nu}) {
    const PermGroup ncl = normal_closure(g, seed);
    CHECK(ncl.same_elements(brute_normal_closure(g, seed)));
    CHECK(is_normal(ncl, g));
  }
  CHECK(normal_closure(g, a.nu).order() == 3);
  CHECK(normal_closure(g, a.mu).order() == 3);
}

TEST_CASE("normal_subgroups of a prime cyclic group") {
  const Permutation rot = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  const auto subs = normal_subgroups(PermGroup::from_generators(5, {rot}));
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].is_trivial());
  CHECK(subs[1].order() == 5);
}

TEST_CASE("normal_subgroups of gamma(3,3)/G") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup g = PermGroup::from_generators(9, {a.mu, a.nu, a.sigma});
  const auto subs = normal_subgroups(g);
  // 1, <mu>, <nu>, <mu,nu>, <mu,sigma>, G.
  CHECK(subs.size() == 6);
  auto contains = [&](const PermGroup& h) {
    return std::any_of(subs.begin(), subs.end(),
                       [&](const PermGroup& s) { return s.same_elements(h); });
  };
  CHECK(contains(PermGroup::from_generators(9, {a.nu})));
  CHECK(contains(PermGroup::from_generators(9, {a.mu})));
  CHECK(contains(PermGroup::from_generators(9, {a.mu, a.sigma})));
  for (const auto& s : subs) CHECK(is_normal(s, g));
}

TEST_CASE("normal_subgroups of the blown-up cycle contain the fibre subgroups") {
  const OrientedPair pair = lex_cycle_pair(5);
  const auto subs = normal_subgroups(pair.group());
  const LexAtlas a = lex_atlas(5);
  const PermGroup base = PermGroup::from_generators(10, a.swaps);
  bool has_base = false, has_full = false;
  for (const auto& s : subs) {
    if (s.same_elements(base)) has_base = true;
    if (s.order() == pair.group().order()) has_full = true;
  }
  CHECK(has_base);
  CHECK(has_full);
  CHECK(base.order() == 32);
}

TEST_CASE("normal_subgroups bound") {
  const OrientedPair pair = lex_cycle_pair(5);  // order 160
  CHECK_THROWS_AS(normal_subgroups(pair.group(), 100), BoundExceeded);
}

TEST_CASE("normal_subgroups agrees with the lattice oracle on small groups") {
  const GammaAtlas a33 = gamma_atlas(3, 3);
  const GammaAtlas a34 = gamma_atlas(3, 4);
  const std::vector<PermGroup> samples = {
      PermGroup::from_generators(9, {a33.mu, a33.nu, a33.sigma}),
      PermGroup::from_generators(12, {a34.mu, a34.sigma * a34.nu, a34.tau}),
      PermGroup::from_generators(12, {a34.mu, a34.nu}),
  };
  for (const auto& g : samples)
    CHECK(same_subgroup_lists(normal_subgroups(g), oracle_normal_subgroups(g)));
}

TEST_CASE("kernel_on_partition") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup g = PermGroup::from_generators(9, {a.mu, a.nu, a.sigma});

  CHECK(kernel_on_partition(g, Partition::singletons(9)).is_trivial());

  const Partition rows = orbits(PermGroup::from_generators(9, {a.mu}));
  const PermGroup mtilde = kernel_on_partition(g, rows);
  CHECK(mtilde.order() == 6);
  CHECK(mtilde.same_elements(PermGroup::from_generators(9, {a.mu, a.sigma})));

  const Partition cols = orbits(PermGroup::from_generators(9, {a.nu}));
  CHECK(kernel_on_partition(g, cols).same_elements(PermGroup::from_generators(9, {a.nu})));

  // Diagonal cells are not invariant under sigma.
  const Partition diag = orbits(PermGroup::from_generators(9, {a.mu * a.nu}));
  CHECK_THROWS_AS(kernel_on_partition(g, diag), NotInvariant);
}

TEST_CASE("kernel contains the normal subgroup defining the partition") {
  const GammaAtlas a = gamma_atlas(3, 4);
  const PermGroup g = PermGroup::from_generators(12, {a.mu, a.nu, a.sigma});
  for (const auto& n : normal_subgroups(g)) {
    if (orbits(n).cell_count() == 1) continue;
    const PermGroup kernel = kernel_on_partition(g, orbits(n));
    for (const auto& e : n.elements()) CHECK(kernel.contains(e));
    CHECK(is_normal(kernel, g));
  }
}

TEST_CASE("semiregularity and regularity") {
  const GammaAtlas a = gamma_atlas(3, 3);
  CHECK(is_semiregular(PermGroup::trivial(9)));
  CHECK(is_semiregular(PermGroup::from_generators(9, {a.nu})));
  CHECK_FALSE(is_semiregular(PermGroup::from_generators(9, {a.mu, a.nu, a.sigma})));
  CHECK(is_regular(PermGroup::from_generators(9, {a.mu, a.nu})));
}

TEST_CASE("join and intersection") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup m = PermGroup::from_generators(9, {a.mu});
  const PermGroup n = PermGroup::from_generators(9, {a.nu});
  CHECK(join(m, n).order() == 9);
  CHECK(intersection(m, n).is_trivial());
  const PermGroup mt = PermGroup::from_generators(9, {a.mu, a.sigma});
  CHECK(intersection(join(m, n), mt).same_elements(m));
}

TEST_CASE("from_elements round-trips element sets") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup g = PermGroup::from_generators(9, {a.mu, a.sigma});
  const PermGroup rebuilt = PermGroup::from_elements(9, g.elements());
  CHECK(rebuilt.same_elements(g));
  CHECK(rebuilt.generators().size() <= 2);
  std::vector<Permutation> not_closed = {a.mu};
  CHECK_THROWS_AS(PermGroup::from_elements(9, not_closed), Error);
}
