#include <doctest.h>

#include <algorithm>

#include "og4/errors.hpp"
#include "og4/families.hpp"
#include "og4/metacirc.hpp"

using namespace og4;

TEST_CASE("the three quotient behaviours on the square torus pair") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);

  const RhoQuotientReport diag = rho_quotient_status(p, a.mu * a.nu);
  CHECK(diag.status == RhoQuotientStatus::NotNormal);
  CHECK_FALSE(diag.partition_invariant);

  const RhoQuotientReport col = rho_quotient_status(p, a.nu);
  CHECK(col.status == RhoQuotientStatus::NormalUnorientedCycle);
  CHECK(col.cycle_length == 3);

  const RhoQuotientReport row = rho_quotient_status(p, a.mu);
  CHECK(row.status == RhoQuotientStatus::NormalOrientedCycle);
  CHECK(row.cycle_length == 3);
}

TEST_CASE("weak metacirculant clauses on the square torus pair") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);

  for (auto [rho, lambda] : {std::pair{a.mu * a.nu, a.mu},
                             std::pair{a.nu, a.mu},
                             std::pair{a.mu, a.nu}}) {
    const MetaReport rep = check_weak_metacirculant(p, rho, lambda);
    CHECK(rep.is_weak);
    CHECK(rep.m == 3);
    CHECK(rep.n == 3);
    CHECK(rep.r_exp == 1);  // the translations commute
    CHECK(rep.is_metacirculant);
    CHECK(rep.h_vertex_transitive);
  }
}

TEST_CASE("non-element arguments are refused") {
  const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  const Permutation outsider = Permutation::from_cycles(9, {{0, 1}});
  CHECK_THROWS_AS(check_weak_metacirculant(p, outsider, outsider), Error);
  CHECK_THROWS_AS(rho_quotient_status(p, outsider), Error);
}

TEST_CASE("a non-regular witness pair with an inverting exponent") {
  // rho the row shift, lambda the glide: lambda inverts rho, the generated
  // subgroup is the whole group, and the rho-quotient stays oriented.
  for (int r : {3, 5}) {
    const GammaAtlas a = gamma_atlas(r, r);
    const OrientedPair p = gamma_pair(r, r, GroupVariant::G, Orientation::Con1);
    const Permutation glide = a.sigma * a.nu;
    const MetaReport rep = check_weak_metacirculant(p, a.mu, glide);
    CHECK(rep.is_weak);
    CHECK(rep.m == r);
    CHECK(rep.n == r);
    CHECK(rep.r_exp == r - 1);
    CHECK(rep.is_metacirculant);  // glide^r is the reflection, fixing a column
    const PermGroup h = PermGroup::from_generators(r * r, {a.mu, glide});
    CHECK(h.order() == p.group().order());   // not vertex-regular
    CHECK(rep.rho_quotient == RhoQuotientStatus::NormalOrientedCycle);
  }
}

TEST_CASE("metacirculant catalogue lines") {
  const CorollaryWmReport l1 = verify_corollary_wm(3, 3, 1);
  CHECK(l1.pass);
  CHECK(l1.m_bar == 3);
  CHECK(l1.n_bar == 3);

  const CorollaryWmReport l2 = verify_corollary_wm(4, 4, 2);
  CHECK(l2.pass);
  CHECK(l2.m_bar == 4);
  CHECK(l2.n_bar == 2);

  CHECK_THROWS_AS(verify_corollary_wm(4, 4, 1), AssertionFailed);
  CHECK_THROWS_AS(verify_corollary_wm(3, 3, 2), AssertionFailed);
}

TEST_CASE("brute-force search finds the canonical witnesses") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  const auto pairs = weak_metacirculant_pairs(p);
  CHECK(!pairs.empty());
  const bool has_mu_nu =
      std::any_of(pairs.begin(), pairs.end(), [&](const auto& pr) {
        return pr.first == a.mu && pr.second == a.nu;
      });
  CHECK(has_mu_nu);
  for (const auto& [rho, lambda] : pairs) {
    const MetaReport rep = check_weak_metacirculant(p, rho, lambda);
    CHECK(rep.is_weak);
    CHECK(rep.m * rep.n == 9);
  }
}
