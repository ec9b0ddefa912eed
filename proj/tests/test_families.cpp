#include <doctest.h>

#include <unordered_map>

#include "og4/errors.hpp"
#include "og4/families.hpp"
#include "og4/quotient.hpp"

using namespace og4;

TEST_CASE("blown-up cycle") {
  const OrientedPair p = lex_cycle_pair(3);
  CHECK(p.graph().vertex_count() == 6);
  CHECK(p.group().order() == 24);  // 2^3 * 3
  CHECK(check_og4(p).member());
  CHECK_THROWS_AS(lex_cycle_pair(2), BadParam);
}

TEST_CASE("blown-up cycle quotient by the fibre group is an oriented cycle") {
  const OrientedPair p = lex_cycle_pair(5);
  const LexAtlas a = lex_atlas(5);
  const QuotientResult q =
      normal_quotient(p, PermGroup::from_generators(10, a.swaps));
  CHECK(q.kind == QuotientKind::CycleOriented);
  CHECK(q.cycle_length == 5);
}

TEST_CASE("torus family constructors") {
  const OrientedPair g33 = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
  CHECK(g33.graph().vertex_count() == 9);
  CHECK(g33.group().order() == 18);
  CHECK(check_og4(g33).member());

  const OrientedPair h34 = gamma_pair(3, 4, GroupVariant::H, Orientation::Con2c);
  CHECK(check_og4(h34).member());
  const GammaAtlas a34 = gamma_atlas(3, 4);
  const QuotientResult qn = normal_quotient(
      h34, PermGroup::from_generators(12, {a34.nu * a34.nu, a34.tau * a34.sigma * a34.nu}));
  CHECK(qn.kind == QuotientKind::CycleUnoriented);
  CHECK(qn.cycle_length == 3);
  const QuotientResult qm =
      normal_quotient(h34, PermGroup::from_generators(12, {a34.mu}));
  CHECK(qm.kind == QuotientKind::CycleUnoriented);
  CHECK(qm.cycle_length == 4);

  CHECK_THROWS_AS(gamma_pair(4, 4, GroupVariant::G, Orientation::Con1), Disconnected);
  CHECK_THROWS_AS(gamma_pair(3, 3, GroupVariant::H, Orientation::Con2c), BadParam);
  CHECK_THROWS_AS(gamma_pair(4, 4, GroupVariant::H, Orientation::Con2c), BadParam);
  CHECK_THROWS_AS(gamma_pair(2, 5, GroupVariant::G, Orientation::Con1), BadParam);
}

TEST_CASE("parity-class family constructors") {
  const OrientedPair g44 = gamma_plus_pair(4, 4, GroupVariant::G, Orientation::Con1);
  CHECK(g44.graph().vertex_count() == 8);
  CHECK(g44.group().order() == 16);
  CHECK(check_og4(g44).member());

  const OrientedPair h44 = gamma_plus_pair(4, 4, GroupVariant::H, Orientation::Con2c);
  CHECK(check_og4(h44).member());
  const GammaPlusAtlas ap = gamma_plus_atlas(4, 4);
  for (const Permutation& sub_gen : {ap.restrict(gamma_atlas(4, 4).nu.power(2)),
                                     ap.restrict(gamma_atlas(4, 4).mu.power(2))}) {
    const QuotientResult q =
        normal_quotient(h44, PermGroup::from_generators(8, {sub_gen}));
    CHECK(q.kind == QuotientKind::CycleUnoriented);
    CHECK(q.cycle_length == 4);
  }

  CHECK_THROWS_AS(gamma_plus_pair(3, 4, GroupVariant::G, Orientation::Con1), BadParam);

  // The H-variant over the uniform orientation reverses arcs: it stays
  // constructible but is reported outside the family.
  const OrientedPair exp = gamma_plus_pair(4, 4, GroupVariant::H, Orientation::Con1);
  const OG4Report rep = check_og4(exp);
  CHECK_FALSE(rep.member());
  CHECK_FALSE(rep.orientation_preserved);
}

TEST_CASE("double cover constructors") {
  const OrientedPair d33 = double_cover_pair(3, 3);
  CHECK(d33.graph().vertex_count() == 18);
  CHECK(d33.group().order() == 36);
  CHECK(check_og4(d33).member());

  const OrientedPair d35 = double_cover_pair(3, 5);
  CHECK(check_og4(d35).member());
  const DoubleAtlas a = double_atlas(3, 5);
  const QuotientResult qn =
      normal_quotient(d35, PermGroup::from_generators(30, {a.nu, a.sigma}));
  CHECK(qn.kind == QuotientKind::CycleUnoriented);
  CHECK(qn.cycle_length == 3);
  const QuotientResult qm =
      normal_quotient(d35, PermGroup::from_generators(30, {a.mu, a.sigma * a.tau}));
  CHECK(qm.kind == QuotientKind::CycleUnoriented);
  CHECK(qm.cycle_length == 5);

  CHECK_THROWS_AS(double_cover_pair(3, 4), BadParam);
  CHECK_THROWS_AS(double_cover_pair(3, 4, true), Disconnected);
}

TEST_CASE("group orders and literal stabilizers across the families") {
  for (int r = 3; r <= 6; ++r) {
    for (int s = 3; s <= 6; ++s) {
      const bool r_odd = r % 2, s_odd = s % 2;
      if (r_odd || s_odd) {
        const OrientedPair p = gamma_pair(r, s, GroupVariant::G, Orientation::Con1);
        CHECK(p.group().order() == static_cast<std::size_t>(2 * r * s));
        CHECK(p.graph().edge_count() == 2 * p.graph().vertex_count());
        const GammaAtlas a = gamma_atlas(r, s);
        CHECK(stabilizer(p.group(), 0)
                  .same_elements(PermGroup::from_generators(r * s, {a.sigma})));
      }
      if (r_odd && !s_odd) {
        const OrientedPair p = gamma_pair(r, s, GroupVariant::H, Orientation::Con2c);
        CHECK(p.group().order() == static_cast<std::size_t>(2 * r * s));
        const GammaAtlas a = gamma_atlas(r, s);
        CHECK(stabilizer(p.group(), 0)
                  .same_elements(PermGroup::from_generators(r * s, {a.tau})));
      }
      if (!r_odd && !s_odd) {
        const OrientedPair pg = gamma_plus_pair(r, s, GroupVariant::G, Orientation::Con1);
        CHECK(pg.group().order() == static_cast<std::size_t>(r * s));
        const OrientedPair ph = gamma_plus_pair(r, s, GroupVariant::H, Orientation::Con2c);
        CHECK(ph.group().order() == static_cast<std::size_t>(r * s));
        const GammaPlusAtlas ap = gamma_plus_atlas(r, s);
        CHECK(stabilizer(pg.group(), 0)
                  .same_elements(PermGroup::from_generators(
                      pg.graph().vertex_count(), {ap.sigma})));
        CHECK(stabilizer(ph.group(), 0)
                  .same_elements(PermGroup::from_generators(
                      ph.graph().vertex_count(), {ap.tau})));
      }
      if (r_odd && s_odd) {
        const OrientedPair pd = double_cover_pair(r, s);
        CHECK(pd.group().order() == static_cast<std::size_t>(4 * r * s));
        const DoubleAtlas ad = double_atlas(r, s);
        CHECK(stabilizer(pd.group(), 0)
                  .same_elements(PermGroup::from_generators(2 * r * s, {ad.tau})));
      }
    }
  }
}

TEST_CASE("Cayley pair on the cyclic group gives the cycle") {
  const Permutation rot = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  const PermGroup k = PermGroup::from_generators(5, {rot});
  const OrientedPair p = cayley_pair(k, {rot, rot.inverse()}, {});
  CHECK(p.graph().vertex_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(p.graph().degree(v) == 2);
  CHECK(is_connected(p.graph()));
}

TEST_CASE("Cayley pair rejects bad connection sets") {
  const Permutation rot = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  const PermGroup k = PermGroup::from_generators(5, {rot});
  CHECK_THROWS_AS(cayley_pair(k, {rot, rot.inverse(), Permutation::identity(5)}, {}), Error);
  CHECK_THROWS_AS(cayley_pair(k, {rot}, {}), NotInverseClosed);
  const Permutation sq = rot.power(2);
  CHECK_THROWS(cayley_pair(PermGroup::from_generators(6, {Permutation::from_cycles(
                               6, {{0, 1, 2}, {3, 4, 5}})}),
                           {}, {}));
}

TEST_CASE("Cayley pair realizes the reference torus pair") {
  const GammaAtlas a = gamma_atlas(3, 3);
  const PermGroup k = PermGroup::from_generators(9, {a.mu, a.nu});
  const Permutation s0 = a.mu * a.nu;
  const Permutation s1 = a.mu.inverse() * a.nu;
  // Conjugation by the reflection permutes the translation group and
  // swaps the two connection elements; realize it on element indices.
  std::unordered_map<Permutation, int, PermHash> index;
  for (std::size_t i = 0; i < k.elements().size(); ++i)
    index.emplace(k.elements()[i], static_cast<int>(i));
  std::vector<int> conj_im(k.order());
  for (std::size_t i = 0; i < k.elements().size(); ++i)
    conj_im[i] = index.at(k.elements()[i].conjugated_by(a.sigma));
  const OrientedPair cayley =
      cayley_pair(k, {s0, s1, s0.inverse(), s1.inverse()}, {Permutation(conj_im)});

  CHECK(check_og4(cayley).member());
  CHECK(pair_isomorphic(cayley, gamma_pair(3, 3, GroupVariant::G, Orientation::Con1))
            .has_value());
}

TEST_CASE("family spec build dispatch") {
  FamilySpec spec;
  spec.family = Family::GammaDouble;
  spec.r = 3;
  spec.s = 3;
  CHECK(build(spec).graph().vertex_count() == 18);
  CHECK(family_from_string("gamma-plus") == Family::GammaPlus);
  CHECK_THROWS_AS(family_from_string("nope"), BadParam);
}
