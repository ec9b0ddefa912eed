#include "og4/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "og4/classify.hpp"
#include "og4/errors.hpp"
#include "og4/families.hpp"
#include "og4/metacirc.hpp"
#include "og4/ogpair.hpp"
#include "og4/quotient.hpp"
#include "og4/subgroup_oracle.hpp"

namespace og4 {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "FAILED: " << what << "; ";
    }
  }
  void note(const std::string& what) { log << what << "; "; }
};

// ------------------------------------------------------------ suite bodies

void suite_theorem1a(Check& c) {
  const OrientedPair pair = lex_cycle_pair(9);
  const auto rows = cyclic_quotient_census(pair);
  std::set<std::pair<int, bool>> kinds;
  for (const auto& row : rows) kinds.insert({row.length, row.oriented});
  c.require(kinds == std::set<std::pair<int, bool>>{{9, true}, {3, true}},
            "cyclic quotients must be exactly C9 and C3, both oriented");
  for (const auto& row : rows) {
    c.require(row.oriented, "every cyclic quotient is oriented");
    c.require(row.maximal == (row.length == 9),
              "C9 rows and only C9 rows are maximal");
  }
  c.note("rows=" + std::to_string(rows.size()) + " distinct quotients=C9,C3 oriented, C9 maximal");
}

void suite_theorem1b(Check& c) {
  // Orbit-level check: group order 2^15*15 is out of materialization range,
  // so only partition invariance and the quotient shape are verified.
  const OrientedPair pair = lex_cycle_pair(15);
  const LexAtlas atlas = lex_atlas(15);
  for (int cdiv : {3, 5}) {
    std::vector<Permutation> gens = atlas.swaps;
    gens.push_back(atlas.shift.power(cdiv));
    const PermGroup sub = PermGroup::from_generators(30, std::move(gens));
    const Partition p = orbits(sub);
    const QuotientShape shape = quotient_shape(pair, p);  // validates invariance
    c.require(shape.kind == QuotientKind::CycleOriented,
              "quotient by the parameterized subgroup is an oriented cycle");
    c.require(shape.cycle_length == cdiv,
              "cycle length " + std::to_string(cdiv));
  }
  c.require(std::gcd(3, 5) == 1, "coprime lengths");
  c.note("orbit-level only: invariance and shape checked, full enumeration exempt");
}

void suite_theorem1c(Check& c) {
  const OrientedPair pair = gamma_pair(15, 15, GroupVariant::G, Orientation::Con1);
  const auto rows = cyclic_quotient_census(pair);
  std::set<int> oriented, unoriented;
  for (const auto& row : rows) (row.oriented ? oriented : unoriented).insert(row.length);
  for (int len : {3, 5}) {
    c.require(oriented.count(len) == 1, "oriented C" + std::to_string(len) + " present");
    c.require(unoriented.count(len) == 1, "unoriented C" + std::to_string(len) + " present");
  }
  c.require(std::gcd(3, 5) == 1, "gcd(r_i, r_j) = 1");
  std::ostringstream lens;
  lens << "oriented lengths:";
  for (int l : oriented) lens << " " << l;
  lens << " unoriented:";
  for (int l : unoriented) lens << " " << l;
  c.note(lens.str());
}

void suite_table1(Check& c) {
  struct Case {
    int line, r, s;
  };
  const std::vector<Case> cases = {{1, 3, 3}, {2, 4, 4}, {3, 3, 4},
                                   {4, 4, 3}, {5, 4, 4}, {6, 3, 3}};
  for (const auto& cs : cases) {
    const std::string tag = "line " + std::to_string(cs.line);
    const OrientedPair ref = reference_pair(cs.line, cs.r, cs.s);
    const OG4Report rep = check_og4(ref);
    c.require(rep.member(), tag + ": reference pair is a member");
    for (int v = 0; v < ref.graph().vertex_count(); ++v)
      c.require(stabilizer(ref.group(), v).order() == 2,
                tag + ": stabilizer order 2 at vertex " + std::to_string(v));

    const auto found = find_independent_quotients(ref);
    c.require(!found.empty(), tag + ": independent quotient list nonempty");

    // Lines 3 and 4 are transposes of one construction; the pipeline
    // normalizes to the odd-first parameter order (line 3).
    const int want_line = (cs.line == 4) ? 3 : cs.line;
    const int want_r = (cs.line == 4) ? cs.s : cs.r;
    const int want_s = (cs.line == 4) ? cs.r : cs.s;
    const bool want_m_oriented = (cs.line <= 2);

    const IndependentPair* match = nullptr;
    for (const auto& entry : found)
      if (entry.line_hint == want_line && entry.r == want_r && entry.s == want_s) {
        match = &entry;
        break;
      }
    c.require(match != nullptr, tag + ": an entry with the line's parameters exists");
    if (!match) continue;
    c.require(!match->n_oriented, tag + ": first quotient unoriented");
    c.require(match->m_oriented == want_m_oriented, tag + ": orientedness pattern");

    try {
      const ClassificationReport cls = classify_entry(ref, *match);
      c.require(cls.table_line == want_line && cls.r == want_r && cls.s == want_s,
                tag + ": classification returns the line");
      c.require(cls.stabilizer_order == 2, tag + ": base stabilizer order 2");
      c.note(tag + (cs.line == 4 ? " ok (normalized to line 3)" : " ok"));
    } catch (const Error& e) {
      c.require(false, tag + ": " + e.what());
    }
    // The default canonical pipeline must also produce a witnessed line.
    try {
      (void)classify_independent(ref);
    } catch (const Error& e) {
      c.require(false, tag + ": canonical classification failed: " + std::string(e.what()));
    }
  }
}

void suite_remark_a(Check& c) {
  const OrientedPair a = gamma_pair(3, 4, GroupVariant::G, Orientation::Con1);
  const OrientedPair b = gamma_plus_pair(6, 4, GroupVariant::G, Orientation::Con1);
  const auto witness = pair_isomorphic(a, b);
  c.require(witness.has_value(), "gamma(3,4)/G is isomorphic to gamma-plus(6,4)/G as a pair");
  if (witness) {
    const Permutation& f = *witness;
    const Permutation f_inv = f.inverse();
    for (auto [u, v] : a.graph().edges())
      c.require(b.graph().has_edge(f(u), f(v)), "witness maps edges to edges");
    for (const auto& g : a.group().generators())
      c.require(b.group().contains(f_inv * g * f), "witness conjugates the group");
  }
}

void grid_member_checks(Check& c, const std::string& tag, const OrientedPair& pair,
                        const PermGroup& n_sub, int expect_r, const PermGroup& m_sub,
                        int expect_s, bool m_oriented) {
  const OG4Report rep = check_og4(pair);
  c.require(rep.member(), tag + ": membership");
  const QuotientResult qn = normal_quotient(pair, n_sub);
  c.require(qn.kind == QuotientKind::CycleUnoriented && qn.cycle_length == expect_r,
            tag + ": first quotient is an unoriented cycle of length " +
                std::to_string(expect_r));
  c.require(qn.kernel.same_elements(n_sub) && is_semiregular(qn.kernel),
            tag + ": unoriented kernel is the semiregular subgroup itself");
  const QuotientResult qm = normal_quotient(pair, m_sub);
  const QuotientKind want =
      m_oriented ? QuotientKind::CycleOriented : QuotientKind::CycleUnoriented;
  c.require(qm.kind == want && qm.cycle_length == expect_s,
            tag + ": second quotient kind and length " + std::to_string(expect_s));
  if (m_oriented) {
    for (int v = 0; v < pair.graph().vertex_count(); ++v) {
      const PermGroup stab = stabilizer(pair.group(), v);
      for (const auto& e : stab.elements())
        c.require(qm.kernel.contains(e),
                  tag + ": oriented kernel contains the stabilizer of every vertex");
    }
  } else {
    c.require(qm.kernel.same_elements(m_sub) && is_semiregular(qm.kernel),
              tag + ": second unoriented kernel equals the subgroup");
  }
  const IndependenceResult ir = independent(pair, n_sub, m_sub);
  c.require(ir.independent, tag + ": the two quotients are independent");
  // Multiplicity constancy over every normal subgroup (the census throws
  // InconsistentEll if any quotient violated it).
  const auto census = cyclic_quotient_census(pair);
  c.require(!census.empty(), tag + ": census nonempty");
}

void suite_lemma_grid(Check& c) {
  int member_pairs = 0;
  for (int r = 3; r <= 8; ++r) {
    for (int s = 3; s <= 8; ++s) {
      const std::string ps = "(" + std::to_string(r) + "," + std::to_string(s) + ")";
      const bool r_odd = r % 2, s_odd = s % 2;
      const GammaAtlas a = gamma_atlas(r, s);
      const OrientedGraph gg = gamma_graph(r, s, Orientation::Con1);

      c.require(is_connected(gg) == (r_odd || s_odd), "gamma" + ps + " connectivity parity");
      c.require(is_bipartite(gg).bipartite == (!r_odd || !s_odd),
                "gamma" + ps + " bipartiteness parity");
      if (!r_odd && !s_odd) {
        const auto comps = connected_components(gg);
        std::vector<int> plus;
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < s; ++j)
            if (i % 2 == j % 2) plus.push_back(a.vertex(i, j));
        std::sort(plus.begin(), plus.end());
        c.require(comps.size() == 2 && (comps[0] == plus || comps[1] == plus),
                  "gamma" + ps + " components are the parity classes");
      }

      // Half-transitivity of the acting groups, independent of connectivity.
      auto half_transitive = [&](const OrientedGraph& graph, const PermGroup& grp) {
        return orbits(grp).cell_count() == 1 && edge_orbit_count(graph, grp) == 1 &&
               arc_orbit_count(graph, grp) == 2;
      };
      const PermGroup g_grp = PermGroup::from_generators(r * s, {a.mu, a.nu, a.sigma});
      c.require(half_transitive(gg, g_grp), "G" + ps + " half-transitive");
      if (!s_odd) {
        const PermGroup h_grp =
            PermGroup::from_generators(r * s, {a.mu, a.sigma * a.nu, a.tau});
        c.require(half_transitive(gg, h_grp), "H" + ps + " half-transitive");
      }

      // Double cover connectivity across the whole grid.
      c.require(is_connected(standard_double_cover(gg)) == (r_odd && s_odd),
                "double cover of gamma" + ps + " connected iff both odd");

      if (r_odd || s_odd) {
        const OrientedPair p = gamma_pair(r, s, GroupVariant::G, Orientation::Con1);
        const PermGroup n_sub = PermGroup::from_generators(r * s, {a.nu});
        const PermGroup m_sub = PermGroup::from_generators(r * s, {a.mu});
        ++member_pairs;
        grid_member_checks(c, "gamma" + ps + "/G", p, n_sub, r, m_sub, s, true);
        if (!s_odd) {
          const PermGroup n2 = PermGroup::from_generators(r * s, {a.nu * a.nu});
          const QuotientResult q2 = normal_quotient(p, n2);
          c.require(q2.kind == QuotientKind::CycleUnoriented && q2.cycle_length == 2 * r,
                    "gamma" + ps + "/G: squared subgroup gives unoriented C" +
                        std::to_string(2 * r));
        }
      }
      if (r_odd && !s_odd) {
        const OrientedPair p = gamma_pair(r, s, GroupVariant::H, Orientation::Con2c);
        const Permutation tsn = a.tau * a.sigma * a.nu;
        const PermGroup n_sub = PermGroup::from_generators(r * s, {a.nu * a.nu, tsn});
        const PermGroup m_sub = PermGroup::from_generators(r * s, {a.mu});
        ++member_pairs;
        grid_member_checks(c, "gamma" + ps + "/H", p, n_sub, r, m_sub, s, false);
      }
      if (!r_odd && !s_odd) {
        const GammaPlusAtlas ap = gamma_plus_atlas(r, s);
        const int np = static_cast<int>(ap.to_original.size());
        const PermGroup n_plus =
            PermGroup::from_generators(np, {ap.restrict(a.nu * a.nu)});
        const PermGroup m_plus =
            PermGroup::from_generators(np, {ap.restrict(a.mu * a.mu)});
        const OrientedPair pg = gamma_plus_pair(r, s, GroupVariant::G, Orientation::Con1);
        ++member_pairs;
        grid_member_checks(c, "gamma-plus" + ps + "/G", pg, n_plus, r, m_plus, s, true);
        const OrientedPair ph = gamma_plus_pair(r, s, GroupVariant::H, Orientation::Con2c);
        ++member_pairs;
        grid_member_checks(c, "gamma-plus" + ps + "/H", ph, n_plus, r, m_plus, s, false);
      }
      if (r_odd && s_odd) {
        const OrientedPair pd = double_cover_pair(r, s);
        const DoubleAtlas ad = double_atlas(r, s);
        const int nd = 2 * r * s;
        const PermGroup n_sub = PermGroup::from_generators(nd, {ad.nu, ad.sigma});
        const PermGroup m_sub = PermGroup::from_generators(nd, {ad.mu, ad.sigma * ad.tau});
        ++member_pairs;
        grid_member_checks(c, "double" + ps, pd, n_sub, r, m_sub, s, false);
      }
    }
  }
  c.note(std::to_string(member_pairs) + " member pairs over the grid");
}

void suite_lemma22(Check& c) {
  auto run = [&](const std::string& tag, const OrientedPair& pair) {
    const auto rows = cyclic_quotient_census(pair);
    std::size_t oriented_rows = 0, pairs_checked = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].oriented) continue;
      ++oriented_rows;
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (!rows[j].oriented) continue;
        ++pairs_checked;
        const IndependenceResult ir = independent(pair, rows[i].subgroup, rows[j].subgroup);
        c.require(!ir.independent,
                  tag + ": oriented cycle quotients are never independent");
        c.require(is_cycle_kind(ir.joint_kind) &&
                      ir.joint_length % std::lcm(rows[i].length, rows[j].length) == 0,
                  tag + ": joint quotient is a cycle of length divisible by the lcm");
      }
    }
    c.note(tag + ": " + std::to_string(oriented_rows) + " oriented rows, " +
           std::to_string(pairs_checked) + " pairs checked");
  };
  run("gamma(15,15)/G", gamma_pair(15, 15, GroupVariant::G, Orientation::Con1));
  run("lex(5)", lex_cycle_pair(5));
}

void suite_monomorphism(Check& c) {
  // gamma(3,3)/G: unoriented C3 and oriented C3.
  {
    const GammaAtlas a = gamma_atlas(3, 3);
    const OrientedPair p = gamma_pair(3, 3, GroupVariant::G, Orientation::Con1);
    const PermGroup n = PermGroup::from_generators(9, {a.nu});
    const PermGroup m = PermGroup::from_generators(9, {a.mu, a.sigma});
    const ActionSignature sig = quotient_action_signature(p, n, m);
    c.require(sig.injective, "gamma(3,3)/G: signature map is injective");
    c.require(sig.proj1_full_dihedral && sig.proj1_image_order == 6,
              "gamma(3,3)/G: first projection is the full dihedral group of order 6");
    c.require(sig.m_quotient_oriented && sig.proj2_matches_expected &&
                  sig.proj2_image_order == 3,
              "gamma(3,3)/G: second projection is the rotation group of order 3");
  }
  // gamma(3,4)/H: both unoriented, C3 and C4.
  {
    const GammaAtlas a = gamma_atlas(3, 4);
    const OrientedPair p = gamma_pair(3, 4, GroupVariant::H, Orientation::Con2c);
    const PermGroup n =
        PermGroup::from_generators(12, {a.nu * a.nu, a.tau * a.sigma * a.nu});
    const PermGroup m = PermGroup::from_generators(12, {a.mu});
    const ActionSignature sig = quotient_action_signature(p, n, m);
    c.require(sig.injective, "gamma(3,4)/H: signature map is injective");
    c.require(sig.proj1_full_dihedral && sig.proj1_image_order == 6,
              "gamma(3,4)/H: first projection is dihedral of order 6");
    c.require(!sig.m_quotient_oriented && sig.proj2_matches_expected &&
                  sig.proj2_image_order == 8,
              "gamma(3,4)/H: second projection is dihedral of order 8");
  }
  // double(3,3): both unoriented, C3 and C3.
  {
    const DoubleAtlas a = double_atlas(3, 3);
    const OrientedPair p = double_cover_pair(3, 3);
    const PermGroup n = PermGroup::from_generators(18, {a.nu, a.sigma});
    const PermGroup m = PermGroup::from_generators(18, {a.mu, a.sigma * a.tau});
    const ActionSignature sig = quotient_action_signature(p, n, m);
    c.require(sig.injective, "double(3,3): signature map is injective");
    c.require(sig.proj1_full_dihedral && sig.proj1_image_order == 6,
              "double(3,3): first projection is dihedral of order 6");
    c.require(!sig.m_quotient_oriented && sig.proj2_matches_expected &&
                  sig.proj2_image_order == 6,
              "double(3,3): second projection is dihedral of order 6");
  }
}

void suite_ex4_trichotomy(Check& c) {
  for (int r : {3, 5, 7}) {
    const std::string tag = "gamma(" + std::to_string(r) + "," + std::to_string(r) + ")";
    const GammaAtlas a = gamma_atlas(r, r);
    const OrientedPair p = gamma_pair(r, r, GroupVariant::G, Orientation::Con1);

    struct Choice {
      Permutation rho, lambda;
      RhoQuotientStatus want;
      const char* name;
    };
    const std::vector<Choice> choices = {
        {a.mu * a.nu, a.mu, RhoQuotientStatus::NotNormal, "diagonal"},
        {a.nu, a.mu, RhoQuotientStatus::NormalUnorientedCycle, "column"},
        {a.mu, a.nu, RhoQuotientStatus::NormalOrientedCycle, "row"},
    };
    std::set<RhoQuotientStatus> seen;
    for (const auto& ch : choices) {
      const RhoQuotientReport rq = rho_quotient_status(p, ch.rho);
      c.require(rq.status == ch.want,
                tag + " " + ch.name + ": status " + to_string(ch.want) + ", got " +
                    to_string(rq.status));
      seen.insert(rq.status);
      const MetaReport meta = check_weak_metacirculant(p, ch.rho, ch.lambda);
      c.require(meta.is_metacirculant && meta.m == r && meta.n == r,
                tag + " " + ch.name + ": is an (r,r)-metacirculant");
      c.require(is_regular(PermGroup::from_generators(r * r, {ch.rho, ch.lambda})),
                tag + " " + ch.name + ": generated subgroup is regular");
    }
    c.require(seen.size() == 3, tag + ": the three statuses are distinct");
  }
}

void suite_corollary_wm(Check& c) {
  struct Case {
    int r, s, line, want_m, want_n;
  };
  const std::vector<Case> cases = {
      {3, 3, 1, 3, 3}, {3, 4, 1, 4, 3}, {5, 3, 1, 3, 5}, {4, 4, 2, 4, 2}, {6, 4, 2, 4, 3}};
  for (const auto& cs : cases) {
    const std::string tag = "line " + std::to_string(cs.line) + " (" + std::to_string(cs.r) +
                            "," + std::to_string(cs.s) + ")";
    try {
      const CorollaryWmReport rep = verify_corollary_wm(cs.r, cs.s, cs.line);
      c.require(rep.pass && rep.m_bar == cs.want_m && rep.n_bar == cs.want_n,
                tag + ": weak (" + std::to_string(cs.want_m) + "," +
                    std::to_string(cs.want_n) + ")-metacirculant");
    } catch (const Error& e) {
      c.require(false, tag + ": " + e.what());
    }
  }
}

struct RosterEntry {
  std::string label;
  PermGroup group;
};

// Every group of order <= 200 whose normal subgroups the other suites
// enumerate: the lemma-grid families, the catalogue references, the
// metacirculant cases, and the small blown-up cycle.
std::vector<RosterEntry> oracle_roster() {
  std::vector<RosterEntry> roster;
  std::set<std::string> seen;
  auto add = [&](const std::string& label, const PermGroup& g) {
    if (g.order() > 200) return;
    if (!seen.insert(label).second) return;
    roster.push_back({label, g});
  };
  add("lex(5)", lex_cycle_pair(5).group());
  for (int r = 3; r <= 8; ++r)
    for (int s = 3; s <= 8; ++s) {
      const std::string ps = "(" + std::to_string(r) + "," + std::to_string(s) + ")";
      if (r % 2 || s % 2)
        add("G" + ps, gamma_pair(r, s, GroupVariant::G, Orientation::Con1).group());
      if (r % 2 && s % 2 == 0)
        add("H" + ps, gamma_pair(r, s, GroupVariant::H, Orientation::Con2c).group());
      if (r % 2 == 0 && s % 2 == 0) {
        add("G+" + ps, gamma_plus_pair(r, s, GroupVariant::G, Orientation::Con1).group());
        add("H+" + ps, gamma_plus_pair(r, s, GroupVariant::H, Orientation::Con2c).group());
      }
      if (r % 2 && s % 2) add("G2" + ps, double_cover_pair(r, s).group());
    }
  return roster;
}

void suite_oracle_equivalence(Check& c) {
  const auto roster = oracle_roster();
  for (const auto& entry : roster) {
    const auto computed = normal_subgroups(entry.group);
    const auto expected = oracle_normal_subgroups(entry.group);
    c.require(same_subgroup_lists(computed, expected),
              entry.label + ": normal subgroup list matches the lattice oracle (" +
                  std::to_string(computed.size()) + " vs " + std::to_string(expected.size()) +
                  ")");
  }
  c.note(std::to_string(roster.size()) + " groups compared");
}

using SuiteFn = std::function<void(Check&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"theorem1a", suite_theorem1a},
      {"theorem1b", suite_theorem1b},
      {"theorem1c", suite_theorem1c},
      {"table1", suite_table1},
      {"remark-a", suite_remark_a},
      {"lemma-grid", suite_lemma_grid},
      {"lemma22", suite_lemma22},
      {"monomorphism", suite_monomorphism},
      {"ex4-trichotomy", suite_ex4_trichotomy},
      {"corollary-wm", suite_corollary_wm},
      {"oracle-equivalence", suite_oracle_equivalence},
  };
  return suites;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

bool is_verify_suite(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

CriterionResult run_verify_suite(const std::string& name) {
  const SuiteFn* fn = nullptr;
  for (const auto& [n, f] : registry())
    if (n == name) fn = &f;
  if (!fn) throw Error("unknown verification suite: " + name);

  CriterionResult result;
  result.name = name;
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    (*fn)(check);
    result.pass = check.ok;
  } catch (const std::exception& e) {
    check.log << "EXCEPTION: " << e.what();
    result.pass = false;
  }
  const auto end = std::chrono::steady_clock::now();
  result.ms = std::chrono::duration<double, std::milli>(end - start).count();
  result.detail = check.log.str();
  return result;
}

}  // namespace og4
