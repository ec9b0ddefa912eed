#include "og4/classify.hpp"

#include <algorithm>

#include "og4/errors.hpp"

namespace og4 {

namespace {

struct KernelRecord {
  PermGroup kernel;
  int length = 0;
  bool oriented = false;
};

bool record_less(const KernelRecord& a, const KernelRecord& b) {
  if (a.length != b.length) return a.length < b.length;
  if (a.kernel.order() != b.kernel.order()) return a.kernel.order() < b.kernel.order();
  return a.kernel.elements() < b.kernel.elements();
}

}  // namespace

int table_line_for(int r, int s, bool n_oriented, bool m_oriented) {
  if (n_oriented && m_oriented) return 0;  // two oriented quotients are never independent
  const bool r_odd = r % 2 != 0, s_odd = s % 2 != 0;
  if (m_oriented || n_oriented) {
    // Exactly one oriented; the unoriented one is listed first.
    if (r_odd || s_odd) return 1;
    return 2;
  }
  if (r_odd && !s_odd) return 3;
  if (!r_odd && s_odd) return 4;
  if (!r_odd && !s_odd) return 5;
  return 6;
}

FamilySpec reference_spec(int line, int r, int s) {
  FamilySpec spec;
  spec.r = r;
  spec.s = s;
  switch (line) {
    case 1:
      spec.family = Family::Gamma;
      spec.variant = GroupVariant::G;
      spec.orientation = Orientation::Con1;
      return spec;
    case 2:
      spec.family = Family::GammaPlus;
      spec.variant = GroupVariant::G;
      spec.orientation = Orientation::Con1;
      return spec;
    case 3:
      spec.family = Family::Gamma;
      spec.variant = GroupVariant::H;
      spec.orientation = Orientation::Con2c;
      return spec;
    case 4:
      // Same construction as line 3 with the parameters transposed.
      spec.family = Family::Gamma;
      spec.variant = GroupVariant::H;
      spec.orientation = Orientation::Con2c;
      spec.r = s;
      spec.s = r;
      return spec;
    case 5:
      spec.family = Family::GammaPlus;
      spec.variant = GroupVariant::H;
      spec.orientation = Orientation::Con2c;
      return spec;
    case 6:
      spec.family = Family::GammaDouble;
      spec.orientation = Orientation::Con2a;
      return spec;
    default:
      throw NoMatch("no catalogue line fits the quotient parameters");
  }
}

OrientedPair reference_pair(int line, int r, int s) { return build(reference_spec(line, r, s)); }

std::vector<IndependentPair> find_independent_quotients(const OrientedPair& pair,
                                                        std::size_t order_bound) {
  const auto census = cyclic_quotient_census(pair, order_bound);

  // Replace each subgroup by the full kernel of its partition and dedupe;
  // equal kernels give identical partitions, hence identical quotients.
  std::vector<KernelRecord> records;
  for (const auto& row : census) {
    const QuotientResult q = normal_quotient(pair, row.subgroup);
    KernelRecord rec{q.kernel, q.cycle_length, q.kind == QuotientKind::CycleOriented};
    bool dup = false;
    for (const auto& existing : records)
      if (existing.kernel.same_elements(rec.kernel)) {
        dup = true;
        break;
      }
    if (!dup) records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(), record_less);

  std::vector<IndependentPair> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const IndependenceResult ir = independent(pair, records[i].kernel, records[j].kernel);
      if (!ir.independent) continue;
      const KernelRecord* first = &records[i];
      const KernelRecord* second = &records[j];
      // The unoriented quotient is listed first; records are sorted, so a
      // both-unoriented pair already has the shorter one first.
      if (first->oriented && !second->oriented) std::swap(first, second);
      IndependentPair entry;
      entry.kernel_n = first->kernel;
      entry.kernel_m = second->kernel;
      entry.r = first->length;
      entry.s = second->length;
      entry.n_oriented = first->oriented;
      entry.m_oriented = second->oriented;
      entry.line_hint = table_line_for(entry.r, entry.s, entry.n_oriented, entry.m_oriented);
      out.push_back(std::move(entry));
    }
  }
  std::sort(out.begin(), out.end(), [](const IndependentPair& a, const IndependentPair& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.s != b.s) return a.s < b.s;
    if (a.kernel_n.elements() != b.kernel_n.elements())
      return a.kernel_n.elements() < b.kernel_n.elements();
    return a.kernel_m.elements() < b.kernel_m.elements();
  });
  return out;
}

BaseReduction reduce_to_base(const OrientedPair& pair, const PermGroup& n, const PermGroup& m) {
  BaseReduction red;
  red.meet = intersection(n, m);
  const QuotientResult q = normal_quotient(pair, red.meet);
  if (q.kind != QuotientKind::Cover)
    throw NotACover("quotient by the kernel meet did not keep full valency");
  if (!is_semiregular(red.meet))
    throw NotACover("kernel meet is not semiregular");
  red.base = *q.cover_pair;

  auto induce_subgroup = [&](const PermGroup& sub) {
    std::vector<Permutation> gens;
    for (const auto& g : sub.generators())
      gens.push_back(induced_on_cells(g, q.orbit_partition));
    return PermGroup::from_generators(q.orbit_partition.cell_count(), std::move(gens));
  };
  red.n_bar = induce_subgroup(n);
  red.m_bar = induce_subgroup(m);
  if (!intersection(red.n_bar, red.m_bar).is_trivial())
    throw TheoremViolation("reduced kernels do not intersect trivially");
  return red;
}

ClassificationReport classify_entry(const OrientedPair& pair, const IndependentPair& rough,
                                    bool strict_delta) {
  IndependentPair entry = rough;
  if (entry.n_oriented && !entry.m_oriented) {
    // Normalize hand-built entries: the unoriented quotient goes first.
    std::swap(entry.kernel_n, entry.kernel_m);
    std::swap(entry.r, entry.s);
    std::swap(entry.n_oriented, entry.m_oriented);
  }

  ClassificationReport report;
  report.reduction = reduce_to_base(pair, entry.kernel_n, entry.kernel_m);

  int r = entry.r, s = entry.s;
  int line = table_line_for(r, s, entry.n_oriented, entry.m_oriented);
  if (line == 0) throw NoMatch("no catalogue line fits the quotient parameters");
  if (line == 4) {
    // Lines 3 and 4 are parameter transposes of one construction; the
    // report normalizes to the odd-first form and records the swap.
    std::swap(r, s);
    line = 3;
    report.params_swapped = true;
  }
  report.table_line = line;
  report.r = r;
  report.s = s;
  report.reference = reference_spec(line, r, s);

  const OrientedPair ref = build(report.reference);
  auto witness = pair_isomorphic(report.reduction.base, ref, strict_delta);
  if (!witness)
    throw NoMatch("no pair isomorphism onto the reference construction was found");
  report.witness = *witness;

  const OG4Report base_report = check_og4(report.reduction.base);
  report.stabilizer_order = base_report.stabilizer_order;
  return report;
}

ClassificationReport classify_independent(const OrientedPair& pair, std::size_t order_bound,
                                          bool strict_delta) {
  auto found = find_independent_quotients(pair, order_bound);
  if (found.empty()) throw NoMatch("the pair has no independent cyclic normal quotients");
  ClassificationReport report = classify_entry(pair, found.front(), strict_delta);
  report.found = std::move(found);
  return report;
}

}  // namespace og4
