#include "og4/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "og4/errors.hpp"

namespace og4 {

std::vector<Permutation> close(int degree, std::vector<Permutation> generators,
                               std::size_t cap) {
  if (cap < 1) throw Error("closure cap must be at least 1");
  for (const auto& g : generators)
    if (g.degree() != degree) throw DegreeMismatch("generator degree mismatch in close()");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermHash> seen;
  std::deque<std::size_t> frontier;

  out.push_back(Permutation::identity(degree));
  seen.insert(out.back());
  frontier.push_back(0);

  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = out[cur] * g;
      if (seen.insert(next).second) {
        if (out.size() + 1 > cap) throw CapExceeded("element closure exceeded cap");
        out.push_back(std::move(next));
        frontier.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

struct PermGroup::Cache {
  std::vector<Permutation> elements;
  std::unordered_set<Permutation, PermHash> element_set;
};

const PermGroup::Cache& PermGroup::cache() const {
  if (!cache_) {
    auto c = std::make_shared<Cache>();
    c->elements = close(degree_, generators_, cap_);
    c->element_set.insert(c->elements.begin(), c->elements.end());
    cache_ = std::move(c);
  }
  return *cache_;
}

const std::vector<Permutation>& PermGroup::elements() const { return cache().elements; }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return cache().element_set.count(p) > 0;
}

bool PermGroup::same_elements(const PermGroup& other) const {
  if (degree_ != other.degree() || order() != other.order()) return false;
  for (const auto& e : other.elements())
    if (!contains(e)) return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree() || order() > other.order()) return false;
  for (const auto& g : generators_)
    if (!other.contains(g)) return false;
  return true;
}

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  return g;
}

PermGroup PermGroup::from_generators(int degree, std::vector<Permutation> generators,
                                     std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw DegreeMismatch("generator degree mismatch");
  PermGroup g;
  g.degree_ = degree;
  g.cap_ = cap;
  for (auto& p : generators)
    if (!p.is_identity()) g.generators_.push_back(std::move(p));
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  // Greedy small generating set: add any element not yet generated.
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> span;
  span.insert(Permutation::identity(degree));
  for (const auto& e : elements) {
    if (span.count(e)) continue;
    gens.push_back(e);
    auto closed = close(degree, gens);
    span.clear();
    span.insert(closed.begin(), closed.end());
  }
  if (span.size() != elements.size())
    throw Error("from_elements: input is not closed under the group operations");

  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(gens);
  auto c = std::make_shared<Cache>();
  c->element_set = std::move(span);
  c->elements = std::move(elements);
  g.cache_ = std::move(c);
  return g;
}

Partition orbits(const PermGroup& group) {
  const int n = group.degree();
  std::vector<int> cell_of(n, -1);
  std::vector<std::vector<int>> cells;
  for (int start = 0; start < n; ++start) {
    if (cell_of[start] != -1) continue;
    const int ci = static_cast<int>(cells.size());
    std::vector<int> cell{start};
    cell_of[start] = ci;
    for (std::size_t k = 0; k < cell.size(); ++k) {
      for (const auto& g : group.generators()) {
        const int y = g(cell[k]);
        if (cell_of[y] == -1) {
          cell_of[y] = ci;
          cell.push_back(y);
        }
      }
    }
    cells.push_back(std::move(cell));
  }
  return Partition::from_cells(n, std::move(cells));
}

bool is_transitive(const PermGroup& group) { return orbits(group).cell_count() == 1; }

bool is_semiregular(const PermGroup& group) {
  for (const auto& e : group.elements()) {
    if (e.is_identity()) continue;
    for (int x = 0; x < group.degree(); ++x)
      if (e(x) == x) return false;
  }
  return true;
}

bool is_regular(const PermGroup& group) {
  return is_semiregular(group) && is_transitive(group);
}

PermGroup stabilizer(const PermGroup& group, int point) {
  if (point < 0 || point >= group.degree()) throw Error("stabilizer point out of range");
  std::vector<Permutation> fixed;
  for (const auto& e : group.elements())
    if (e(point) == point) fixed.push_back(e);
  return PermGroup::from_elements(group.degree(), std::move(fixed));
}

bool is_normal(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) throw DegreeMismatch("is_normal degree mismatch");
  for (const auto& s : sub.generators())
    if (!group.contains(s)) throw Error("is_normal: sub is not contained in group");
  for (const auto& g : group.generators())
    for (const auto& s : sub.generators())
      if (!sub.contains(s.conjugated_by(g))) return false;
  return true;
}

PermGroup kernel_on_partition(const PermGroup& group, const Partition& partition) {
  if (partition.point_count() != group.degree())
    throw DegreeMismatch("kernel_on_partition degree mismatch");
  // Invariance: each generator must map each cell onto a single cell.
  for (const auto& g : group.generators()) {
    for (const auto& cell : partition.cells()) {
      const int target = partition.cell_of(g(cell.front()));
      for (int x : cell)
        if (partition.cell_of(g(x)) != target)
          throw NotInvariant("partition is not invariant under the group");
    }
  }
  std::vector<Permutation> fixed;
  for (const auto& e : group.elements()) {
    bool fixes_all = true;
    for (const auto& cell : partition.cells()) {
      if (partition.cell_of(e(cell.front())) != partition.cell_of(cell.front())) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) fixed.push_back(e);
  }
  return PermGroup::from_elements(group.degree(), std::move(fixed));
}

PermGroup join(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  if (a.degree() != b.degree()) throw DegreeMismatch("join degree mismatch");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup::from_generators(a.degree(), std::move(gens), cap);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("intersection degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> common;
  for (const auto& e : small.elements())
    if (large.contains(e)) common.push_back(e);
  return PermGroup::from_elements(a.degree(), std::move(common));
}

Permutation induced_on_cells(const Permutation& p, const Partition& partition) {
  std::vector<int> im(partition.cell_count());
  for (int c = 0; c < partition.cell_count(); ++c) {
    const int target = partition.cell_of(p(partition.cell(c).front()));
    for (int x : partition.cell(c))
      if (partition.cell_of(p(x)) != target)
        throw NotInvariant("permutation does not permute the partition cells");
    im[c] = target;
  }
  return Permutation(std::move(im));
}

namespace {

// Index-based machinery over a fully materialized parent group. Products
// become one compose plus a hash lookup; subgroups are sorted index lists.
struct IndexedGroup {
  int degree;
  const std::vector<Permutation>* elems;
  std::unordered_map<Permutation, int, PermHash> index_of;
  std::vector<int> inverse;
  std::vector<int> gens;  // indices of the parent generators

  explicit IndexedGroup(const PermGroup& g) : degree(g.degree()), elems(&g.elements()) {
    index_of.reserve(elems->size() * 2);
    for (std::size_t i = 0; i < elems->size(); ++i)
      index_of.emplace((*elems)[i], static_cast<int>(i));
    inverse.resize(elems->size());
    for (std::size_t i = 0; i < elems->size(); ++i)
      inverse[i] = index_of.at((*elems)[i].inverse());
    for (const auto& gen : g.generators()) gens.push_back(index_of.at(gen));
  }

  int size() const { return static_cast<int>(elems->size()); }
  int mul(int a, int b) const { return index_of.at((*elems)[a] * (*elems)[b]); }
  int conj(int a, int by) const { return mul(mul(inverse[by], a), by); }
};

// Closure of a generating index list; returns sorted element indices.
std::vector<int> indexed_close(const IndexedGroup& ig, const std::vector<int>& gens) {
  std::vector<char> seen(ig.size(), 0);
  std::vector<int> out;
  const int id = ig.index_of.at(Permutation::identity(ig.degree));
  seen[id] = 1;
  out.push_back(id);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int g : gens) {
      const int next = ig.mul(out[k], g);
      if (!seen[next]) {
        seen[next] = 1;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SubgroupRec {
  std::vector<int> gens;
  std::vector<int> elems;  // sorted
};

std::size_t hash_indices(const std::vector<int>& v) {
  std::size_t h = 14695981039346656037ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> indexed_normal_closure(const IndexedGroup& ig, int seed,
                                        std::vector<int>* gens_out) {
  std::vector<int> gens{seed};
  std::vector<int> elems = indexed_close(ig, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t gen_count = gens.size();
    for (std::size_t gi = 0; gi < gen_count; ++gi) {
      for (int g : ig.gens) {
        const int c = ig.conj(gens[gi], g);
        if (!std::binary_search(elems.begin(), elems.end(), c)) {
          gens.push_back(c);
          elems = indexed_close(ig, gens);
          grew = true;
        }
      }
    }
  }
  if (gens_out) *gens_out = gens;
  return elems;
}

}  // namespace

PermGroup normal_closure(const PermGroup& group, const Permutation& seed) {
  if (!group.contains(seed)) throw Error("normal_closure: seed is not in the group");
  IndexedGroup ig(group);
  std::vector<int> gens;
  std::vector<int> elems = indexed_normal_closure(ig, ig.index_of.at(seed), &gens);
  std::vector<Permutation> out;
  out.reserve(elems.size());
  for (int i : elems) out.push_back(group.elements()[i]);
  return PermGroup::from_elements(group.degree(), std::move(out));
}

std::vector<PermGroup> normal_subgroups(const PermGroup& group, std::size_t order_bound) {
  if (group.order() > order_bound)
    throw BoundExceeded("group order exceeds the normal-subgroup enumeration bound");
  IndexedGroup ig(group);
  const int n = ig.size();

  // Conjugacy classes: normal closures agree within a class, so one
  // closure per class representative suffices.
  std::vector<int> class_rep;
  {
    std::vector<char> seen(n, 0);
    for (int e = 0; e < n; ++e) {
      if (seen[e]) continue;
      class_rep.push_back(e);
      std::vector<int> orbit{e};
      seen[e] = 1;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (int g : ig.gens) {
          const int c = ig.conj(orbit[k], g);
          if (!seen[c]) {
            seen[c] = 1;
            orbit.push_back(c);
          }
        }
      }
    }
  }

  std::vector<SubgroupRec> found;
  std::unordered_map<std::size_t, std::vector<int>> by_hash;
  auto add = [&](SubgroupRec rec) -> bool {
    const std::size_t h = hash_indices(rec.elems);
    for (int i : by_hash[h])
      if (found[i].elems == rec.elems) return false;
    by_hash[h].push_back(static_cast<int>(found.size()));
    found.push_back(std::move(rec));
    return true;
  };

  const int id = ig.index_of.at(Permutation::identity(ig.degree));
  add(SubgroupRec{{}, {id}});
  for (int rep : class_rep) {
    if (rep == id) continue;
    SubgroupRec rec;
    rec.elems = indexed_normal_closure(ig, rep, &rec.gens);
    add(std::move(rec));
  }

  // Join-closure: every normal subgroup is a join of element closures.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::includes(found[i].elems.begin(), found[i].elems.end(),
                        found[j].elems.begin(), found[j].elems.end()) ||
          std::includes(found[j].elems.begin(), found[j].elems.end(),
                        found[i].elems.begin(), found[i].elems.end()))
        continue;
      SubgroupRec rec;
      rec.gens = found[i].gens;
      rec.gens.insert(rec.gens.end(), found[j].gens.begin(), found[j].gens.end());
      std::sort(rec.gens.begin(), rec.gens.end());
      rec.gens.erase(std::unique(rec.gens.begin(), rec.gens.end()), rec.gens.end());
      rec.elems = indexed_close(ig, rec.gens);
      add(std::move(rec));
    }
  }

  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (const auto& rec : found) {
    std::vector<Permutation> elems;
    elems.reserve(rec.elems.size());
    for (int i : rec.elems) elems.push_back(group.elements()[i]);
    out.push_back(PermGroup::from_elements(group.degree(), std::move(elems)));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace og4
