#include "og4/subgroup_oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "og4/errors.hpp"

namespace og4 {

namespace {

struct Table {
  int n = 0;
  std::vector<int> mul;  // n*n row-major
  std::vector<int> inv;
  int id = 0;

  int at(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
};

Table build_table(const PermGroup& g) {
  const auto& elems = g.elements();
  Table t;
  t.n = static_cast<int>(elems.size());
  std::unordered_map<Permutation, int, PermHash> index;
  for (int i = 0; i < t.n; ++i) index.emplace(elems[i], i);
  t.mul.resize(static_cast<std::size_t>(t.n) * t.n);
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      t.mul[static_cast<std::size_t>(a) * t.n + b] = index.at(elems[a] * elems[b]);
  t.inv.resize(t.n);
  for (int a = 0; a < t.n; ++a) t.inv[a] = index.at(elems[a].inverse());
  t.id = index.at(Permutation::identity(g.degree()));
  return t;
}

std::vector<int> table_close(const Table& t, const std::vector<int>& gens) {
  std::vector<char> seen(t.n, 0);
  std::vector<int> out{t.id};
  seen[t.id] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int g : gens) {
      const int next = t.at(out[k], g);
      if (!seen[next]) {
        seen[next] = 1;
        out.push_back(next);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t hash_indices(const std::vector<int>& v) {
  std::size_t h = 14695981039346656037ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<PermGroup> oracle_normal_subgroups(const PermGroup& group) {
  if (group.order() > 4096)
    throw BoundExceeded("oracle multiplication table limited to small groups");
  const Table t = build_table(group);

  struct Rec {
    std::vector<int> gens;
    std::vector<int> elems;
  };
  std::vector<Rec> subs;
  std::unordered_map<std::size_t, std::vector<int>> by_hash;
  auto add = [&](Rec rec) {
    const std::size_t h = hash_indices(rec.elems);
    for (int i : by_hash[h])
      if (subs[i].elems == rec.elems) return;
    by_hash[h].push_back(static_cast<int>(subs.size()));
    subs.push_back(std::move(rec));
  };

  add(Rec{{}, {t.id}});
  for (int e = 0; e < t.n; ++e) add(Rec{{e}, table_close(t, {e})});

  // Pairwise join closure reaches the full subgroup lattice.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::includes(subs[i].elems.begin(), subs[i].elems.end(), subs[j].elems.begin(),
                        subs[j].elems.end()) ||
          std::includes(subs[j].elems.begin(), subs[j].elems.end(), subs[i].elems.begin(),
                        subs[i].elems.end()))
        continue;
      Rec rec;
      rec.gens = subs[i].gens;
      rec.gens.insert(rec.gens.end(), subs[j].gens.begin(), subs[j].gens.end());
      rec.elems = table_close(t, rec.gens);
      add(std::move(rec));
    }
  }

  std::vector<PermGroup> out;
  for (const auto& rec : subs) {
    bool normal = true;
    for (std::size_t gi = 0; gi < rec.gens.size() && normal; ++gi)
      for (int c = 0; c < t.n && normal; ++c) {
        const int conj = t.at(t.at(t.inv[c], rec.gens[gi]), c);
        if (!std::binary_search(rec.elems.begin(), rec.elems.end(), conj)) normal = false;
      }
    if (!normal) continue;
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

bool same_subgroup_lists(const std::vector<PermGroup>& a, const std::vector<PermGroup>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (a[i].same_elements(b[j])) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace og4
