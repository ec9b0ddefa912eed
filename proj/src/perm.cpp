#include "og4/perm.hpp"

#include <algorithm>
#include <numeric>

#include "og4/errors.hpp"

namespace og4 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x]) throw Error("permutation image table is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw Error("cycle entry out of range");
      p.images_[from] = to;
    }
  }
  return Permutation(std::move(p.images_));  // re-validate
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::operator*(const Permutation& then) const {
  if (degree() != then.degree()) throw DegreeMismatch("composing permutations of different degree");
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[i] = then.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::conjugated_by(const Permutation& h) const {
  return h.inverse() * (*this) * h;
}

Permutation Permutation::power(int k) const {
  if (k < 0) return inverse().power(-k);
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

int Permutation::order() const {
  int ord = 1;
  for (const auto& cyc : cycles(false)) ord = std::lcm(ord, static_cast<int>(cyc.size()));
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int x = i;
    do {
      seen[x] = 1;
      cyc.push_back(x);
      x = images_[x];
    } while (x != i);
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace og4
