#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace og4 {

/// A permutation of {0..n-1} stored as an image table.
/// Composition is left-to-right: (g * h) maps x to h(g(x)), so that
/// exponent notation x^(gh) = (x^g)^h reads off directly.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Build from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& then) const;
  /// g^h = h^{-1} g h.
  Permutation conjugated_by(const Permutation& h) const;
  Permutation power(int k) const;
  int order() const;
  /// Cycle decomposition; fixed points included only when asked.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace og4
