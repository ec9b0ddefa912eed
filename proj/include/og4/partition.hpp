#pragma once

#include <vector>

namespace og4 {

/// A partition of {0..n-1} into disjoint cells covering the whole range.
/// Cells are kept sorted internally and ordered by their minimum point,
/// so cell 0 always contains point 0.
class Partition {
 public:
  Partition() = default;
  static Partition from_cells(int point_count, std::vector<std::vector<int>> cells);
  static Partition singletons(int point_count);

  int point_count() const { return static_cast<int>(cell_of_.size()); }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& cell(int c) const { return cells_[c]; }
  int cell_of(int point) const { return cell_of_[point]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_;
};

}  // namespace og4
