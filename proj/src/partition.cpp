#include "og4/partition.hpp"

#include <algorithm>

#include "og4/errors.hpp"

namespace og4 {

Partition Partition::from_cells(int point_count, std::vector<std::vector<int>> cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Partition p;
  p.cell_of_.assign(point_count, -1);
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    if (cells[ci].empty()) throw Error("partition cell is empty");
    for (int x : cells[ci]) {
      if (x < 0 || x >= point_count || p.cell_of_[x] != -1)
        throw Error("partition cells are not disjoint subsets of the point range");
      p.cell_of_[x] = static_cast<int>(ci);
    }
  }
  for (int x = 0; x < point_count; ++x)
    if (p.cell_of_[x] == -1) throw Error("partition cells do not cover all points");
  p.cells_ = std::move(cells);
  return p;
}

Partition Partition::singletons(int point_count) {
  std::vector<std::vector<int>> cells(point_count);
  for (int i = 0; i < point_count; ++i) cells[i] = {i};
  return from_cells(point_count, std::move(cells));
}

}  // namespace og4
