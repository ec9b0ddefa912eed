#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "og4/families.hpp"
#include "og4/ogpair.hpp"

namespace og4 {

/// On-disk form of an oriented graph--group pair: a versioned JSON
/// document with the vertex count, generator image tables, the arc set,
/// and optional construction provenance and vertex labels. Writing is
/// deterministic (fixed key order, sorted arcs).
struct PairDocument {
  int version = 1;
  int n = 0;
  std::vector<std::vector<int>> generators;
  std::vector<std::pair<int, int>> arcs;
  std::optional<FamilySpec> family;
  std::vector<std::string> labels;

  static PairDocument from_pair(const OrientedPair& pair,
                                std::optional<FamilySpec> family = std::nullopt,
                                std::vector<std::string> labels = {});
  OrientedPair to_pair(DeltaPolicy policy = DeltaPolicy::Require) const;

  static PairDocument parse(const std::string& text);
  static PairDocument read_file(const std::string& path);
  std::string dump() const;
  void write_file(const std::string& path) const;
};

}  // namespace og4
