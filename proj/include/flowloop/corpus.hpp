#pragma once

#include <string>
#include <vector>

namespace flowloop {

struct CorpusEntry {
  std::string name;
  std::string braid;
};

/// Homogeneous knot braids used by the invariant suites and golden files.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"unknot", "1"},
      {"trefoil", "1 1 1"},
      {"figure_eight", "1 -2 1 -2"},
      {"stabilized_trefoil", "1 1 1 2"},
      {"cinquefoil", "1 1 1 1 1"},
      {"six_two", "-1 2 -1 2 2 2"},
      {"six_three", "2 -1 2 -1 -1 2"},
      {"trefoil_sum_figure_eight", "1 1 1 2 -3 2 -3"},
  };
  return entries;
}

}  // namespace flowloop
