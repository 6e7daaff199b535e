#pragma once

#include <cstddef>
#include <vector>

#include "minkarr/arrangement.hpp"

namespace minkarr {

struct CoverResult {
  /// Indices into the family, in selection order (non-increasing ratio).
  std::vector<std::size_t> selected_indices;
  /// covered_by[i] is the selected member that first covered center i.
  std::vector<std::size_t> covered_by;
};

// Greedy strict cover of the member centers. Members are visited by
// non-increasing ratio (ties by lower index); a member is selected when its
// own center is not yet covered by an earlier selection. The selected members
// cover every center and contain none of each other's centers.
//
// Runs in O(n log n + n * k) for k selected members.
CoverResult greedy_cover(const Family& family, const TolerancePolicy& tol = {});

}  // namespace minkarr
