#include "minkarr/cover.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace minkarr {

CoverResult greedy_cover(const Family& family, const TolerancePolicy& tol) {
  constexpr std::size_t kUncovered = std::numeric_limits<std::size_t>::max();
  const std::size_t n = family.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family[a].ratio() > family[b].ratio();
  });

  CoverResult result;
  result.covered_by.assign(n, kUncovered);
  for (std::size_t i : order) {
    if (result.covered_by[i] != kUncovered) continue;
    result.selected_indices.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (result.covered_by[j] == kUncovered &&
          contains(family.body(), family[i], family[j].center(), tol)) {
        result.covered_by[j] = i;
      }
    }
  }
  return result;
}

}  // namespace minkarr
