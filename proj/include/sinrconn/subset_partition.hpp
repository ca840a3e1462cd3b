#pragma once

#include "sinrconn/errors.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sinrconn {

struct SubsetPartition {
  int blocks = 0;
  std::vector<std::uint32_t> masks;  // one bitmask per block over the item indices
};

// Exact minimum number of blocks covering items 0..n-1 such that every block
// is admissible. Dynamic program over subsets (O(3^n)); admissibility does not
// need to be monotone. Returns nullopt if some item cannot be placed at all.
template <class Admissible>
std::optional<SubsetPartition> min_subset_partition(int n, Admissible&& admissible, int max_items) {
  if (n < 0 || n > max_items || n > 20) {
    throw PreconditionError("exhaustive partition search limited to " + std::to_string(max_items) + " items");
  }
  const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
  std::vector<char> ok(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t m = 1; m <= full; ++m) ok[m] = admissible(m) ? 1 : 0;

  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> best(static_cast<std::size_t>(full) + 1, kInf);
  std::vector<std::uint32_t> choice(static_cast<std::size_t>(full) + 1, 0);
  best[0] = 0;
  for (std::uint32_t m = 1; m <= full; ++m) {
    const std::uint32_t low = m & (~m + 1u);
    const std::uint32_t rest = m ^ low;
    // Enumerate submasks of `rest`, always adding the lowest item of m.
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
      const std::uint32_t block = s | low;
      if (ok[block] && best[m ^ block] + 1 < best[m]) {
        best[m] = best[m ^ block] + 1;
        choice[m] = block;
      }
      if (s == 0) break;
    }
  }
  if (best[full] >= kInf) return std::nullopt;
  SubsetPartition out;
  out.blocks = best[full];
  for (std::uint32_t m = full; m != 0; m ^= choice[m]) out.masks.push_back(choice[m]);
  return out;
}

}  // namespace sinrconn
