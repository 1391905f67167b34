#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ccsim {

// C(n, k); returns 0 when k < 0, n < 0 or k > n.
inline std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: the partial product is C(n-k+i, i) * i! / i!.
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

// Advances `subset` (a strictly increasing k-subset of {0..n-1}) to its
// lexicographic successor. Returns false when `subset` was the last one.
inline bool next_k_subset(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  for (int i = k - 1; i >= 0; --i) {
    if (subset[i] < n - k + i) {
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Calls fn(const std::vector<int>&) for every k-subset of {0..n-1} in
// lexicographic order.
template <typename Fn>
inline void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    fn(const_cast<const std::vector<int>&>(subset));
    if (k == 0 || !next_k_subset(subset, n)) break;
  }
}

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  out.reserve(binomial(n, k));
  for_each_k_subset(n, k, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

// All subsets of `items` with size <= max_size, ordered by size then
// lexicographically by position. Includes the empty set.
inline std::vector<std::vector<int>> subsets_up_to(const std::vector<int>& items, int max_size) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(items.size());
  for (int k = 0; k <= std::min(max_size, n); ++k) {
    for_each_k_subset(n, k, [&](const std::vector<int>& positions) {
      std::vector<int> chosen;
      chosen.reserve(positions.size());
      for (int p : positions) chosen.push_back(items[static_cast<std::size_t>(p)]);
      out.push_back(std::move(chosen));
    });
  }
  return out;
}

}  // namespace ccsim
