#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "ccsim/combinatorics.hpp"
#include "ccsim/errors.hpp"
#include "ccsim/rng.hpp"

namespace ccsim {

// Identity of one subpacket W_{n,S}: chunk n split along the t-subset S of
// cache profiles. Profiles are 0-based.
struct SubpacketIndex {
  int chunk = 0;
  std::vector<int> profile_set;  // sorted, |S| = t

  auto operator<=>(const SubpacketIndex&) const = default;
};

// t = L*M/N; rejects non-integer values.
inline int compute_t(int num_profiles, int cache_chunks, int total_chunks) {
  if (num_profiles < 1) throw invalid_parameters("L must be >= 1", "L");
  if (cache_chunks <= 0 || cache_chunks >= total_chunks)
    throw invalid_parameters("cache size must satisfy 0 < M < N", "M");
  const long long product = static_cast<long long>(num_profiles) * cache_chunks;
  if (product % total_chunks != 0)
    throw invalid_parameters("L*M/N must be an integer", "t");
  return static_cast<int>(product / total_chunks);
}

// Cache replication parameters. t = 0 is the uncoded single-profile case.
struct PlacementParams {
  int num_profiles = 1;  // L
  int cache_chunks = 1;  // M
  int total_chunks = 2;  // N
  int t = 0;

  static PlacementParams create(int num_profiles, int cache_chunks, int total_chunks) {
    PlacementParams p;
    p.num_profiles = num_profiles;
    p.cache_chunks = cache_chunks;
    p.total_chunks = total_chunks;
    p.t = compute_t(num_profiles, cache_chunks, total_chunks);
    if (p.t >= num_profiles) throw invalid_parameters("t must be < L", "t");
    return p;
  }

  // One profile, whole-chunk caching with no coded gain: a single subpacket
  // per chunk that nobody's cache covers.
  static PlacementParams uncoded() {
    return PlacementParams{1, 1, 2, 0};
  }

  // L and a cache ratio M/N. L=1 maps to the uncoded case for any ratio.
  static PlacementParams from_ratio(int num_profiles, double cache_ratio) {
    if (num_profiles < 1) throw invalid_parameters("L must be >= 1", "L");
    if (!(cache_ratio > 0.0) || !(cache_ratio < 1.0))
      throw invalid_parameters("cache ratio must be in (0, 1)", "cache_ratio");
    if (num_profiles == 1) return uncoded();
    const double t_real = num_profiles * cache_ratio;
    const int t = static_cast<int>(t_real + 0.5);
    if (std::abs(t_real - t) > 1e-9 || t < 1)
      throw invalid_parameters("L * (M/N) must be a positive integer", "cache_ratio");
    if (t >= num_profiles) throw invalid_parameters("t must be < L", "cache_ratio");
    // Nominal (M, N) = (t, L) realizes the ratio exactly.
    return PlacementParams{num_profiles, t, num_profiles, t};
  }
};

// All C(L,t) profile subsets of size t, in lexicographic order.
inline std::vector<std::vector<int>> subpacket_indices(int num_profiles, int t) {
  if (t < 0 || t > num_profiles) throw invalid_parameters("t must satisfy 0 <= t <= L", "t");
  return k_subsets(num_profiles, t);
}

// Profile l caches W_{n,S} iff l is in S.
inline bool cached_at(int profile, const std::vector<int>& profile_set) {
  return std::binary_search(profile_set.begin(), profile_set.end(), profile);
}

// The C(L-1, t) subpackets of `chunk` that profile `l` does not cache.
inline std::vector<SubpacketIndex> missing_subpackets(int profile, int chunk, int num_profiles,
                                                      int t) {
  std::vector<SubpacketIndex> out;
  out.reserve(binomial(num_profiles - 1, t));
  for_each_k_subset(num_profiles, t, [&](const std::vector<int>& s) {
    if (!cached_at(profile, s)) out.push_back(SubpacketIndex{chunk, s});
  });
  return out;
}

// i.i.d. uniform profile assignment over [L], reproducible per seed.
inline std::vector<int> assign_profiles(int num_users, int num_profiles, std::uint64_t seed) {
  if (num_users < 0) throw invalid_parameters("K must be >= 0", "K");
  if (num_profiles < 1) throw invalid_parameters("L must be >= 1", "L");
  Rng rng(seed);
  std::vector<int> assignment(static_cast<std::size_t>(num_users));
  for (auto& a : assignment) a = static_cast<int>(rng.index(static_cast<std::size_t>(num_profiles)));
  return assignment;
}

}  // namespace ccsim
