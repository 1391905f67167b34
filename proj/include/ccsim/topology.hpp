#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccsim/errors.hpp"
#include "ccsim/geometry.hpp"
#include "ccsim/rng.hpp"

namespace ccsim {

// Sorted list of user indices.
using UserSet = std::vector<int>;

inline bool set_contains(const UserSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

struct ActivationPattern {
  std::vector<bool> bits;

  static ActivationPattern from_mask(std::uint64_t mask, int num_helpers) {
    ActivationPattern p;
    p.bits.resize(static_cast<std::size_t>(num_helpers));
    for (int i = 0; i < num_helpers; ++i) p.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return p;
  }

  bool active(int helper) const { return bits[static_cast<std::size_t>(helper)]; }
  int size() const { return static_cast<int>(bits.size()); }

  std::vector<int> active_helpers() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (bits[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int i = 0; i < size(); ++i)
      if (bits[static_cast<std::size_t>(i)]) m |= (1ull << i);
    return m;
  }

  bool operator==(const ActivationPattern& other) const = default;
};

// Per-helper nulling sets Z_i. Entry i is meaningful only when helper i is
// active; inactive helpers must have empty sets.
struct NullingPlan {
  std::vector<UserSet> nulled;  // size H, each sorted

  static NullingPlan empty_plan(int num_helpers) {
    NullingPlan p;
    p.nulled.resize(static_cast<std::size_t>(num_helpers));
    return p;
  }

  const UserSet& at(int helper) const { return nulled[static_cast<std::size_t>(helper)]; }

  bool empty() const {
    return std::all_of(nulled.begin(), nulled.end(), [](const UserSet& z) { return z.empty(); });
  }

  bool operator==(const NullingPlan& other) const = default;
};

// Geometric (or explicitly wired) network: helpers, users, and the
// transmission / interference reachability relations between them.
// Immutable after construction.
class NetworkTopology {
 public:
  static NetworkTopology from_coordinates(std::vector<Point2D> helpers, std::vector<Point2D> users,
                                          double r_trans, double r_inter) {
    check_radii(r_trans, r_inter);
    NetworkTopology t;
    t.helpers_ = std::move(helpers);
    t.users_ = std::move(users);
    t.r_trans_ = r_trans;
    t.r_inter_ = r_inter;
    t.has_coordinates_ = true;
    const int h = static_cast<int>(t.helpers_.size());
    const int k = static_cast<int>(t.users_.size());
    t.trans_.assign(static_cast<std::size_t>(h), std::vector<char>(static_cast<std::size_t>(k), 0));
    t.inter_ = t.trans_;
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < k; ++j) {
        const double d = distance(t.helpers_[static_cast<std::size_t>(i)],
                                  t.users_[static_cast<std::size_t>(j)]);
        // Boundary counts as inside.
        t.trans_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d <= r_trans;
        t.inter_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d <= r_inter;
      }
    }
    return t;
  }

  // Explicit reachability lists, one per helper.
  static NetworkTopology from_reachability(int num_helpers, int num_users,
                                           const std::vector<UserSet>& in_trans,
                                           const std::vector<UserSet>& in_inter,
                                           double r_trans = 1.0, double r_inter = 1.2) {
    check_radii(r_trans, r_inter);
    if (static_cast<int>(in_trans.size()) != num_helpers ||
        static_cast<int>(in_inter.size()) != num_helpers)
      throw invalid_topology("reachability lists must have one entry per helper");
    NetworkTopology t;
    t.r_trans_ = r_trans;
    t.r_inter_ = r_inter;
    t.has_coordinates_ = false;
    t.trans_.assign(static_cast<std::size_t>(num_helpers),
                    std::vector<char>(static_cast<std::size_t>(num_users), 0));
    t.inter_ = t.trans_;
    auto fill = [&](std::vector<std::vector<char>>& m, const std::vector<UserSet>& lists) {
      for (int i = 0; i < num_helpers; ++i) {
        for (int u : lists[static_cast<std::size_t>(i)]) {
          if (u < 0 || u >= num_users) throw invalid_topology("user index out of range");
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] = 1;
        }
      }
    };
    fill(t.trans_, in_trans);
    fill(t.inter_, in_inter);
    for (int i = 0; i < num_helpers; ++i)
      for (int u = 0; u < num_users; ++u)
        if (t.trans_[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] &&
            !t.inter_[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)])
          throw invalid_topology("transmission reach must be contained in interference reach");
    return t;
  }

  int num_helpers() const { return static_cast<int>(trans_.size()); }
  int num_users() const { return trans_.empty() ? 0 : static_cast<int>(trans_[0].size()); }
  double r_trans() const { return r_trans_; }
  double r_inter() const { return r_inter_; }
  bool has_coordinates() const { return has_coordinates_; }
  const std::vector<Point2D>& helper_positions() const { return helpers_; }
  const std::vector<Point2D>& user_positions() const { return users_; }

  bool in_trans(int helper, int user) const {
    return trans_[static_cast<std::size_t>(helper)][static_cast<std::size_t>(user)];
  }
  bool in_inter(int helper, int user) const {
    return inter_[static_cast<std::size_t>(helper)][static_cast<std::size_t>(user)];
  }

  UserSet trans_set(int helper) const {
    UserSet s;
    for (int u = 0; u < num_users(); ++u)
      if (in_trans(helper, u)) s.push_back(u);
    return s;
  }
  UserSet inter_set(int helper) const {
    UserSet s;
    for (int u = 0; u < num_users(); ++u)
      if (in_inter(helper, u)) s.push_back(u);
    return s;
  }

 private:
  static void check_radii(double r_trans, double r_inter) {
    if (!(r_trans > 0.0)) throw invalid_topology("r_trans must be positive");
    if (r_inter < r_trans) throw invalid_topology("r_inter must be >= r_trans");
  }

  std::vector<Point2D> helpers_;
  std::vector<Point2D> users_;
  double r_trans_ = 1.0;
  double r_inter_ = 1.2;
  bool has_coordinates_ = false;
  std::vector<std::vector<char>> trans_;  // [helper][user]
  std::vector<std::vector<char>> inter_;
};

// Poisson user placement: user count ~ Poisson(U * H), positions uniform on
// the union of helper transmission disks (rejection sampling over the
// bounding box). Reproducible for a given seed.
inline std::vector<Point2D> place_users(const std::vector<Point2D>& helpers, double r_trans,
                                        double users_per_helper, std::uint64_t seed) {
  if (helpers.empty()) throw invalid_topology("cannot place users without helpers");
  if (users_per_helper < 0.0)
    throw invalid_parameters("users_per_helper must be >= 0", "users_per_helper");
  Rng rng(seed);
  const double mean = users_per_helper * static_cast<double>(helpers.size());
  const int count = rng.poisson(mean);

  double min_x = helpers[0].x, max_x = helpers[0].x;
  double min_y = helpers[0].y, max_y = helpers[0].y;
  for (const auto& h : helpers) {
    min_x = std::min(min_x, h.x);
    max_x = std::max(max_x, h.x);
    min_y = std::min(min_y, h.y);
    max_y = std::max(max_y, h.y);
  }
  min_x -= r_trans;
  max_x += r_trans;
  min_y -= r_trans;
  max_y += r_trans;

  std::vector<Point2D> users;
  users.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(users.size()) < count) {
    Point2D p{rng.uniform(min_x, max_x), rng.uniform(min_y, max_y)};
    const bool covered = std::any_of(helpers.begin(), helpers.end(), [&](const Point2D& h) {
      return distance(h, p) <= r_trans;
    });
    if (covered) users.push_back(p);
  }
  return users;
}

// Served-candidate sets U_i for every active helper: users inside the
// helper's transmission range that the helper does not null itself, and that
// no other active helper interferes with (unless that helper nulls them).
inline std::map<int, UserSet> coverage_sets(const NetworkTopology& topology,
                                            const ActivationPattern& pattern,
                                            const NullingPlan& nulling) {
  if (pattern.size() != topology.num_helpers())
    throw invalid_parameters("activation pattern length must equal helper count", "pattern");
  if (static_cast<int>(nulling.nulled.size()) != topology.num_helpers())
    throw inconsistent_policy("nulling plan length must equal helper count");
  for (int i = 0; i < topology.num_helpers(); ++i)
    if (!pattern.active(i) && !nulling.at(i).empty())
      throw inconsistent_policy("nulling plan references inactive helper");

  const std::vector<int> active = pattern.active_helpers();
  std::map<int, UserSet> coverage;
  for (int i : active) {
    UserSet& u_i = coverage[i];
    for (int k = 0; k < topology.num_users(); ++k) {
      if (!topology.in_trans(i, k)) continue;
      if (set_contains(nulling.at(i), k)) continue;  // own signal suppressed at k
      bool blocked = false;
      for (int other : active) {
        if (other == i) continue;
        if (topology.in_inter(other, k) && !set_contains(nulling.at(other), k)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) u_i.push_back(k);
    }
  }
  return coverage;
}

// Interference-nulling candidates I_i: users in the interference range of
// active helper i that lie in the transmission range of another active
// helper.
inline std::map<int, UserSet> interference_candidates(const NetworkTopology& topology,
                                                      const ActivationPattern& pattern) {
  if (pattern.size() != topology.num_helpers())
    throw invalid_parameters("activation pattern length must equal helper count", "pattern");
  const std::vector<int> active = pattern.active_helpers();
  std::map<int, UserSet> result;
  for (int i : active) {
    UserSet& set = result[i];
    for (int k = 0; k < topology.num_users(); ++k) {
      if (!topology.in_inter(i, k)) continue;
      for (int other : active) {
        if (other != i && topology.in_trans(other, k)) {
          set.push_back(k);
          break;
        }
      }
    }
  }
  return result;
}

// The fixed two-helper, five-user example network, wired explicitly.
struct Figure1Instance {
  NetworkTopology topology;
  std::vector<int> profiles;  // user -> profile, 0-based
  int num_profiles = 0;
};

inline Figure1Instance canonical_figure1() {
  Figure1Instance instance{
      NetworkTopology::from_reachability(
          2, 5,
          {{0, 1, 2}, {2, 3, 4}},      // in_trans
          {{0, 1, 2}, {1, 2, 3, 4}}),  // in_inter
      {0, 2, 1, 0, 1},
      3};
  return instance;
}

}  // namespace ccsim
