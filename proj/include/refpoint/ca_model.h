// Copyright 2026 The refpoint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REFPOINT_CA_MODEL_H_
#define REFPOINT_CA_MODEL_H_

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace refpoint {

// Absolute tolerance for all floating-point comparisons in the library.
inline constexpr double kTolerance = 1e-9;

// Exhaustive-search scale caps.
inline constexpr int kMaxBidders = 12;
inline constexpr int kMaxGoods = 8;

class InvalidInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class InvalidCoalitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set of bidders, stored as a bitmask where bit (id - 1) marks bidder `id`.
class Coalition {
 public:
  constexpr Coalition() = default;

  static constexpr Coalition FromMask(std::uint32_t mask) {
    Coalition c;
    c.mask_ = mask;
    return c;
  }
  // Bidders 1..n.
  static constexpr Coalition All(int n) {
    return FromMask(n >= 32 ? ~std::uint32_t{0}
                            : (std::uint32_t{1} << n) - 1);
  }
  static Coalition Of(std::initializer_list<int> ids);
  static Coalition Of(const std::vector<int>& ids);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const;
  bool Contains(int id) const;
  Coalition With(int id) const;
  Coalition Without(int id) const;
  // Largest bidder id in the set, 0 when empty.
  int MaxId() const;
  // Ascending bidder ids.
  std::vector<int> Ids() const;

  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr Coalition operator|(Coalition x, Coalition y) {
    return FromMask(x.mask_ | y.mask_);
  }
  friend constexpr Coalition operator&(Coalition x, Coalition y) {
    return FromMask(x.mask_ & y.mask_);
  }
  // Complement relative to `universe`.
  constexpr Coalition ComplementIn(Coalition universe) const {
    return FromMask(universe.mask_ & ~mask_);
  }
  constexpr bool IsSubsetOf(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }

 private:
  std::uint32_t mask_ = 0;
};

std::string ToString(Coalition c);  // e.g. "{1,3}"

// Bid vector (A, B, G) of the Local-Local-Global domain: bidder 1 bids A on
// good 1, bidder 2 bids B on good 2, bidder 3 bids G on both.
class LlgBidProfile {
 public:
  // Throws InvalidInstanceError unless all three bids are finite and >= 0.
  LlgBidProfile(double a, double b, double g);

  double a() const { return a_; }
  double b() const { return b_; }
  double g() const { return g_; }

  // (B, A, G): the two local bidders trade places.
  LlgBidProfile Mirrored() const { return {b_, a_, g_}; }
  LlgBidProfile Scaled(double factor) const {
    return {a_ * factor, b_ * factor, g_ * factor};
  }
  // Locals win when A + B >= G; ties go to the locals.
  bool LocalsWin() const { return a_ + b_ >= g_; }

  friend bool operator==(const LlgBidProfile&, const LlgBidProfile&) = default;

 private:
  double a_;
  double b_;
  double g_;
};

struct AtomicBid {
  std::vector<std::string> bundle;
  double value = 0.0;
};

struct Bidder {
  int id = 0;
  // XOR semantics: the bidder wins at most one of these.
  std::vector<AtomicBid> bids;
};

// A small combinatorial auction with XOR bids. Construction validates every
// invariant, so a live instance is always well-formed.
class AuctionInstance {
 public:
  AuctionInstance(std::vector<std::string> goods, std::vector<Bidder> bidders);

  // Goods "1" and "2"; bidder 1 bids A on {1}, bidder 2 bids B on {2},
  // bidder 3 bids G on {1,2}.
  static AuctionInstance Llg(const LlgBidProfile& profile);

  int num_bidders() const { return static_cast<int>(bidders_.size()); }
  int num_goods() const { return static_cast<int>(goods_.size()); }
  const std::vector<std::string>& goods() const { return goods_; }
  const std::vector<Bidder>& bidders() const { return bidders_; }
  const Bidder& bidder(int id) const { return bidders_.at(id - 1); }
  Coalition AllBidders() const { return Coalition::All(num_bidders()); }

  // Bitmask over goods (bit k = goods()[k]) of the given atomic bid.
  std::uint32_t BundleMask(int bidder_id, int bid_index) const {
    return masks_.at(bidder_id - 1).at(bid_index);
  }

  // Throws InvalidCoalitionError if `k` names a bidder outside 1..n.
  void CheckCoalition(Coalition k) const;

 private:
  std::vector<std::string> goods_;
  std::vector<Bidder> bidders_;  // sorted so that bidders_[i].id == i + 1
  std::vector<std::vector<std::uint32_t>> masks_;
};

struct Award {
  int bid_index = -1;  // -1: wins nothing
  std::uint32_t goods = 0;
  double value = 0.0;

  bool wins() const { return bid_index >= 0; }
};

struct Allocation {
  std::vector<Award> awards;  // awards[id - 1]
  double welfare = 0.0;

  const Award& award(int id) const { return awards.at(id - 1); }
  std::vector<std::string> BundleOf(const AuctionInstance& instance,
                                    int id) const;
};

// Welfare-maximizing feasible allocation. Among allocations whose welfare is
// within kTolerance of the maximum, returns the lexicographically smallest
// choice vector over bidder ids, where each bidder's listed bids precede
// winning nothing. In LLG this makes the locals win at A + B = G.
Allocation WinnerDetermination(const AuctionInstance& instance);

// Same search with every bidder outside `k` removed.
Allocation WinnerDetermination(const AuctionInstance& instance, Coalition k);

// V_K: welfare the bidders in `k` achieve on their own.
double CoalitionalValue(const AuctionInstance& instance, Coalition k);

// V_K for every K, indexed by Coalition::mask().
std::vector<double> AllCoalitionalValues(const AuctionInstance& instance);

// W_K: value the bidders in `k` receive under `allocation`.
double RealizedWelfare(const AuctionInstance& instance, Coalition k,
                       const Allocation& allocation);

}  // namespace refpoint

#endif  // REFPOINT_CA_MODEL_H_
