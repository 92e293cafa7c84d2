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

#include "refpoint/ca_model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include <fmt/format.h>

namespace refpoint {

Coalition Coalition::Of(std::initializer_list<int> ids) {
  return Of(std::vector<int>(ids));
}

Coalition Coalition::Of(const std::vector<int>& ids) {
  std::uint32_t mask = 0;
  for (int id : ids) {
    if (id < 1 || id > 32) {
      throw InvalidCoalitionError(fmt::format("bidder id {} out of range", id));
    }
    mask |= std::uint32_t{1} << (id - 1);
  }
  return FromMask(mask);
}

int Coalition::size() const { return std::popcount(mask_); }

bool Coalition::Contains(int id) const {
  return id >= 1 && id <= 32 && ((mask_ >> (id - 1)) & 1u) != 0;
}

Coalition Coalition::With(int id) const { return *this | Of({id}); }

Coalition Coalition::Without(int id) const {
  return FromMask(mask_ & ~Of({id}).mask_);
}

int Coalition::MaxId() const { return 32 - std::countl_zero(mask_); }

std::vector<int> Coalition::Ids() const {
  std::vector<int> ids;
  for (int id = 1; id <= 32; ++id) {
    if (Contains(id)) ids.push_back(id);
  }
  return ids;
}

std::string ToString(Coalition c) {
  return fmt::format("{{{}}}", fmt::join(c.Ids(), ","));
}

LlgBidProfile::LlgBidProfile(double a, double b, double g)
    : a_(a), b_(b), g_(g) {
  for (double v : {a, b, g}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidInstanceError(
          fmt::format("LLG bids must be finite and non-negative, got ({}, {}, {})",
                      a, b, g));
    }
  }
}

AuctionInstance::AuctionInstance(std::vector<std::string> goods,
                                 std::vector<Bidder> bidders)
    : goods_(std::move(goods)), bidders_(std::move(bidders)) {
  if (static_cast<int>(goods_.size()) > kMaxGoods) {
    throw SizeLimitError(fmt::format("{} goods exceeds the cap of {}",
                                     goods_.size(), kMaxGoods));
  }
  if (static_cast<int>(bidders_.size()) > kMaxBidders) {
    throw SizeLimitError(fmt::format("{} bidders exceeds the cap of {}",
                                     bidders_.size(), kMaxBidders));
  }
  std::map<std::string, int> good_index;
  for (int k = 0; k < static_cast<int>(goods_.size()); ++k) {
    if (!good_index.emplace(goods_[k], k).second) {
      throw InvalidInstanceError(fmt::format("duplicate good '{}'", goods_[k]));
    }
  }
  std::sort(bidders_.begin(), bidders_.end(),
            [](const Bidder& x, const Bidder& y) { return x.id < y.id; });
  for (int i = 0; i < static_cast<int>(bidders_.size()); ++i) {
    if (bidders_[i].id != i + 1) {
      throw InvalidInstanceError(
          "bidder ids must be unique and dense 1..n");
    }
  }
  masks_.reserve(bidders_.size());
  for (const Bidder& bidder : bidders_) {
    std::vector<std::uint32_t>& masks = masks_.emplace_back();
    for (const AtomicBid& bid : bidder.bids) {
      if (!std::isfinite(bid.value) || bid.value < 0.0) {
        throw InvalidInstanceError(fmt::format(
            "bidder {} has an invalid bid value {}", bidder.id, bid.value));
      }
      std::uint32_t mask = 0;
      for (const std::string& good : bid.bundle) {
        auto it = good_index.find(good);
        if (it == good_index.end()) {
          throw InvalidInstanceError(fmt::format(
              "bidder {} bids on undeclared good '{}'", bidder.id, good));
        }
        mask |= std::uint32_t{1} << it->second;
      }
      masks.push_back(mask);
    }
  }
}

AuctionInstance AuctionInstance::Llg(const LlgBidProfile& profile) {
  return AuctionInstance(
      {"1", "2"}, {Bidder{1, {AtomicBid{{"1"}, profile.a()}}},
                   Bidder{2, {AtomicBid{{"2"}, profile.b()}}},
                   Bidder{3, {AtomicBid{{"1", "2"}, profile.g()}}}});
}

void AuctionInstance::CheckCoalition(Coalition k) const {
  if (!k.IsSubsetOf(AllBidders())) {
    throw InvalidCoalitionError(fmt::format(
        "coalition {} names bidders outside 1..{}", ToString(k),
        num_bidders()));
  }
}

std::vector<std::string> Allocation::BundleOf(const AuctionInstance& instance,
                                              int id) const {
  std::vector<std::string> bundle;
  const std::uint32_t goods = award(id).goods;
  for (int k = 0; k < instance.num_goods(); ++k) {
    if ((goods >> k) & 1u) bundle.push_back(instance.goods()[k]);
  }
  return bundle;
}

namespace {

// best[i][used]: maximum welfare obtainable from bidders i+1..n in `k` when
// the goods in `used` are already taken.
class WelfareTable {
 public:
  WelfareTable(const AuctionInstance& instance, Coalition k)
      : instance_(instance),
        k_(k),
        width_(std::size_t{1} << instance.num_goods()),
        best_((instance.num_bidders() + 1) * width_, 0.0) {
    for (int i = instance.num_bidders() - 1; i >= 0; --i) {
      const int id = i + 1;
      const auto& bids = instance.bidder(id).bids;
      for (std::uint32_t used = 0; used < width_; ++used) {
        double value = at(i + 1, used);
        if (k.Contains(id)) {
          for (int j = 0; j < static_cast<int>(bids.size()); ++j) {
            const std::uint32_t mask = instance.BundleMask(id, j);
            if ((mask & used) != 0) continue;
            value = std::max(value, bids[j].value + at(i + 1, used | mask));
          }
        }
        best_[i * width_ + used] = value;
      }
    }
  }

  double at(int i, std::uint32_t used) const { return best_[i * width_ + used]; }

  Allocation Reconstruct() const {
    const int n = instance_.num_bidders();
    Allocation allocation;
    allocation.awards.resize(n);
    std::uint32_t used = 0;
    double remaining = at(0, 0);
    for (int i = 0; i < n; ++i) {
      const int id = i + 1;
      if (!k_.Contains(id)) continue;
      const auto& bids = instance_.bidder(id).bids;
      for (int j = 0; j < static_cast<int>(bids.size()); ++j) {
        const std::uint32_t mask = instance_.BundleMask(id, j);
        if ((mask & used) != 0) continue;
        if (bids[j].value + at(i + 1, used | mask) >= remaining - kTolerance) {
          allocation.awards[i] = Award{j, mask, bids[j].value};
          used |= mask;
          remaining -= bids[j].value;
          allocation.welfare += bids[j].value;
          break;
        }
      }
    }
    return allocation;
  }

 private:
  const AuctionInstance& instance_;
  Coalition k_;
  std::size_t width_;
  std::vector<double> best_;
};

}  // namespace

Allocation WinnerDetermination(const AuctionInstance& instance) {
  return WinnerDetermination(instance, instance.AllBidders());
}

Allocation WinnerDetermination(const AuctionInstance& instance, Coalition k) {
  instance.CheckCoalition(k);
  return WelfareTable(instance, k).Reconstruct();
}

double CoalitionalValue(const AuctionInstance& instance, Coalition k) {
  instance.CheckCoalition(k);
  return WelfareTable(instance, k).at(0, 0);
}

std::vector<double> AllCoalitionalValues(const AuctionInstance& instance) {
  const std::uint32_t count = std::uint32_t{1} << instance.num_bidders();
  std::vector<double> values(count, 0.0);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    values[mask] = WelfareTable(instance, Coalition::FromMask(mask)).at(0, 0);
  }
  return values;
}

double RealizedWelfare(const AuctionInstance& instance, Coalition k,
                       const Allocation& allocation) {
  instance.CheckCoalition(k);
  double welfare = 0.0;
  for (int id : k.Ids()) welfare += allocation.award(id).value;
  return welfare;
}

}  // namespace refpoint
