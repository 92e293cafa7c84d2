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

#include "refpoint/reference_points.h"

#include <numeric>

namespace refpoint {

namespace {

struct RuleSpelling {
  ReferenceRule rule;
  std::string_view name;
};

constexpr std::array<RuleSpelling, 6> kSpellings = {{
    {ReferenceRule::kFirstPrice, "first-price"},
    {ReferenceRule::kVcg, "vcg"},
    {ReferenceRule::kShapleyPaymentNoAuctioneer, "shapley-no-auctioneer"},
    {ReferenceRule::kShapleyPayoffNoAuctioneer, "shapley-payoff-no-auctioneer"},
    {ReferenceRule::kShapleyPaymentWithAuctioneer, "shapley-with-auctioneer"},
    {ReferenceRule::kShapleyPayoffWithAuctioneer,
     "shapley-payoff-with-auctioneer"},
}};

double Factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void CheckShapleyScale(const AuctionInstance& instance) {
  if (instance.num_bidders() > kMaxBidders) {
    throw SizeLimitError("Shapley computation limited to 12 bidders");
  }
}

}  // namespace

std::string_view RuleName(ReferenceRule rule) {
  for (const auto& s : kSpellings) {
    if (s.rule == rule) return s.name;
  }
  return "unknown";
}

std::optional<ReferenceRule> ParseRule(std::string_view name) {
  for (const auto& s : kSpellings) {
    if (s.name == name) return s.rule;
  }
  return std::nullopt;
}

double PaymentVector::Sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

PaymentVector FirstPrice(const AuctionInstance& instance) {
  const Allocation x = WinnerDetermination(instance);
  PaymentVector p;
  for (const Award& award : x.awards) p.values.push_back(award.value);
  return p;
}

PaymentVector Vcg(const AuctionInstance& instance) {
  const Allocation x = WinnerDetermination(instance);
  const Coalition all = instance.AllBidders();
  PaymentVector p;
  for (int id = 1; id <= instance.num_bidders(); ++id) {
    const Coalition others = all.Without(id);
    p.values.push_back(CoalitionalValue(instance, others) -
                       RealizedWelfare(instance, others, x));
  }
  return p;
}

PaymentVector ShapleyPayoffs(const AuctionInstance& instance,
                             Auctioneer auctioneer) {
  CheckShapleyScale(instance);
  const int n = instance.num_bidders();
  const std::vector<double> v = AllCoalitionalValues(instance);

  // weight[s] for a coalition S of size s not containing i. With the
  // auctioneer present, S implicitly includes it, so the game has n + 1
  // players and S grows by one.
  std::vector<double> weight(n, 0.0);
  for (int s = 0; s < n; ++s) {
    weight[s] = auctioneer == Auctioneer::kExcluded
                    ? Factorial(s) * Factorial(n - s - 1) / Factorial(n)
                    : Factorial(s + 1) * Factorial(n - s - 1) / Factorial(n + 1);
  }

  PaymentVector pi{std::vector<double>(n, 0.0), VectorKind::kPayoff};
  for (int id = 1; id <= n; ++id) {
    const std::uint32_t bit = std::uint32_t{1} << (id - 1);
    double total = 0.0;
    for (std::uint32_t s = 0; s < v.size(); ++s) {
      if (s & bit) continue;
      total += weight[Coalition::FromMask(s).size()] * (v[s | bit] - v[s]);
    }
    pi.values[id - 1] = total;
  }
  return pi;
}

double AuctioneerShapleyPayoff(const AuctionInstance& instance) {
  CheckShapleyScale(instance);
  const int n = instance.num_bidders();
  const std::vector<double> v = AllCoalitionalValues(instance);
  // The auctioneer's marginal contribution to bidder set S is V_S, since
  // S alone is worth nothing.
  double total = 0.0;
  for (std::uint32_t s = 0; s < v.size(); ++s) {
    const int size = Coalition::FromMask(s).size();
    total += Factorial(size) * Factorial(n - size) / Factorial(n + 1) * v[s];
  }
  return total;
}

PaymentVector ShapleyPayments(const AuctionInstance& instance,
                              Auctioneer auctioneer) {
  const PaymentVector winnings = FirstPrice(instance);
  const PaymentVector pi = ShapleyPayoffs(instance, auctioneer);
  PaymentVector p;
  for (std::size_t i = 0; i < pi.values.size(); ++i) {
    p.values.push_back(winnings.values[i] - pi.values[i]);
  }
  return p;
}

PaymentVector ComputeReference(const AuctionInstance& instance,
                               ReferenceRule rule) {
  switch (rule) {
    case ReferenceRule::kFirstPrice:
      return FirstPrice(instance);
    case ReferenceRule::kVcg:
      return Vcg(instance);
    case ReferenceRule::kShapleyPaymentNoAuctioneer:
      return ShapleyPayments(instance, Auctioneer::kExcluded);
    case ReferenceRule::kShapleyPayoffNoAuctioneer:
      return ShapleyPayoffs(instance, Auctioneer::kExcluded);
    case ReferenceRule::kShapleyPaymentWithAuctioneer:
      return ShapleyPayments(instance, Auctioneer::kIncluded);
    case ReferenceRule::kShapleyPayoffWithAuctioneer:
      return ShapleyPayoffs(instance, Auctioneer::kIncluded);
  }
  return {};
}

}  // namespace refpoint
