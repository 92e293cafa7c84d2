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

#ifndef REFPOINT_REFERENCE_POINTS_H_
#define REFPOINT_REFERENCE_POINTS_H_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "refpoint/ca_model.h"

namespace refpoint {

enum class ReferenceRule {
  kFirstPrice,
  kVcg,
  kShapleyPaymentNoAuctioneer,
  kShapleyPayoffNoAuctioneer,
  kShapleyPaymentWithAuctioneer,
  kShapleyPayoffWithAuctioneer,
};

inline constexpr std::array<ReferenceRule, 6> kAllRules = {
    ReferenceRule::kFirstPrice,
    ReferenceRule::kVcg,
    ReferenceRule::kShapleyPaymentNoAuctioneer,
    ReferenceRule::kShapleyPayoffNoAuctioneer,
    ReferenceRule::kShapleyPaymentWithAuctioneer,
    ReferenceRule::kShapleyPayoffWithAuctioneer,
};

// Command-line spelling, e.g. "shapley-no-auctioneer".
std::string_view RuleName(ReferenceRule rule);
std::optional<ReferenceRule> ParseRule(std::string_view name);

// Whether the auctioneer takes part in the coalitional game as an extra
// player whose absence zeroes every coalition's value.
enum class Auctioneer { kExcluded, kIncluded };

enum class VectorKind { kPayment, kPayoff };

struct PaymentVector {
  std::vector<double> values;  // values[id - 1]
  VectorKind kind = VectorKind::kPayment;

  double of(int id) const { return values.at(id - 1); }
  double Sum() const;
};

PaymentVector FirstPrice(const AuctionInstance& instance);
PaymentVector Vcg(const AuctionInstance& instance);

// Shapley value of every bidder in the coalitional value game V.
PaymentVector ShapleyPayoffs(const AuctionInstance& instance,
                             Auctioneer auctioneer);
// Shapley value of the auctioneer (player n + 1) in the with-auctioneer game.
double AuctioneerShapleyPayoff(const AuctionInstance& instance);

// b_i(X_i(b)) - pi_i(b). Not clamped: losers get -pi_i.
PaymentVector ShapleyPayments(const AuctionInstance& instance,
                              Auctioneer auctioneer);

PaymentVector ComputeReference(const AuctionInstance& instance,
                               ReferenceRule rule);

}  // namespace refpoint

#endif  // REFPOINT_REFERENCE_POINTS_H_
