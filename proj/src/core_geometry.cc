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

#include "refpoint/core_geometry.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace refpoint {

std::string_view ConstraintKindName(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kBlockingCoalition:
      return "blocking_coalition";
    case ConstraintKind::kIndividualRationality:
      return "individual_rationality";
    case ConstraintKind::kNonNegativity:
      return "non_negativity";
  }
  return "unknown";
}

std::vector<CoreConstraint> CoreConstraints(const AuctionInstance& instance) {
  const Allocation x = WinnerDetermination(instance);
  const std::vector<double> v = AllCoalitionalValues(instance);
  const Coalition all = instance.AllBidders();

  std::vector<CoreConstraint> rows;
  for (std::uint32_t mask = 0; mask < all.mask(); ++mask) {
    const Coalition blocking = Coalition::FromMask(mask);
    rows.push_back(CoreConstraint{
        ConstraintKind::kBlockingCoalition, blocking,
        blocking.ComplementIn(all), Sense::kAtLeast,
        v[mask] - RealizedWelfare(instance, blocking, x)});
  }
  for (int id = 1; id <= instance.num_bidders(); ++id) {
    rows.push_back(CoreConstraint{ConstraintKind::kIndividualRationality, {},
                                  Coalition::Of({id}), Sense::kAtMost,
                                  x.award(id).value});
  }
  for (int id = 1; id <= instance.num_bidders(); ++id) {
    rows.push_back(CoreConstraint{ConstraintKind::kNonNegativity, {},
                                  Coalition::Of({id}), Sense::kAtLeast, 0.0});
  }
  return rows;
}

std::vector<CoreViolation> CoreViolations(const AuctionInstance& instance,
                                          const PaymentVector& payments) {
  if (static_cast<int>(payments.values.size()) != instance.num_bidders()) {
    throw std::invalid_argument(fmt::format(
        "payment vector has {} entries for {} bidders", payments.values.size(),
        instance.num_bidders()));
  }
  std::vector<CoreViolation> violations;
  for (const CoreConstraint& row : CoreConstraints(instance)) {
    double lhs = 0.0;
    for (int id : row.payers.Ids()) lhs += payments.of(id);
    const double shortfall =
        row.sense == Sense::kAtLeast ? row.bound - lhs : lhs - row.bound;
    if (shortfall > kTolerance) violations.push_back({row, lhs, shortfall});
  }
  return violations;
}

MrcSegment LlgMrcSegment(const LlgBidProfile& profile) {
  const double a = profile.a(), b = profile.b(), g = profile.g();
  return MrcSegment{g, std::max(0.0, g - b), std::min(a, g),
                    profile.LocalsWin()};
}

LcMetric::LcMetric(double c) : c_(c) {
  if (!(c > 1.0) || !std::isfinite(c)) {
    throw std::invalid_argument(
        fmt::format("L_c metric requires finite c > 1, got {}", c));
  }
}

PaymentVector ProjectToMrc(const LlgBidProfile& profile,
                           const PaymentVector& reference, LcMetric) {
  if (reference.values.size() < 2) {
    throw std::invalid_argument(
        "LLG projection needs at least the two local components");
  }
  const MrcSegment segment = LlgMrcSegment(profile);
  if (!segment.valid) {
    return PaymentVector{{0.0, 0.0, profile.a() + profile.b()}};
  }
  // Split the revenue gap G - p1 - p2 evenly, then stay inside the IR and
  // sign caps. On a line the clamped point is L_c-nearest for every c > 1.
  const double p1 = reference.of(1), p2 = reference.of(2);
  const double even = (segment.g + p1 - p2) / 2.0;
  const double q1 = std::clamp(even, segment.p1_min, segment.p1_max);
  return PaymentVector{{q1, segment.g - q1, 0.0}};
}

}  // namespace refpoint
