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

#ifndef REFPOINT_CORE_GEOMETRY_H_
#define REFPOINT_CORE_GEOMETRY_H_

#include <string_view>
#include <vector>

#include "refpoint/ca_model.h"
#include "refpoint/reference_points.h"

namespace refpoint {

enum class ConstraintKind {
  kBlockingCoalition,     // sum over N \ L of p_j >= V_L - W_L
  kIndividualRationality, // p_i <= b_i(x_i)
  kNonNegativity,         // p_i >= 0
};

std::string_view ConstraintKindName(ConstraintKind kind);

enum class Sense { kAtLeast, kAtMost };

// sum_{j in payers} p_j  (>= | <=)  bound
struct CoreConstraint {
  ConstraintKind kind = ConstraintKind::kBlockingCoalition;
  Coalition coalition;  // blocking coalition L; empty for IR and sign rows
  Coalition payers;
  Sense sense = Sense::kAtLeast;
  double bound = 0.0;
};

struct CoreViolation {
  CoreConstraint constraint;
  double lhs = 0.0;
  double shortfall = 0.0;  // > kTolerance
};

// One blocking-coalition row per L strictly inside N (L = {} included, with
// bound 0), then an IR row and a non-negativity row for every bidder.
// Losing bidders' IR rows have bound 0.
std::vector<CoreConstraint> CoreConstraints(const AuctionInstance& instance);

// Every constraint violated by more than kTolerance. Empty iff in the core.
std::vector<CoreViolation> CoreViolations(const AuctionInstance& instance,
                                          const PaymentVector& payments);

inline bool IsInCore(const AuctionInstance& instance,
                     const PaymentVector& payments) {
  return CoreViolations(instance, payments).empty();
}

// Minimum-revenue core of an LLG profile where the locals win: the points
// (p1, G - p1, 0) with p1 in [p1_min, p1_max].
struct MrcSegment {
  double g = 0.0;
  double p1_min = 0.0;  // max(0, G - B)
  double p1_max = 0.0;  // min(A, G)
  bool valid = false;   // A + B >= G
};

MrcSegment LlgMrcSegment(const LlgBidProfile& profile);

// Exponent c of the L_c distance used to pick the nearest MRC point. Every
// c > 1 yields the same projection in LLG, so the value is only validated.
class LcMetric {
 public:
  explicit LcMetric(double c = 2.0);
  double c() const { return c_; }

 private:
  double c_;
};

// L_c-nearest point of the LLG minimum-revenue core to `reference`
// (components 1 and 2 are used). If the global bidder wins, returns the
// unique MRC point (0, 0, A + B).
PaymentVector ProjectToMrc(const LlgBidProfile& profile,
                           const PaymentVector& reference,
                           LcMetric metric = LcMetric());

}  // namespace refpoint

#endif  // REFPOINT_CORE_GEOMETRY_H_
