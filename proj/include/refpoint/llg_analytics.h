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

#ifndef REFPOINT_LLG_ANALYTICS_H_
#define REFPOINT_LLG_ANALYTICS_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "refpoint/ca_model.h"
#include "refpoint/rational.h"
#include "refpoint/reference_points.h"

namespace refpoint {

// Relative strength of the local bids against G. Boundaries are closed on the
// weak side: A == G counts as weak.
enum class CaseLabel {
  kLocalsWeak,    // A <= G, B <= G
  kLocal1Strong,  // B <= G < A
  kLocal2Strong,  // A <= G < B
  kLocalsStrong,  // G < A, G < B
};

inline constexpr std::array<CaseLabel, 4> kAllCases = {
    CaseLabel::kLocalsWeak, CaseLabel::kLocal1Strong, CaseLabel::kLocal2Strong,
    CaseLabel::kLocalsStrong};

std::string_view CaseName(CaseLabel label);  // "locals_weak", ...
CaseLabel ClassifyCase(const LlgBidProfile& profile);
// The label of the mirrored profile (B, A, G).
CaseLabel MirrorCase(CaseLabel label);

enum class LocalBidder { kFirst = 1, kSecond = 2 };

// coef_a * A + coef_b * B + coef_g * G
struct LinearForm {
  Rational coef_a;
  Rational coef_b;
  Rational coef_g;

  double Evaluate(const LlgBidProfile& profile) const {
    return coef_a.ToDouble() * profile.a() + coef_b.ToDouble() * profile.b() +
           coef_g.ToDouble() * profile.g();
  }
};

// Reference point of the two local bidders as exact linear forms, valid on
// the locals-win part of one case.
struct ClosedForm {
  LinearForm p1;
  LinearForm p2;
};

const ClosedForm& ClosedFormFor(CaseLabel label, ReferenceRule rule);

// Closed-form reference vector (p1, p2) in the profile's own case, or in an
// explicitly chosen case (used to compare the two sides of a boundary).
PaymentVector ClosedFormReference(const LlgBidProfile& profile,
                                  ReferenceRule rule);
PaymentVector ClosedFormReference(const LlgBidProfile& profile,
                                  ReferenceRule rule, CaseLabel label);

// sens_1 = dp1/dA - dp2/dA, or sens_2 = dp2/dB - dp1/dB for kSecond.
Rational SensitivityExact(CaseLabel label, ReferenceRule rule,
                          LocalBidder bidder = LocalBidder::kFirst);
double Sensitivity(const LlgBidProfile& profile, ReferenceRule rule,
                   LocalBidder bidder = LocalBidder::kFirst);

// Which constraint pins the projected payment of the differentiated bidder.
// "1" always names the differentiated bidder and "2" the other local, so a
// bidder-2 report reads like the bidder-1 report of the mirrored profile.
enum class ProjectionRegion {
  kIr1Binding,     // own IR cap binds: derivative 1
  kIr2Binding,     // other bidder's IR cap binds: derivative 0
  kInterior,       // even split lands inside: derivative sens / 2
  kFloor1Binding,  // own payment pinned at 0: derivative 0
  kFloor2Binding,  // other payment pinned at 0, own at G: derivative 0
};

std::string_view RegionName(ProjectionRegion region);  // "ir1_binding", ...

struct DerivativeReport {
  ProjectionRegion region = ProjectionRegion::kInterior;
  double derivative = 0.0;
  double sensitivity = 0.0;
  CaseLabel case_label = CaseLabel::kLocalsWeak;
  // The two cap inequalities evaluated on the closed-form reference point:
  //   own:   p_own > p_other - G + 2 * own_bid
  //   other: p_own < p_other + G - 2 * other_bid
  bool own_cap_inequality = false;
  bool other_cap_inequality = false;
  // Within kTolerance of a kink, where the derivative is one-sided.
  bool near_boundary = false;
};

class GlobalWinnerError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BoundaryProximityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Derivative of the projected (MRC-selecting) payment of `bidder` with
// respect to its own bid. Throws GlobalWinnerError if A + B < G.
DerivativeReport ProjectionDerivative(const LlgBidProfile& profile,
                                      ReferenceRule rule,
                                      LocalBidder bidder = LocalBidder::kFirst);

// 1e-5 * max(1, |own bid|).
double DefaultStep(const LlgBidProfile& profile,
                   LocalBidder bidder = LocalBidder::kFirst);

// Central difference of the numeric pipeline: general-engine reference point,
// then ProjectToMrc. Throws GlobalWinnerError if the global bidder wins and
// BoundaryProximityError if a case, region or winner change lies within 10h.
double NumericDerivative(const LlgBidProfile& profile, ReferenceRule rule,
                         std::optional<double> step = std::nullopt,
                         LocalBidder bidder = LocalBidder::kFirst);

enum class CapInequality {
  kOwn,    // p1 > p2 - G + 2A
  kOther,  // p1 < p2 + G - 2B
};

// Direct evaluation for bidder 1 on the closed-form reference point.
bool CapInequalityHolds(const LlgBidProfile& profile, ReferenceRule rule,
                        CapInequality inequality);

// When each cap inequality holds for the Shapley-payment reference points,
// as a condition on (A, B, G) within one case. `stated` is the condition as
// it is usually quoted; `exact` is what the closed forms give. They differ on
// the strong-local rows marked `agrees == false`.
struct ConditionRow {
  CaseLabel case_label;
  ReferenceRule rule;
  CapInequality inequality;
  std::string_view stated;
  std::string_view exact;
  bool agrees;
  bool (*stated_holds)(const LlgBidProfile&);
  bool (*exact_holds)(const LlgBidProfile&);
};

std::span<const ConditionRow> ShapleyConditionTable();

}  // namespace refpoint

#endif  // REFPOINT_LLG_ANALYTICS_H_
