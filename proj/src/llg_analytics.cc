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

#include "refpoint/llg_analytics.h"

#include <array>
#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "refpoint/core_geometry.h"

namespace refpoint {

namespace {

using R = Rational;

constexpr LinearForm Lf(R a, R b, R g) { return LinearForm{a, b, g}; }
constexpr LinearForm kZero = LinearForm{0, 0, 0};

constexpr std::size_t RuleIndex(ReferenceRule rule) {
  return static_cast<std::size_t>(rule);
}
constexpr std::size_t CaseIndex(CaseLabel label) {
  return static_cast<std::size_t>(label);
}

// [case][rule], in the order of kAllCases and kAllRules.
const std::array<std::array<ClosedForm, 6>, 4> kClosedForms = {{
    // Locals weak.
    {{
        {Lf(1, 0, 0), Lf(0, 1, 0)},
        {Lf(0, -1, 1), Lf(-1, 0, 1)},
        {Lf(R(1, 6), R(-1, 3), R(1, 3)), Lf(R(-1, 3), R(1, 6), R(1, 3))},
        {Lf(R(5, 6), R(1, 3), R(-1, 3)), Lf(R(1, 3), R(5, 6), R(-1, 3))},
        {Lf(R(7, 12), R(-1, 4), R(1, 4)), Lf(R(-1, 4), R(7, 12), R(1, 4))},
        {Lf(R(5, 12), R(1, 4), R(-1, 4)), Lf(R(1, 4), R(5, 12), R(-1, 4))},
    }},
    // Local 1 strong.
    {{
        {Lf(1, 0, 0), Lf(0, 1, 0)},
        {Lf(0, -1, 1), kZero},
        {Lf(0, R(-1, 3), R(1, 2)), Lf(0, R(1, 6), 0)},
        {Lf(1, R(1, 3), R(-1, 2)), Lf(0, R(5, 6), 0)},
        {Lf(R(1, 2), R(-1, 4), R(1, 3)), Lf(0, R(7, 12), 0)},
        {Lf(R(1, 2), R(1, 4), R(-1, 3)), Lf(0, R(5, 12), 0)},
    }},
    // Local 2 strong.
    {{
        {Lf(1, 0, 0), Lf(0, 1, 0)},
        {kZero, Lf(-1, 0, 1)},
        {Lf(R(1, 6), 0, 0), Lf(R(-1, 3), 0, R(1, 2))},
        {Lf(R(5, 6), 0, 0), Lf(R(1, 3), 1, R(-1, 2))},
        {Lf(R(7, 12), 0, 0), Lf(R(-1, 4), R(1, 2), R(1, 3))},
        {Lf(R(5, 12), 0, 0), Lf(R(1, 4), R(1, 2), R(-1, 3))},
    }},
    // Locals strong.
    {{
        {Lf(1, 0, 0), Lf(0, 1, 0)},
        {kZero, kZero},
        {Lf(0, 0, R(1, 6)), Lf(0, 0, R(1, 6))},
        {Lf(1, 0, R(-1, 6)), Lf(0, 1, R(-1, 6))},
        {Lf(R(1, 2), 0, R(1, 12)), Lf(0, R(1, 2), R(1, 12))},
        {Lf(R(1, 2), 0, R(-1, 12)), Lf(0, R(1, 2), R(-1, 12))},
    }},
}};

// Bidder-relative view of an LLG profile and reference point.
struct Side {
  double own_p;
  double other_p;
  double own_bid;
  double other_bid;
  double g;
};

Side MakeSide(const LlgBidProfile& profile, const PaymentVector& ref,
              LocalBidder bidder) {
  if (bidder == LocalBidder::kFirst) {
    return {ref.of(1), ref.of(2), profile.a(), profile.b(), profile.g()};
  }
  return {ref.of(2), ref.of(1), profile.b(), profile.a(), profile.g()};
}

double& OwnBid(double& a, double& b, LocalBidder bidder) {
  return bidder == LocalBidder::kFirst ? a : b;
}

void RequireLocalsWin(const LlgBidProfile& profile) {
  if (!profile.LocalsWin()) {
    throw GlobalWinnerError(fmt::format(
        "global bidder wins at (A, B, G) = ({}, {}, {}); the projected local "
        "payments are constant zero",
        profile.a(), profile.b(), profile.g()));
  }
}

// Which piece of the piecewise-linear numeric pipeline a profile lies on.
using PipelineState = std::tuple<bool, CaseLabel, int>;

PipelineState NumericPipelineState(const LlgBidProfile& profile,
                                   ReferenceRule rule) {
  if (!profile.LocalsWin()) return {false, ClassifyCase(profile), 0};
  const PaymentVector ref =
      ComputeReference(AuctionInstance::Llg(profile), rule);
  const MrcSegment segment = LlgMrcSegment(profile);
  const double even = (segment.g + ref.of(1) - ref.of(2)) / 2.0;
  const int clamp = even < segment.p1_min ? -1 : even > segment.p1_max ? 1 : 0;
  return {true, ClassifyCase(profile), clamp};
}

double NumericPipeline(const LlgBidProfile& profile, ReferenceRule rule,
                       LocalBidder bidder) {
  const PaymentVector ref =
      ComputeReference(AuctionInstance::Llg(profile), rule);
  return ProjectToMrc(profile, ref).of(static_cast<int>(bidder));
}

}  // namespace

std::string_view CaseName(CaseLabel label) {
  switch (label) {
    case CaseLabel::kLocalsWeak:
      return "locals_weak";
    case CaseLabel::kLocal1Strong:
      return "local1_strong";
    case CaseLabel::kLocal2Strong:
      return "local2_strong";
    case CaseLabel::kLocalsStrong:
      return "locals_strong";
  }
  return "unknown";
}

CaseLabel ClassifyCase(const LlgBidProfile& profile) {
  const bool strong1 = profile.a() > profile.g();
  const bool strong2 = profile.b() > profile.g();
  if (strong1 && strong2) return CaseLabel::kLocalsStrong;
  if (strong1) return CaseLabel::kLocal1Strong;
  if (strong2) return CaseLabel::kLocal2Strong;
  return CaseLabel::kLocalsWeak;
}

CaseLabel MirrorCase(CaseLabel label) {
  switch (label) {
    case CaseLabel::kLocal1Strong:
      return CaseLabel::kLocal2Strong;
    case CaseLabel::kLocal2Strong:
      return CaseLabel::kLocal1Strong;
    default:
      return label;
  }
}

const ClosedForm& ClosedFormFor(CaseLabel label, ReferenceRule rule) {
  return kClosedForms[CaseIndex(label)][RuleIndex(rule)];
}

PaymentVector ClosedFormReference(const LlgBidProfile& profile,
                                  ReferenceRule rule) {
  return ClosedFormReference(profile, rule, ClassifyCase(profile));
}

PaymentVector ClosedFormReference(const LlgBidProfile& profile,
                                  ReferenceRule rule, CaseLabel label) {
  const ClosedForm& form = ClosedFormFor(label, rule);
  const bool payoff = rule == ReferenceRule::kShapleyPayoffNoAuctioneer ||
                      rule == ReferenceRule::kShapleyPayoffWithAuctioneer;
  return PaymentVector{{form.p1.Evaluate(profile), form.p2.Evaluate(profile)},
                       payoff ? VectorKind::kPayoff : VectorKind::kPayment};
}

Rational SensitivityExact(CaseLabel label, ReferenceRule rule,
                          LocalBidder bidder) {
  const ClosedForm& form = ClosedFormFor(label, rule);
  if (bidder == LocalBidder::kFirst) return form.p1.coef_a - form.p2.coef_a;
  return form.p2.coef_b - form.p1.coef_b;
}

double Sensitivity(const LlgBidProfile& profile, ReferenceRule rule,
                   LocalBidder bidder) {
  return SensitivityExact(ClassifyCase(profile), rule, bidder).ToDouble();
}

std::string_view RegionName(ProjectionRegion region) {
  switch (region) {
    case ProjectionRegion::kIr1Binding:
      return "ir1_binding";
    case ProjectionRegion::kIr2Binding:
      return "ir2_binding";
    case ProjectionRegion::kInterior:
      return "interior";
    case ProjectionRegion::kFloor1Binding:
      return "floor1_binding";
    case ProjectionRegion::kFloor2Binding:
      return "floor2_binding";
  }
  return "unknown";
}

DerivativeReport ProjectionDerivative(const LlgBidProfile& profile,
                                      ReferenceRule rule, LocalBidder bidder) {
  RequireLocalsWin(profile);
  const CaseLabel label = ClassifyCase(profile);
  const Side s =
      MakeSide(profile, ClosedFormReference(profile, rule, label), bidder);

  DerivativeReport report;
  report.case_label = label;
  report.sensitivity = SensitivityExact(label, rule, bidder).ToDouble();

  const double own_margin = s.own_p - (s.other_p - s.g + 2.0 * s.own_bid);
  const double other_margin = (s.other_p + s.g - 2.0 * s.other_bid) - s.own_p;
  report.own_cap_inequality = own_margin > kTolerance;
  report.other_cap_inequality = other_margin > kTolerance;

  // The IR caps own_bid and g - other_bid only bound the segment while the
  // corresponding bid is weak; past G the sign constraints take over.
  const double even = (s.g + s.own_p - s.other_p) / 2.0;
  if (report.own_cap_inequality) {
    report.region = s.own_bid <= s.g ? ProjectionRegion::kIr1Binding
                                     : ProjectionRegion::kFloor2Binding;
  } else if (report.other_cap_inequality) {
    report.region = s.other_bid <= s.g ? ProjectionRegion::kIr2Binding
                                       : ProjectionRegion::kFloor1Binding;
  } else if (even > s.g + kTolerance) {
    report.region = ProjectionRegion::kFloor2Binding;
  } else if (even < -kTolerance) {
    report.region = ProjectionRegion::kFloor1Binding;
  } else {
    report.region = ProjectionRegion::kInterior;
  }

  switch (report.region) {
    case ProjectionRegion::kIr1Binding:
      report.derivative = 1.0;
      break;
    case ProjectionRegion::kInterior:
      report.derivative = report.sensitivity / 2.0;
      break;
    default:
      report.derivative = 0.0;
      break;
  }

  for (double margin :
       {own_margin, other_margin, even - s.g, even, s.own_bid - s.g,
        s.other_bid - s.g, s.own_bid + s.other_bid - s.g}) {
    if (std::abs(margin) <= kTolerance) report.near_boundary = true;
  }
  return report;
}

double DefaultStep(const LlgBidProfile& profile, LocalBidder bidder) {
  const double own =
      bidder == LocalBidder::kFirst ? profile.a() : profile.b();
  return 1e-5 * std::max(1.0, std::abs(own));
}

double NumericDerivative(const LlgBidProfile& profile, ReferenceRule rule,
                         std::optional<double> step, LocalBidder bidder) {
  RequireLocalsWin(profile);
  const double h = step.value_or(DefaultStep(profile, bidder));
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument(fmt::format("step must be positive, got {}", h));
  }

  auto shifted = [&](double delta) {
    double a = profile.a(), b = profile.b();
    OwnBid(a, b, bidder) += delta;
    return LlgBidProfile(a, b, profile.g());
  };

  const double own = bidder == LocalBidder::kFirst ? profile.a() : profile.b();
  if (own - 10.0 * h < 0.0) {
    throw BoundaryProximityError(
        fmt::format("own bid {} is within 10h of zero (h = {})", own, h));
  }
  const PipelineState center = NumericPipelineState(profile, rule);
  for (double delta : {-10.0 * h, 10.0 * h}) {
    if (NumericPipelineState(shifted(delta), rule) != center) {
      throw BoundaryProximityError(fmt::format(
          "a kink of the payment rule lies within 10h of ({}, {}, {}), h = {}",
          profile.a(), profile.b(), profile.g(), h));
    }
  }
  return (NumericPipeline(shifted(h), rule, bidder) -
          NumericPipeline(shifted(-h), rule, bidder)) /
         (2.0 * h);
}

bool CapInequalityHolds(const LlgBidProfile& profile, ReferenceRule rule,
                        CapInequality inequality) {
  const PaymentVector ref = ClosedFormReference(profile, rule);
  const double p1 = ref.of(1), p2 = ref.of(2);
  const double a = profile.a(), b = profile.b(), g = profile.g();
  if (inequality == CapInequality::kOwn) return p1 > p2 - g + 2.0 * a;
  return p1 < p2 + g - 2.0 * b;
}

namespace {

bool Never(const LlgBidProfile&) { return false; }

constexpr auto kNoAuct = ReferenceRule::kShapleyPaymentNoAuctioneer;
constexpr auto kWithAuct = ReferenceRule::kShapleyPaymentWithAuctioneer;
constexpr auto kOwn = CapInequality::kOwn;
constexpr auto kOther = CapInequality::kOther;

#define REFPOINT_COND(expr) \
  +[](const LlgBidProfile& p) { \
    [[maybe_unused]] const double A = p.a(), B = p.b(), G = p.g(); \
    return (expr); \
  }

const std::array<ConditionRow, 16> kConditionTable = {{
    {CaseLabel::kLocalsWeak, kNoAuct, kOwn, "3A + B < 2G", "3A + B < 2G", true,
     REFPOINT_COND(3 * A + B < 2 * G), REFPOINT_COND(3 * A + B < 2 * G)},
    {CaseLabel::kLocalsWeak, kNoAuct, kOther, "A + 3B < 2G", "A + 3B < 2G",
     true, REFPOINT_COND(A + 3 * B < 2 * G), REFPOINT_COND(A + 3 * B < 2 * G)},
    {CaseLabel::kLocal1Strong, kNoAuct, kOwn, "never", "never", true, Never,
     Never},
    {CaseLabel::kLocal1Strong, kNoAuct, kOther, "A > 3B", "3B < G", false,
     REFPOINT_COND(A > 3 * B), REFPOINT_COND(3 * B < G)},
    {CaseLabel::kLocal2Strong, kNoAuct, kOwn, "3A < G", "3A < G", true,
     REFPOINT_COND(3 * A < G), REFPOINT_COND(3 * A < G)},
    {CaseLabel::kLocal2Strong, kNoAuct, kOther, "never", "never", true, Never,
     Never},
    {CaseLabel::kLocalsStrong, kNoAuct, kOwn, "never", "never", true, Never,
     Never},
    {CaseLabel::kLocalsStrong, kNoAuct, kOther, "never", "never", true, Never,
     Never},
    {CaseLabel::kLocalsWeak, kWithAuct, kOwn, "7A + 5B < 6G", "7A + 5B < 6G",
     true, REFPOINT_COND(7 * A + 5 * B < 6 * G),
     REFPOINT_COND(7 * A + 5 * B < 6 * G)},
    {CaseLabel::kLocalsWeak, kWithAuct, kOther, "5A + 7B < 6G", "5A + 7B < 6G",
     true, REFPOINT_COND(5 * A + 7 * B < 6 * G),
     REFPOINT_COND(5 * A + 7 * B < 6 * G)},
    {CaseLabel::kLocal1Strong, kWithAuct, kOwn, "never", "never", true, Never,
     Never},
    {CaseLabel::kLocal1Strong, kWithAuct, kOther, "A > 7B", "3A + 7B < 4G",
     false, REFPOINT_COND(A > 7 * B), REFPOINT_COND(3 * A + 7 * B < 4 * G)},
    {CaseLabel::kLocal2Strong, kWithAuct, kOwn, "7A < G", "7A + 3B < 4G",
     false, REFPOINT_COND(7 * A < G), REFPOINT_COND(7 * A + 3 * B < 4 * G)},
    {CaseLabel::kLocal2Strong, kWithAuct, kOther, "never", "never", true,
     Never, Never},
    {CaseLabel::kLocalsStrong, kWithAuct, kOwn, "never", "never", true, Never,
     Never},
    {CaseLabel::kLocalsStrong, kWithAuct, kOther, "never", "never", true,
     Never, Never},
}};

#undef REFPOINT_COND

}  // namespace

std::span<const ConditionRow> ShapleyConditionTable() {
  return kConditionTable;
}

}  // namespace refpoint
