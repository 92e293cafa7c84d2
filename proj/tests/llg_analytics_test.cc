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

#include <cmath>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "refpoint/core_geometry.h"
#include "refpoint/verification.h"

namespace refpoint {
namespace {

constexpr double kTol = 1e-9;
constexpr double kFdTol = 1e-6;

using Rule = ReferenceRule;
using R = Rational;

// Sensitivity row and dp/dA row of the reference table, in kAllRules order.
struct TableColumn {
  R sens;
  R dp1_da;
  R dp2_da;
};

const std::map<CaseLabel, std::array<TableColumn, 6>>& ReferenceTable() {
  static const auto* table = new std::map<CaseLabel, std::array<TableColumn, 6>>{
      {CaseLabel::kLocalsWeak,
       {{{1, 1, 0},
         {1, 0, -1},
         {R(1, 2), R(1, 6), R(-1, 3)},
         {R(1, 2), R(5, 6), R(1, 3)},
         {R(5, 6), R(7, 12), R(-1, 4)},
         {R(1, 6), R(5, 12), R(1, 4)}}}},
      {CaseLabel::kLocal1Strong,
       {{{1, 1, 0},
         {0, 0, 0},
         {0, 0, 0},
         {1, 1, 0},
         {R(1, 2), R(1, 2), 0},
         {R(1, 2), R(1, 2), 0}}}},
      {CaseLabel::kLocal2Strong,
       {{{1, 1, 0},
         {1, 0, -1},
         {R(1, 2), R(1, 6), R(-1, 3)},
         {R(1, 2), R(5, 6), R(1, 3)},
         {R(5, 6), R(7, 12), R(-1, 4)},
         {R(1, 6), R(5, 12), R(1, 4)}}}},
      {CaseLabel::kLocalsStrong,
       {{{1, 1, 0},
         {0, 0, 0},
         {0, 0, 0},
         {1, 1, 0},
         {R(1, 2), R(1, 2), 0},
         {R(1, 2), R(1, 2), 0}}}},
  };
  return *table;
}

TEST(ClassifyCaseTest, Examples) {
  EXPECT_EQ(ClassifyCase(LlgBidProfile(0.4, 0.5, 0.8)), CaseLabel::kLocalsWeak);
  EXPECT_EQ(ClassifyCase(LlgBidProfile(1.2, 0.3, 0.8)),
            CaseLabel::kLocal1Strong);
  EXPECT_EQ(ClassifyCase(LlgBidProfile(0.3, 1.2, 0.8)),
            CaseLabel::kLocal2Strong);
  EXPECT_EQ(ClassifyCase(LlgBidProfile(1.2, 1.1, 0.8)),
            CaseLabel::kLocalsStrong);
  // Closed on the weak side.
  EXPECT_EQ(ClassifyCase(LlgBidProfile(0.8, 0.8, 0.8)), CaseLabel::kLocalsWeak);
  EXPECT_EQ(MirrorCase(CaseLabel::kLocal1Strong), CaseLabel::kLocal2Strong);
}

TEST(ClosedFormTest, Examples) {
  const PaymentVector weak = ClosedFormReference(
      LlgBidProfile(0.4, 0.5, 0.8), Rule::kShapleyPaymentNoAuctioneer);
  EXPECT_NEAR(weak.of(1), 1.0 / 6.0, kTol);
  EXPECT_NEAR(weak.of(2), 13.0 / 60.0, kTol);

  const PaymentVector strong1 = ClosedFormReference(
      LlgBidProfile(1.2, 0.3, 0.8), Rule::kShapleyPaymentNoAuctioneer);
  EXPECT_NEAR(strong1.of(1), 0.3, kTol);
  EXPECT_NEAR(strong1.of(2), 0.05, kTol);

  const PaymentVector payoff = ClosedFormReference(
      LlgBidProfile(1.2, 1.1, 0.8), Rule::kShapleyPayoffNoAuctioneer);
  EXPECT_EQ(payoff.kind, VectorKind::kPayoff);
  EXPECT_NEAR(payoff.of(1), 1.2 - 0.8 / 6.0, kTol);
  EXPECT_NEAR(payoff.of(2), 1.1 - 0.8 / 6.0, kTol);
}

TEST(SensitivityTest, MatchesReferenceTableExactly) {
  for (const auto& [label, columns] : ReferenceTable()) {
    for (std::size_t r = 0; r < kAllRules.size(); ++r) {
      const Rule rule = kAllRules[r];
      EXPECT_EQ(SensitivityExact(label, rule), columns[r].sens)
          << RuleName(rule) << " " << CaseName(label);
      const ClosedForm& form = ClosedFormFor(label, rule);
      EXPECT_EQ(form.p1.coef_a, columns[r].dp1_da);
      EXPECT_EQ(form.p2.coef_a, columns[r].dp2_da);
    }
  }
}

TEST(SensitivityTest, Examples) {
  const LlgBidProfile weak(0.4, 0.5, 0.8);
  EXPECT_EQ(Sensitivity(weak, Rule::kShapleyPaymentNoAuctioneer), 0.5);
  EXPECT_EQ(SensitivityExact(CaseLabel::kLocalsWeak,
                             Rule::kShapleyPayoffWithAuctioneer),
            R(1, 6));
  EXPECT_EQ(SensitivityExact(CaseLabel::kLocal1Strong, Rule::kVcg), R(0));
  // sens_2 is sens_1 of the mirrored case.
  for (CaseLabel label : kAllCases) {
    for (Rule rule : kAllRules) {
      EXPECT_EQ(SensitivityExact(label, rule, LocalBidder::kSecond),
                SensitivityExact(MirrorCase(label), rule));
    }
  }
}

TEST(SensitivityProperty, MatchesFiniteDifferencesOfClosedForms) {
  std::mt19937_64 rng(41);
  for (CaseLabel label : kAllCases) {
    for (int s = 0; s < 200; ++s) {
      const LlgBidProfile p = SampleProfile(label, 1.0, rng);
      const double h = 1e-5;
      for (Rule rule : kAllRules) {
        const PaymentVector up =
            ClosedFormReference(LlgBidProfile(p.a() + h, p.b(), p.g()), rule, label);
        const PaymentVector down =
            ClosedFormReference(LlgBidProfile(p.a() - h, p.b(), p.g()), rule, label);
        const double fd = ((up.of(1) - down.of(1)) - (up.of(2) - down.of(2))) /
                          (2 * h);
        EXPECT_NEAR(fd, Sensitivity(p, rule), kFdTol);
      }
    }
  }
}

TEST(ClosedFormProperty, AgreesWithGeneralEngine) {
  std::mt19937_64 rng(43);
  for (CaseLabel label : kAllCases) {
    for (int s = 0; s < 200; ++s) {
      const LlgBidProfile p = SampleProfile(label, 1.0, rng);
      for (Rule rule : kAllRules) {
        const PaymentVector closed = ClosedFormReference(p, rule);
        const PaymentVector engine =
            ComputeReference(AuctionInstance::Llg(p), rule);
        EXPECT_NEAR(closed.of(1), engine.of(1), kTol);
        EXPECT_NEAR(closed.of(2), engine.of(2), kTol);
      }
    }
  }
}

TEST(ClosedFormProperty, ContinuousAcrossCaseBoundaries) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> other(0.0, 2.0);
  for (int s = 0; s < 200; ++s) {
    const double x = other(rng);
    for (Rule rule : kAllRules) {
      for (CaseLabel first : kAllCases) {
        for (CaseLabel second : kAllCases) {
          // At A = G, cases that differ only in bidder 1's strength meet.
          const bool b_strong = x > 1.0;
          auto b_side = [](CaseLabel c) {
            return c == CaseLabel::kLocal2Strong || c == CaseLabel::kLocalsStrong;
          };
          if (b_side(first) != b_strong || b_side(second) != b_strong) continue;
          const LlgBidProfile p(1.0, x, 1.0);
          const PaymentVector u = ClosedFormReference(p, rule, first);
          const PaymentVector v = ClosedFormReference(p, rule, second);
          EXPECT_NEAR(u.of(1), v.of(1), kTol);
          EXPECT_NEAR(u.of(2), v.of(2), kTol);
        }
      }
    }
  }
  // All four forms meet at A = B = G.
  const LlgBidProfile corner(0.7, 0.7, 0.7);
  for (Rule rule : kAllRules) {
    const PaymentVector ref = ClosedFormReference(corner, rule);
    for (CaseLabel label : kAllCases) {
      EXPECT_NEAR(ClosedFormReference(corner, rule, label).of(1), ref.of(1), kTol);
    }
  }
}

TEST(ClosedFormProperty, HomogeneousOfDegreeOne) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (CaseLabel label : kAllCases) {
    for (int s = 0; s < 50; ++s) {
      const LlgBidProfile p = SampleProfile(label, 1.0, rng);
      const double t = scale(rng);
      for (Rule rule : kAllRules) {
        const PaymentVector x = ClosedFormReference(p, rule);
        const PaymentVector y = ClosedFormReference(p.Scaled(t), rule);
        EXPECT_NEAR(y.of(1), t * x.of(1), t * kTol);
        EXPECT_NEAR(y.of(2), t * x.of(2), t * kTol);
      }
    }
  }
}

TEST(ClosedFormProperty, ShapleyPaymentsStayBelowMrc) {
  std::mt19937_64 rng(59);
  for (CaseLabel label : kAllCases) {
    for (int s = 0; s < 500; ++s) {
      const LlgBidProfile p = SampleProfile(label, 1.0, rng);
      const PaymentVector ref =
          ClosedFormReference(p, Rule::kShapleyPaymentNoAuctioneer);
      EXPECT_LE(ref.of(1) + ref.of(2), p.g() + 1e-12);
    }
  }
}

TEST(ProjectionDerivativeTest, VcgNearestIsHalf) {
  const DerivativeReport r =
      ProjectionDerivative(LlgBidProfile(0.4, 0.5, 0.8), Rule::kVcg);
  EXPECT_EQ(r.region, ProjectionRegion::kInterior);
  EXPECT_EQ(r.derivative, 0.5);
  EXPECT_EQ(r.sensitivity, 1.0);
  EXPECT_EQ(r.case_label, CaseLabel::kLocalsWeak);
  EXPECT_FALSE(r.near_boundary);
}

TEST(ProjectionDerivativeTest, ShapleyNearestInterior) {
  // 3A + B = 1.7 > 2G = 1.6 and A + 3B = 1.9 > 1.6.
  const DerivativeReport r = ProjectionDerivative(
      LlgBidProfile(0.4, 0.5, 0.8), Rule::kShapleyPaymentNoAuctioneer);
  EXPECT_EQ(r.region, ProjectionRegion::kInterior);
  EXPECT_EQ(r.derivative, 0.25);
}

TEST(ProjectionDerivativeTest, OwnIrBinding) {
  // Local 2 strong with 3A = 0.6 < G.
  const DerivativeReport r = ProjectionDerivative(
      LlgBidProfile(0.2, 1.0, 0.8), Rule::kShapleyPaymentNoAuctioneer);
  EXPECT_EQ(r.case_label, CaseLabel::kLocal2Strong);
  EXPECT_TRUE(r.own_cap_inequality);
  EXPECT_EQ(r.region, ProjectionRegion::kIr1Binding);
  EXPECT_EQ(r.derivative, 1.0);
}

TEST(ProjectionDerivativeTest, OtherIrBinding) {
  // Locals weak with A + 3B = 1.5 < 2G.
  const DerivativeReport r = ProjectionDerivative(
      LlgBidProfile(0.9, 0.2, 1.0), Rule::kShapleyPaymentNoAuctioneer);
  EXPECT_TRUE(r.other_cap_inequality);
  EXPECT_EQ(r.region, ProjectionRegion::kIr2Binding);
  EXPECT_EQ(r.derivative, 0.0);
}

TEST(ProjectionDerivativeTest, SignFloorBinding) {
  // Local 1 strong with A > 4G/3 + 5B/3: the even split exceeds G, so bidder
  // 2's payment hits zero and bidder 1 pays exactly G.
  const LlgBidProfile p(1.9, 0.2, 1.0);
  const DerivativeReport r =
      ProjectionDerivative(p, Rule::kShapleyPaymentWithAuctioneer);
  EXPECT_FALSE(r.own_cap_inequality);
  EXPECT_FALSE(r.other_cap_inequality);
  EXPECT_EQ(r.region, ProjectionRegion::kFloor2Binding);
  EXPECT_EQ(r.derivative, 0.0);
  EXPECT_EQ(r.sensitivity, 0.5);
  EXPECT_NEAR(NumericDerivative(p, Rule::kShapleyPaymentWithAuctioneer), 0.0,
              kFdTol);
}

TEST(ProjectionDerivativeTest, FlagsKinks) {
  // 3A + B = 2G exactly.
  const DerivativeReport r = ProjectionDerivative(
      LlgBidProfile(0.5, 0.5, 1.0), Rule::kShapleyPaymentNoAuctioneer);
  EXPECT_TRUE(r.near_boundary);
}

TEST(ProjectionDerivativeTest, GlobalWinnerThrows) {
  EXPECT_THROW(ProjectionDerivative(LlgBidProfile(0.2, 0.3, 0.9), Rule::kVcg),
               GlobalWinnerError);
  EXPECT_THROW(NumericDerivative(LlgBidProfile(0.2, 0.3, 0.9), Rule::kVcg),
               GlobalWinnerError);
}

TEST(NumericDerivativeTest, Examples) {
  const LlgBidProfile p(0.4, 0.5, 0.8);
  EXPECT_NEAR(NumericDerivative(p, Rule::kVcg, 1e-5), 0.5, kFdTol);
  EXPECT_NEAR(NumericDerivative(p, Rule::kShapleyPaymentNoAuctioneer, 1e-5),
              0.25, kFdTol);
  EXPECT_NEAR(NumericDerivative(p, Rule::kFirstPrice, 1e-5), 0.5, kFdTol);
  EXPECT_DOUBLE_EQ(DefaultStep(p), 1e-5);
  EXPECT_DOUBLE_EQ(DefaultStep(LlgBidProfile(3.0, 0.5, 0.8)), 3e-5);
}

TEST(NumericDerivativeTest, RefusesPointsNearKinks) {
  EXPECT_THROW(NumericDerivative(LlgBidProfile(0.8 + 1e-6, 0.5, 0.8), Rule::kVcg),
               BoundaryProximityError);
  // Diagonal A + B = G.
  EXPECT_THROW(NumericDerivative(LlgBidProfile(0.3 + 1e-6, 0.5, 0.8), Rule::kVcg),
               BoundaryProximityError);
  EXPECT_THROW(NumericDerivative(LlgBidProfile(0.4, 0.5, 0.8), Rule::kVcg, -1.0),
               std::invalid_argument);
}

TEST(ProjectionDerivativeProperty, MatchesNumericPipeline) {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (CaseLabel label : kAllCases) {
    for (int s = 0; s < 150; ++s) {
      const LlgBidProfile p = SampleProfile(label, 1.0, rng);
      for (Rule rule : kAllRules) {
        for (LocalBidder bidder : {LocalBidder::kFirst, LocalBidder::kSecond}) {
          const DerivativeReport r = ProjectionDerivative(p, rule, bidder);
          double numeric;
          try {
            numeric = NumericDerivative(p, rule, std::nullopt, bidder);
          } catch (const BoundaryProximityError&) {
            continue;
          }
          ++checked;
          EXPECT_NEAR(r.derivative, numeric, kFdTol)
              << RuleName(rule) << " at (" << p.a() << ", " << p.b() << ", "
              << p.g() << ") bidder " << static_cast<int>(bidder);
        }
      }
    }
  }
  EXPECT_GT(checked, 6000);
}

TEST(ProjectionDerivativeProperty, BidderTwoMirrorsBidderOne) {
  std::mt19937_64 rng(67);
  for (CaseLabel label : kAllCases) {
    for (int s = 0; s < 200; ++s) {
      const LlgBidProfile p = SampleProfile(label, 1.0, rng);
      for (Rule rule : kAllRules) {
        const DerivativeReport two =
            ProjectionDerivative(p, rule, LocalBidder::kSecond);
        const DerivativeReport one = ProjectionDerivative(p.Mirrored(), rule);
        EXPECT_EQ(two.region, one.region);
        EXPECT_EQ(two.derivative, one.derivative);
        EXPECT_EQ(two.sensitivity, one.sensitivity);
        EXPECT_EQ(MirrorCase(two.case_label), one.case_label);
      }
    }
  }
}

TEST(ProjectionDerivativeProperty, VcgNearestTakesTwoValues) {
  std::mt19937_64 rng(71);
  for (CaseLabel label : kAllCases) {
    for (int s = 0; s < 500; ++s) {
      const DerivativeReport r =
          ProjectionDerivative(SampleProfile(label, 1.0, rng), Rule::kVcg);
      EXPECT_EQ(r.region, ProjectionRegion::kInterior);
      EXPECT_TRUE(r.derivative == 0.0 || r.derivative == 0.5);
    }
  }
}

TEST(ConditionTableTest, ExactRowsMatchDirectEvaluation) {
  std::mt19937_64 rng(73);
  for (const ConditionRow& row : ShapleyConditionTable()) {
    for (int s = 0; s < 2000; ++s) {
      const LlgBidProfile p = SampleProfile(row.case_label, 1.0, rng);
      EXPECT_EQ(row.exact_holds(p),
                CapInequalityHolds(p, row.rule, row.inequality))
          << RuleName(row.rule) << " " << CaseName(row.case_label) << " "
          << row.exact;
      if (row.agrees) EXPECT_EQ(row.stated_holds(p), row.exact_holds(p));
    }
  }
}

TEST(ConditionTableTest, DisagreeingRowsActuallyDisagree) {
  std::mt19937_64 rng(79);
  int flagged = 0;
  for (const ConditionRow& row : ShapleyConditionTable()) {
    if (row.agrees) continue;
    ++flagged;
    int mismatches = 0;
    for (int s = 0; s < 2000; ++s) {
      const LlgBidProfile p = SampleProfile(row.case_label, 1.0, rng);
      if (row.stated_holds(p) != row.exact_holds(p)) ++mismatches;
    }
    EXPECT_GT(mismatches, 0) << row.stated << " vs " << row.exact;
  }
  EXPECT_EQ(flagged, 3);
  // Counterexample to "7A < G" in local 2 strong: 7A = 0.7 < G, yet the even
  // split (0) stays below A, so bidder 1's IR cap does not bind.
  const LlgBidProfile p(0.1, 1.5, 1.0);
  EXPECT_FALSE(CapInequalityHolds(p, Rule::kShapleyPaymentWithAuctioneer,
                                  CapInequality::kOwn));
}

}  // namespace
}  // namespace refpoint
