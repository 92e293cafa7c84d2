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

#include "refpoint/verification.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "refpoint/core_geometry.h"
#include "refpoint/reference_points.h"

namespace refpoint {

namespace {

constexpr double kFiniteDifferenceTolerance = 1e-6;
constexpr double kSumTolerance = 1e-12;

std::mt19937_64 SuiteRng(std::uint64_t seed, std::uint64_t suite) {
  std::seed_seq seq{seed, suite};
  return std::mt19937_64(seq);
}

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::string CellName(ReferenceRule rule, CaseLabel label) {
  return fmt::format("{}/{}", RuleName(rule), CaseName(label));
}

}  // namespace

LlgBidProfile SampleProfile(CaseLabel label, double g, std::mt19937_64& rng) {
  const bool strong1 = label == CaseLabel::kLocal1Strong ||
                       label == CaseLabel::kLocalsStrong;
  const bool strong2 = label == CaseLabel::kLocal2Strong ||
                       label == CaseLabel::kLocalsStrong;
  while (true) {
    const double a = strong1 ? Uniform(rng, g, 2.0 * g) : Uniform(rng, 0.0, g);
    const double b = strong2 ? Uniform(rng, g, 2.0 * g) : Uniform(rng, 0.0, g);
    const LlgBidProfile profile(a, b, g);
    if (a + b > g && ClassifyCase(profile) == label) return profile;
  }
}

AuctionInstance RandomInstance(std::mt19937_64& rng, int max_bidders,
                               int max_goods) {
  std::uniform_int_distribution<int> bidder_count(1, max_bidders);
  std::uniform_int_distribution<int> good_count(1, max_goods);
  std::uniform_int_distribution<int> bid_count(1, 3);
  const int n = bidder_count(rng);
  const int m = good_count(rng);

  std::vector<std::string> goods;
  for (int k = 0; k < m; ++k) goods.push_back(fmt::format("g{}", k + 1));
  std::uniform_int_distribution<std::uint32_t> bundle_mask(
      1, (std::uint32_t{1} << m) - 1);

  std::vector<Bidder> bidders;
  for (int id = 1; id <= n; ++id) {
    Bidder& bidder = bidders.emplace_back();
    bidder.id = id;
    const int count = bid_count(rng);
    for (int j = 0; j < count; ++j) {
      AtomicBid bid;
      const std::uint32_t mask = bundle_mask(rng);
      for (int k = 0; k < m; ++k) {
        if ((mask >> k) & 1u) bid.bundle.push_back(goods[k]);
      }
      bid.value = Uniform(rng, 0.0, 1.0);
      bidder.bids.push_back(std::move(bid));
    }
  }
  return AuctionInstance(std::move(goods), std::move(bidders));
}

SuiteResult VerifyClosedForms(std::uint64_t seed, int samples) {
  SuiteResult result{"closed-forms", "cells", 0, 0, {}};
  std::mt19937_64 rng = SuiteRng(seed, 1);
  for (ReferenceRule rule : kAllRules) {
    for (CaseLabel label : kAllCases) {
      ++result.total;
      double worst = 0.0;
      for (int s = 0; s < samples; ++s) {
        const LlgBidProfile profile = SampleProfile(label, 1.0, rng);
        const PaymentVector closed = ClosedFormReference(profile, rule);
        const PaymentVector engine =
            ComputeReference(AuctionInstance::Llg(profile), rule);
        for (int id : {1, 2}) {
          worst = std::max(worst, std::abs(closed.of(id) - engine.of(id)));
        }
      }
      if (worst <= kTolerance) {
        ++result.passed;
      } else {
        result.notes.push_back(fmt::format("{}: max deviation {:.3e}",
                                           CellName(rule, label), worst));
      }
    }
  }
  return result;
}

SuiteResult VerifySensitivities(std::uint64_t seed, int samples) {
  SuiteResult result{"sensitivity", "cells", 0, 0, {}};
  std::mt19937_64 rng = SuiteRng(seed, 2);
  for (ReferenceRule rule : kAllRules) {
    for (CaseLabel label : kAllCases) {
      ++result.total;
      int bad = 0;
      for (int s = 0; s < samples; ++s) {
        const LlgBidProfile profile = SampleProfile(label, 1.0, rng);
        const double h = DefaultStep(profile);
        const LlgBidProfile up(profile.a() + h, profile.b(), profile.g());
        const LlgBidProfile down(profile.a() - h, profile.b(), profile.g());
        // Same closed form on both sides, even if the step crosses a case
        // boundary: the linear form itself is being differentiated.
        const PaymentVector pu = ClosedFormReference(up, rule, label);
        const PaymentVector pd = ClosedFormReference(down, rule, label);
        const double numeric =
            ((pu.of(1) - pd.of(1)) - (pu.of(2) - pd.of(2))) / (2.0 * h);
        if (std::abs(numeric - Sensitivity(profile, rule)) >
            kFiniteDifferenceTolerance) {
          ++bad;
        }
      }
      if (bad == 0) {
        ++result.passed;
      } else {
        result.notes.push_back(fmt::format("{}: {} of {} samples off",
                                           CellName(rule, label), bad,
                                           samples));
      }
    }
  }
  return result;
}

SuiteResult VerifyProjectionDerivatives(std::uint64_t seed, int samples) {
  SuiteResult result{"projection-derivative", "points", 0, 0, {}};
  std::mt19937_64 rng = SuiteRng(seed, 3);
  int vcg_out_of_range = 0;
  for (ReferenceRule rule : kAllRules) {
    for (CaseLabel label : kAllCases) {
      int checked = 0;
      while (checked < samples) {
        const LlgBidProfile profile = SampleProfile(label, 1.0, rng);
        const LocalBidder bidder =
            checked % 2 == 0 ? LocalBidder::kFirst : LocalBidder::kSecond;
        const DerivativeReport report =
            ProjectionDerivative(profile, rule, bidder);
        if (report.near_boundary) continue;
        double numeric = 0.0;
        try {
          numeric = NumericDerivative(profile, rule, std::nullopt, bidder);
        } catch (const BoundaryProximityError&) {
          continue;
        }
        ++checked;
        ++result.total;
        if (std::abs(numeric - report.derivative) <=
            kFiniteDifferenceTolerance) {
          ++result.passed;
        } else if (result.notes.size() < 10) {
          result.notes.push_back(fmt::format(
              "{} at ({}, {}, {}) bidder {}: analytic {} numeric {}",
              RuleName(rule), profile.a(), profile.b(), profile.g(),
              static_cast<int>(bidder), report.derivative, numeric));
        }
        if (rule == ReferenceRule::kVcg && report.derivative != 0.0 &&
            report.derivative != 0.5) {
          ++vcg_out_of_range;
        }
      }
    }
  }
  if (vcg_out_of_range > 0) {
    result.total += 1;
    result.notes.push_back(fmt::format(
        "VCG-nearest derivative outside {{0, 1/2}} at {} points",
        vcg_out_of_range));
  }
  return result;
}

SuiteResult VerifyConditionTable(std::uint64_t seed, int samples) {
  SuiteResult result{"condition-table", "rows", 0, 0, {}};
  std::mt19937_64 rng = SuiteRng(seed, 4);
  for (const ConditionRow& row : ShapleyConditionTable()) {
    ++result.total;
    int exact_mismatches = 0;
    int stated_mismatches = 0;
    for (int s = 0; s < samples; ++s) {
      const LlgBidProfile profile = SampleProfile(row.case_label, 1.0, rng);
      const bool holds = CapInequalityHolds(profile, row.rule, row.inequality);
      if (row.exact_holds(profile) != holds) ++exact_mismatches;
      if (row.stated_holds(profile) != holds) ++stated_mismatches;
    }
    const std::string name = fmt::format(
        "{}/{}/{}", RuleName(row.rule), CaseName(row.case_label),
        row.inequality == CapInequality::kOwn ? "own-cap" : "other-cap");
    if (exact_mismatches == 0) {
      ++result.passed;
    } else {
      result.notes.push_back(fmt::format("{}: exact condition '{}' mismatched "
                                         "{} of {} samples",
                                         name, row.exact, exact_mismatches,
                                         samples));
    }
    if (!row.agrees) {
      result.notes.push_back(fmt::format(
          "{}: commonly stated condition '{}' mismatched {} of {} samples; "
          "exact condition is '{}'",
          name, row.stated, stated_mismatches, samples, row.exact));
    }
  }
  return result;
}

SuiteResult VerifyShapleyEfficiency(std::uint64_t seed, int samples) {
  SuiteResult result{"shapley-efficiency", "instances", 0, 0, {}};
  std::mt19937_64 rng = SuiteRng(seed, 5);
  for (int s = 0; s < samples; ++s) {
    const AuctionInstance instance = RandomInstance(rng, 5, 4);
    const double welfare = CoalitionalValue(instance, instance.AllBidders());
    const double without =
        ShapleyPayoffs(instance, Auctioneer::kExcluded).Sum();
    const double with = ShapleyPayoffs(instance, Auctioneer::kIncluded).Sum() +
                        AuctioneerShapleyPayoff(instance);
    ++result.total;
    if (std::abs(without - welfare) <= kTolerance &&
        std::abs(with - welfare) <= kTolerance) {
      ++result.passed;
    }
  }
  return result;
}

SuiteResult VerifyCoreProjection(std::uint64_t seed, int samples) {
  SuiteResult result{"core-projection", "cells", 0, 0, {}};
  std::mt19937_64 rng = SuiteRng(seed, 6);
  for (ReferenceRule rule : kAllRules) {
    for (CaseLabel label : kAllCases) {
      ++result.total;
      int bad = 0;
      for (int s = 0; s < samples; ++s) {
        const LlgBidProfile profile = SampleProfile(label, 1.0, rng);
        const AuctionInstance instance = AuctionInstance::Llg(profile);
        const PaymentVector projected =
            ProjectToMrc(profile, ComputeReference(instance, rule));
        const bool on_mrc =
            std::abs(projected.of(1) + projected.of(2) - profile.g()) <=
            kSumTolerance;
        bool below = true;
        if (rule == ReferenceRule::kShapleyPaymentNoAuctioneer) {
          const PaymentVector ref = ClosedFormReference(profile, rule);
          below = ref.of(1) + ref.of(2) <= profile.g() + kSumTolerance;
        }
        if (!on_mrc || !below || !IsInCore(instance, projected)) ++bad;
      }
      if (bad == 0) {
        ++result.passed;
      } else {
        result.notes.push_back(fmt::format("{}: {} of {} samples failed",
                                           CellName(rule, label), bad,
                                           samples));
      }
    }
  }
  return result;
}

SuiteResult VerifyBoundaryContinuity(std::uint64_t seed, int samples) {
  SuiteResult result{"boundary-continuity", "rules", 0, 0, {}};
  std::mt19937_64 rng = SuiteRng(seed, 7);
  for (ReferenceRule rule : kAllRules) {
    ++result.total;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      const double other = Uniform(rng, 0.0, 2.0);
      const bool on_a = s % 2 == 0;
      // On A = G the two sides differ in bidder 1's strength, on B = G in
      // bidder 2's.
      const LlgBidProfile profile =
          on_a ? LlgBidProfile(1.0, other, 1.0) : LlgBidProfile(other, 1.0, 1.0);
      const bool other_strong = other > 1.0;
      CaseLabel weak_side, strong_side;
      if (on_a) {
        weak_side = other_strong ? CaseLabel::kLocal2Strong : CaseLabel::kLocalsWeak;
        strong_side =
            other_strong ? CaseLabel::kLocalsStrong : CaseLabel::kLocal1Strong;
      } else {
        weak_side = other_strong ? CaseLabel::kLocal1Strong : CaseLabel::kLocalsWeak;
        strong_side =
            other_strong ? CaseLabel::kLocalsStrong : CaseLabel::kLocal2Strong;
      }
      const PaymentVector x = ClosedFormReference(profile, rule, weak_side);
      const PaymentVector y = ClosedFormReference(profile, rule, strong_side);
      for (int id : {1, 2}) {
        worst = std::max(worst, std::abs(x.of(id) - y.of(id)));
      }
    }
    if (worst <= kTolerance) {
      ++result.passed;
    } else {
      result.notes.push_back(fmt::format("{}: max jump {:.3e}",
                                         RuleName(rule), worst));
    }
  }
  return result;
}

SuiteResult VerifyScalingAndSymmetry(std::uint64_t seed, int samples) {
  SuiteResult result{"scaling-symmetry", "cells", 0, 0, {}};
  std::mt19937_64 rng = SuiteRng(seed, 8);
  for (ReferenceRule rule : kAllRules) {
    for (CaseLabel label : kAllCases) {
      ++result.total;
      int bad = 0;
      for (int s = 0; s < samples; ++s) {
        const LlgBidProfile profile = SampleProfile(label, 1.0, rng);
        const double t = Uniform(rng, 0.1, 10.0);
        const PaymentVector base =
            ComputeReference(AuctionInstance::Llg(profile), rule);
        const PaymentVector scaled =
            ComputeReference(AuctionInstance::Llg(profile.Scaled(t)), rule);
        const PaymentVector mirrored =
            ComputeReference(AuctionInstance::Llg(profile.Mirrored()), rule);
        bool good = true;
        for (int id : {1, 2, 3}) {
          good &= std::abs(scaled.of(id) - t * base.of(id)) <= t * kTolerance;
        }
        good &= std::abs(mirrored.of(1) - base.of(2)) <= kTolerance &&
                std::abs(mirrored.of(2) - base.of(1)) <= kTolerance &&
                std::abs(mirrored.of(3) - base.of(3)) <= kTolerance;
        const DerivativeReport second =
            ProjectionDerivative(profile, rule, LocalBidder::kSecond);
        const DerivativeReport first_mirrored =
            ProjectionDerivative(profile.Mirrored(), rule, LocalBidder::kFirst);
        good &= second.region == first_mirrored.region &&
                second.derivative == first_mirrored.derivative &&
                second.sensitivity == first_mirrored.sensitivity;
        if (!good) ++bad;
      }
      if (bad == 0) {
        ++result.passed;
      } else {
        result.notes.push_back(fmt::format("{}: {} of {} samples failed",
                                           CellName(rule, label), bad,
                                           samples));
      }
    }
  }
  return result;
}

std::vector<SuiteResult> RunAllSuites(std::uint64_t seed, int samples) {
  return {VerifyClosedForms(seed, samples),
          VerifySensitivities(seed, samples),
          VerifyProjectionDerivatives(seed, samples),
          VerifyConditionTable(seed, samples),
          VerifyShapleyEfficiency(seed, samples),
          VerifyCoreProjection(seed, samples),
          VerifyBoundaryContinuity(seed, samples),
          VerifyScalingAndSymmetry(seed, samples)};
}

}  // namespace refpoint
