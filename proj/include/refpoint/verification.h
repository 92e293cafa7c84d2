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

#ifndef REFPOINT_VERIFICATION_H_
#define REFPOINT_VERIFICATION_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "refpoint/ca_model.h"
#include "refpoint/llg_analytics.h"

namespace refpoint {

inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr int kDefaultSamples = 1000;

// Uniform draw from the locals-win part of one case, with strong bids taken
// from (G, 2G] and weak ones from [0, G].
LlgBidProfile SampleProfile(CaseLabel label, double g, std::mt19937_64& rng);

// Random XOR instance with 1..max_bidders bidders, 1..max_goods goods and
// 1..3 bids per bidder, values uniform in [0, 1].
AuctionInstance RandomInstance(std::mt19937_64& rng, int max_bidders,
                               int max_goods);

struct SuiteResult {
  std::string name;
  std::string unit;  // what `passed` and `total` count
  int passed = 0;
  int total = 0;
  std::vector<std::string> notes;

  bool ok() const { return passed == total; }
};

// Closed forms against the general engine, one cell per (rule, case).
SuiteResult VerifyClosedForms(std::uint64_t seed, int samples);
// Stored sensitivities against central differences of the closed forms.
SuiteResult VerifySensitivities(std::uint64_t seed, int samples);
// Analytic projection derivatives against the numeric pipeline, for both
// local bidders, plus the {0, 1/2} range of VCG-nearest.
SuiteResult VerifyProjectionDerivatives(std::uint64_t seed, int samples);
// Exact condition rows against direct inequality evaluation; the stated rows
// that disagree are reported in the notes.
SuiteResult VerifyConditionTable(std::uint64_t seed, int samples);
// Efficiency of both Shapley variants on random instances.
SuiteResult VerifyShapleyEfficiency(std::uint64_t seed, int samples);
// Projections land in the core with p1 + p2 = G, Shapley payments without
// auctioneer never exceed G in total.
SuiteResult VerifyCoreProjection(std::uint64_t seed, int samples);
// Closed forms of adjacent cases agree on A = G and B = G.
SuiteResult VerifyBoundaryContinuity(std::uint64_t seed, int samples);
// Degree-1 homogeneity and local-bidder symmetry of the engine.
SuiteResult VerifyScalingAndSymmetry(std::uint64_t seed, int samples);

std::vector<SuiteResult> RunAllSuites(std::uint64_t seed, int samples);

}  // namespace refpoint

#endif  // REFPOINT_VERIFICATION_H_
