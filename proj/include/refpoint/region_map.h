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

#ifndef REFPOINT_REGION_MAP_H_
#define REFPOINT_REGION_MAP_H_

#include <optional>
#include <ostream>
#include <vector>

#include "refpoint/llg_analytics.h"
#include "refpoint/reference_points.h"

namespace refpoint {

struct RegionCell {
  double a = 0.0;
  double b = 0.0;
  CaseLabel case_label = CaseLabel::kLocalsWeak;
  std::optional<DerivativeReport> report;  // empty: the global bidder wins

  bool global_winner() const { return !report.has_value(); }
};

// Bidder-1 projection derivatives over the cell centers of a square grid on
// [0, 2G]^2. Cells are stored row-major: A is the outer index, B the inner.
struct RegionMap {
  ReferenceRule rule = ReferenceRule::kVcg;
  double g = 1.0;
  int resolution = 0;
  std::vector<RegionCell> cells;

  const RegionCell& at(int ia, int ib) const {
    return cells.at(static_cast<std::size_t>(ia) * resolution + ib);
  }
};

// Throws std::invalid_argument unless resolution >= 2 and G > 0.
RegionMap ComputeRegionMap(ReferenceRule rule, double g, int resolution);

// Header "A,B,case,region,derivative,sensitivity"; numbers at full
// round-trip precision. Global-winner rows carry region GLOBAL and leave
// derivative and sensitivity empty.
void WriteRegionMapCsv(const RegionMap& map, std::ostream& out);

}  // namespace refpoint

#endif  // REFPOINT_REGION_MAP_H_
