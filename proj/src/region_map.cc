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

#include "refpoint/region_map.h"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace refpoint {

RegionMap ComputeRegionMap(ReferenceRule rule, double g, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument(
        fmt::format("resolution must be at least 2, got {}", resolution));
  }
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw std::invalid_argument(fmt::format("G must be positive, got {}", g));
  }
  RegionMap map{rule, g, resolution, {}};
  map.cells.reserve(static_cast<std::size_t>(resolution) * resolution);
  const double width = 2.0 * g / resolution;
  for (int ia = 0; ia < resolution; ++ia) {
    for (int ib = 0; ib < resolution; ++ib) {
      const LlgBidProfile profile((ia + 0.5) * width, (ib + 0.5) * width, g);
      RegionCell& cell = map.cells.emplace_back();
      cell.a = profile.a();
      cell.b = profile.b();
      cell.case_label = ClassifyCase(profile);
      if (profile.LocalsWin()) cell.report = ProjectionDerivative(profile, rule);
    }
  }
  return map;
}

void WriteRegionMapCsv(const RegionMap& map, std::ostream& out) {
  fmt::print(out, "A,B,case,region,derivative,sensitivity\n");
  for (const RegionCell& cell : map.cells) {
    if (cell.global_winner()) {
      fmt::print(out, "{},{},{},GLOBAL,,\n", cell.a, cell.b,
                 CaseName(cell.case_label));
    } else {
      fmt::print(out, "{},{},{},{},{},{}\n", cell.a, cell.b,
                 CaseName(cell.case_label), RegionName(cell.report->region),
                 cell.report->derivative, cell.report->sensitivity);
    }
  }
}

}  // namespace refpoint
