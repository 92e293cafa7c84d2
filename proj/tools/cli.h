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

#ifndef REFPOINT_TOOLS_CLI_H_
#define REFPOINT_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "refpoint/ca_model.h"
#include "refpoint/reference_points.h"
#include "refpoint/region_map.h"
#include "refpoint/verification.h"

namespace refpoint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Subcommand {
  kPayments,
  kProject,
  kSensitivity,
  kDerivative,
  kRegionMap,
  kVerifyTable,
  kCoreCheck,
};

struct Command {
  Subcommand subcommand = Subcommand::kPayments;
  std::optional<LlgBidProfile> llg;
  std::optional<std::string> instance_path;
  ReferenceRule rule = ReferenceRule::kVcg;
  double metric = 2.0;
  int bidder = 1;
  std::optional<double> step;
  double g = 1.0;
  int resolution = 200;
  std::optional<std::string> out_path;
  std::optional<std::string> svg_path;
  std::uint64_t seed = kDefaultSeed;
  int samples = kDefaultSamples;
  std::vector<double> payments;
};

// Bad command line. `help` is the usage text of the offending (sub)command;
// `exit_code` is kExitOk when help was explicitly requested.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, std::string help, int exit_code)
      : std::runtime_error(message),
        help_(std::move(help)),
        exit_code_(exit_code) {}
  const std::string& help() const { return help_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string help_;
  int exit_code_;
};

// `args` excludes the program name.
Command Parse(const std::vector<std::string>& args);

// Runs a parsed command, writing the payload to `out` (or the --out file)
// and diagnostics to `err`. Returns the process exit code.
int Execute(const Command& command, std::ostream& out, std::ostream& err);

// Static SVG raster of a bidder-1 derivative map: one rect per cell, colored
// by derivative (global-winner cells white), with red lines at A = G and
// B = G. A grows to the right, B upwards.
void EmitSvg(const RegionMap& map, std::ostream& out);

// Parse + Execute with usage errors mapped to exit codes.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace refpoint::cli

#endif  // REFPOINT_TOOLS_CLI_H_
