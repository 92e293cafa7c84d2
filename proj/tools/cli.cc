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

#include "cli.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <memory>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "refpoint/core_geometry.h"
#include "refpoint/instance_json.h"
#include "refpoint/llg_analytics.h"

namespace refpoint::cli {

namespace {

constexpr std::array<std::pair<const char*, Subcommand>, 7> kSubcommands = {{
    {"payments", Subcommand::kPayments},
    {"project", Subcommand::kProject},
    {"sensitivity", Subcommand::kSensitivity},
    {"derivative", Subcommand::kDerivative},
    {"region-map", Subcommand::kRegionMap},
    {"verify-table", Subcommand::kVerifyTable},
    {"core-check", Subcommand::kCoreCheck},
}};

std::string RuleChoices() {
  std::vector<std::string> names;
  for (ReferenceRule rule : kAllRules) names.emplace_back(RuleName(rule));
  return fmt::format("{}", fmt::join(names, ", "));
}

// Six decimals, trailing zeros dropped: 0.5 -> "0.5", 1/6 -> "0.166667".
std::string Num(double value) {
  std::string s = fmt::format("{:.6f}", value);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string VectorLine(const PaymentVector& v) {
  const char* prefix = v.kind == VectorKind::kPayoff ? "pi" : "p";
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    parts.push_back(fmt::format("{}{}={}", prefix, i + 1, Num(v.values[i])));
  }
  return fmt::format("{}", fmt::join(parts, " "));
}

void CheckNonNegative(const char* what, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument(
        fmt::format("{} must be finite and non-negative, got {}", what, value));
  }
}

// Destination for a payload: the --out file when given, else `fallback`.
class Output {
 public:
  Output(const std::optional<std::string>& path, std::ostream& fallback)
      : stream_(&fallback) {
    if (path) {
      file_ = std::make_unique<std::ofstream>(*path);
      if (!*file_) {
        throw std::ios_base::failure(
            fmt::format("cannot open '{}' for writing", *path));
      }
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

AuctionInstance InstanceFor(const Command& command) {
  if (command.instance_path) return LoadInstanceJson(*command.instance_path);
  return AuctionInstance::Llg(*command.llg);
}

LocalBidder BidderOf(const Command& command) {
  return command.bidder == 2 ? LocalBidder::kSecond : LocalBidder::kFirst;
}

int RunPayments(const Command& command, std::ostream& out) {
  const AuctionInstance instance = InstanceFor(command);
  const PaymentVector ref = ComputeReference(instance, command.rule);
  if (command.llg) {
    fmt::print(out, "case={} {}\n", CaseName(ClassifyCase(*command.llg)),
               VectorLine(ref));
  } else {
    fmt::print(out, "{}\n", VectorLine(ref));
  }
  return kExitOk;
}

int RunProject(const Command& command, std::ostream& out) {
  const LlgBidProfile& profile = *command.llg;
  const PaymentVector ref =
      ComputeReference(AuctionInstance::Llg(profile), command.rule);
  const PaymentVector projected =
      ProjectToMrc(profile, ref, LcMetric(command.metric));
  fmt::print(out, "case={} {}\n", CaseName(ClassifyCase(profile)),
             VectorLine(projected));
  return kExitOk;
}

int RunSensitivity(const Command& command, std::ostream& out) {
  const CaseLabel label = ClassifyCase(*command.llg);
  fmt::print(out, "case={} sens1={} sens2={}\n", CaseName(label),
             SensitivityExact(label, command.rule, LocalBidder::kFirst),
             SensitivityExact(label, command.rule, LocalBidder::kSecond));
  return kExitOk;
}

int RunDerivative(const Command& command, std::ostream& out,
                  std::ostream& err) {
  const LlgBidProfile& profile = *command.llg;
  const DerivativeReport report =
      ProjectionDerivative(profile, command.rule, BidderOf(command));
  std::string numeric;
  try {
    numeric = Num(NumericDerivative(profile, command.rule, command.step,
                                    BidderOf(command)));
  } catch (const BoundaryProximityError& e) {
    numeric = "n/a";
    fmt::print(err, "warning: {}\n", e.what());
  }
  if (report.near_boundary) {
    fmt::print(err, "warning: profile lies on a kink; derivative is one-sided\n");
  }
  fmt::print(out, "case={} region={} d={} numeric={} sens={}\n",
             CaseName(report.case_label), RegionName(report.region),
             Num(report.derivative), numeric, Num(report.sensitivity));
  return kExitOk;
}

int RunRegionMap(const Command& command, std::ostream& out) {
  const RegionMap map =
      ComputeRegionMap(command.rule, command.g, command.resolution);
  Output csv(command.out_path, out);
  WriteRegionMapCsv(map, csv.stream());
  if (command.svg_path) {
    Output svg(command.svg_path, out);
    EmitSvg(map, svg.stream());
  }
  return kExitOk;
}

int RunVerifyTable(const Command& command, std::ostream& out) {
  const std::vector<SuiteResult> results =
      RunAllSuites(command.seed, command.samples);
  int failed = 0;
  for (const SuiteResult& r : results) {
    fmt::print(out, "{}: {}/{} {} {}\n", r.name, r.passed, r.total, r.unit,
               r.ok() ? "passed" : "FAILED");
    for (const std::string& note : r.notes) fmt::print(out, "  {}\n", note);
    if (!r.ok()) ++failed;
  }
  if (failed == 0) {
    fmt::print(out, "all {} suites passed (seed {}, {} samples)\n",
               results.size(), command.seed, command.samples);
    return kExitOk;
  }
  fmt::print(out, "{} of {} suites FAILED\n", failed, results.size());
  return kExitVerificationFailed;
}

int RunCoreCheck(const Command& command, std::ostream& out) {
  const AuctionInstance instance = InstanceFor(command);
  const std::vector<CoreViolation> violations =
      CoreViolations(instance, PaymentVector{command.payments});
  nlohmann::json list = nlohmann::json::array();
  for (const CoreViolation& v : violations) {
    list.push_back({
        {"kind", ConstraintKindName(v.constraint.kind)},
        {"coalition", v.constraint.coalition.Ids()},
        {"payers", v.constraint.payers.Ids()},
        {"sense", v.constraint.sense == Sense::kAtLeast ? ">=" : "<="},
        {"bound", v.constraint.bound},
        {"lhs", v.lhs},
        {"shortfall", v.shortfall},
    });
  }
  fmt::print(out, "{}\n", list.dump(2));
  return kExitOk;
}

std::string HexColor(int r, int g, int b) {
  return fmt::format("#{:02x}{:02x}{:02x}", r, g, b);
}

// Derivatives live in [0, 1]; blue at 0 through yellow to red at 1.
std::string DerivativeColor(double d) {
  const double t = std::clamp(d, 0.0, 1.0);
  struct Stop {
    double at;
    int r, g, b;
  };
  constexpr std::array<Stop, 3> stops = {
      {{0.0, 49, 54, 149}, {0.5, 254, 224, 144}, {1.0, 165, 0, 38}}};
  const Stop& lo = t <= 0.5 ? stops[0] : stops[1];
  const Stop& hi = t <= 0.5 ? stops[1] : stops[2];
  const double u = (t - lo.at) / (hi.at - lo.at);
  auto mix = [u](int x, int y) {
    return static_cast<int>(std::lround(x + (y - x) * u));
  };
  return HexColor(mix(lo.r, hi.r), mix(lo.g, hi.g), mix(lo.b, hi.b));
}

}  // namespace

Command Parse(const std::vector<std::string>& args) {
  Command command;
  CLI::App app{"Reference-point payment rules and core projections in LLG",
               "refpoint"};
  app.require_subcommand(1);

  std::vector<double> llg;
  std::string instance_path, out_path, svg_path, rule_name = "vcg";
  double step = 0.0;

  auto add_rule = [&](CLI::App* sub) {
    sub->add_option("--rule", rule_name, "Reference rule: " + RuleChoices())
        ->check(CLI::IsMember([] {
          std::vector<std::string> names;
          for (ReferenceRule rule : kAllRules) names.emplace_back(RuleName(rule));
          return names;
        }()));
  };
  auto add_llg = [&](CLI::App* sub) {
    return sub->add_option("--llg", llg, "LLG bids A B G")->expected(3);
  };

  CLI::App* payments =
      app.add_subcommand("payments", "Reference payment vector and case");
  {
    auto* l = add_llg(payments);
    auto* i = payments->add_option("--instance", instance_path,
                                   "General instance JSON");
    l->excludes(i);
    add_rule(payments);
  }
  CLI::App* project =
      app.add_subcommand("project", "Minimum-revenue-core projection");
  add_llg(project)->required();
  add_rule(project);
  project->add_option("--metric", command.metric, "L_c exponent, c > 1");

  CLI::App* sensitivity =
      app.add_subcommand("sensitivity", "Exact sensitivities sens1, sens2");
  add_llg(sensitivity)->required();
  add_rule(sensitivity);

  CLI::App* derivative = app.add_subcommand(
      "derivative", "Projection derivative with a numeric cross-check");
  derivative->set_help_flag("--help", "Print this help message and exit");
  add_llg(derivative)->required();
  add_rule(derivative);
  derivative->add_option("--bidder", command.bidder, "Local bidder 1 or 2")
      ->check(CLI::Range(1, 2));
  auto* step_opt =
      derivative->add_option("--h", step, "Finite-difference step");
  derivative->add_option("--metric", command.metric, "L_c exponent, c > 1");

  CLI::App* region_map =
      app.add_subcommand("region-map", "Derivative map over [0, 2G]^2 as CSV");
  add_rule(region_map);
  region_map->add_option("--g", command.g, "Global bid G > 0");
  region_map->add_option("--resolution", command.resolution,
                         "Cells per axis, >= 2");
  region_map->add_option("--out", out_path, "CSV path (default stdout)");
  region_map->add_option("--svg", svg_path, "Also write an SVG heatmap");
  region_map->add_option("--metric", command.metric, "L_c exponent, c > 1");

  CLI::App* verify =
      app.add_subcommand("verify-table", "Run every verification suite");
  verify->add_option("--seed", command.seed, "Random seed");
  verify->add_option("--samples", command.samples,
                     "Samples per case (and per rule)");
  verify->add_option("--out", out_path, "Report path (default stdout)");

  CLI::App* core_check =
      app.add_subcommand("core-check", "List violated core constraints");
  {
    auto* l = add_llg(core_check);
    auto* i = core_check->add_option("--instance", instance_path,
                                     "General instance JSON");
    l->excludes(i);
    core_check->add_option("--payments", command.payments,
                           "Payment per bidder")
        ->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::string help = app.help();
    for (CLI::App* sub : app.get_subcommands()) help = sub->help();
    const bool asked = e.get_exit_code() == 0;
    throw UsageError(e.what(), help, asked ? kExitOk : kExitUsage);
  }

  CLI::App* chosen = app.get_subcommands().front();
  for (const auto& [name, sub] : kSubcommands) {
    if (chosen->get_name() == name) command.subcommand = sub;
  }
  command.rule = *ParseRule(rule_name);
  if (!out_path.empty()) command.out_path = out_path;
  if (!svg_path.empty()) command.svg_path = svg_path;
  if (!instance_path.empty()) command.instance_path = instance_path;
  if (*step_opt) command.step = step;

  try {
    if (!llg.empty()) command.llg = LlgBidProfile(llg[0], llg[1], llg[2]);
    for (double p : command.payments) CheckNonNegative("payment", p);
    if (command.step) {
      if (!(*command.step > 0.0) || !std::isfinite(*command.step)) {
        throw std::invalid_argument("--h must be positive");
      }
    }
    static_cast<void>(LcMetric(command.metric));
    if (!(command.g > 0.0) || !std::isfinite(command.g)) {
      throw std::invalid_argument("--g must be positive");
    }
    if (command.resolution < 2) {
      throw std::invalid_argument("--resolution must be at least 2");
    }
    if (command.samples < 1) {
      throw std::invalid_argument("--samples must be at least 1");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what(), chosen->help(), kExitUsage);
  }
  const bool needs_input = command.subcommand == Subcommand::kPayments ||
                           command.subcommand == Subcommand::kCoreCheck;
  if (needs_input && !command.llg && !command.instance_path) {
    throw UsageError("one of --llg or --instance is required", chosen->help(),
                     kExitUsage);
  }
  return command;
}

int Execute(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    Output payload(command.subcommand == Subcommand::kRegionMap
                       ? std::nullopt
                       : command.out_path,
                   out);
    std::ostream& o = payload.stream();
    switch (command.subcommand) {
      case Subcommand::kPayments:
        return RunPayments(command, o);
      case Subcommand::kProject:
        return RunProject(command, o);
      case Subcommand::kSensitivity:
        return RunSensitivity(command, o);
      case Subcommand::kDerivative:
        return RunDerivative(command, o, err);
      case Subcommand::kRegionMap:
        return RunRegionMap(command, o);
      case Subcommand::kVerifyTable:
        return RunVerifyTable(command, o);
      case Subcommand::kCoreCheck:
        return RunCoreCheck(command, o);
    }
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

void EmitSvg(const RegionMap& map, std::ostream& out) {
  const int n = map.resolution;
  const int cell = std::max(1, 600 / n);
  const int size = cell * n;
  fmt::print(out,
             "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
             "width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
             "<title>d proj(p)_1 / dA, rule {1}, G = {2}</title>\n",
             size, RuleName(map.rule), map.g);
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      const RegionCell& c = map.at(ia, ib);
      const std::string fill = c.global_winner()
                                   ? std::string("#ffffff")
                                   : DerivativeColor(c.report->derivative);
      fmt::print(out,
                 "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" "
                 "fill=\"{}\"/>\n",
                 ia * cell, (n - 1 - ib) * cell, cell, cell, fill);
    }
  }
  // The grid spans [0, 2G], so A = G and B = G sit at the midlines.
  const double mid = size / 2.0;
  fmt::print(out,
             "<line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{1}\" stroke=\"red\" "
             "stroke-width=\"2\"/>\n"
             "<line x1=\"0\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\" stroke=\"red\" "
             "stroke-width=\"2\"/>\n"
             "</svg>\n",
             mid, size);
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Command command;
  try {
    command = Parse(args);
  } catch (const UsageError& e) {
    if (e.exit_code() == kExitOk) {
      fmt::print(out, "{}", e.help());
    } else {
      fmt::print(err, "error: {}\n\n{}", e.what(), e.help());
    }
    return e.exit_code();
  }
  return Execute(command, out, err);
}

}  // namespace refpoint::cli
