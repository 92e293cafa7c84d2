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

#include "refpoint/instance_json.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace refpoint {

using nlohmann::json;

AuctionInstance ParseInstanceJson(const std::string& text) {
  std::vector<std::string> goods;
  std::vector<Bidder> bidders;
  try {
    const json doc = json::parse(text);
    goods = doc.at("goods").get<std::vector<std::string>>();
    for (const json& entry : doc.at("bidders")) {
      Bidder& bidder = bidders.emplace_back();
      bidder.id = entry.at("id").get<int>();
      for (const json& bid : entry.at("bids")) {
        bidder.bids.push_back(
            AtomicBid{bid.at("bundle").get<std::vector<std::string>>(),
                      bid.at("value").get<double>()});
      }
    }
  } catch (const json::exception& e) {
    throw InstanceFormatError(fmt::format("malformed instance JSON: {}", e.what()));
  }
  return AuctionInstance(std::move(goods), std::move(bidders));
}

AuctionInstance LoadInstanceJson(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InstanceFormatError(
        fmt::format("cannot open instance file '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceJson(buffer.str());
}

std::string ToJson(const AuctionInstance& instance) {
  json bidders = json::array();
  for (const Bidder& bidder : instance.bidders()) {
    json bids = json::array();
    for (const AtomicBid& bid : bidder.bids) {
      bids.push_back({{"bundle", bid.bundle}, {"value", bid.value}});
    }
    bidders.push_back({{"id", bidder.id}, {"bids", std::move(bids)}});
  }
  return json{{"goods", instance.goods()}, {"bidders", std::move(bidders)}}
      .dump();
}

}  // namespace refpoint
