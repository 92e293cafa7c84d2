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

#include <gtest/gtest.h>

#include "refpoint/reference_points.h"

namespace refpoint {
namespace {

constexpr char kLlgJson[] = R"({
  "goods": ["g1", "g2"],
  "bidders": [
    {"id": 1, "bids": [{"bundle": ["g1"], "value": 0.4}]},
    {"id": 2, "bids": [{"bundle": ["g2"], "value": 0.5}]},
    {"id": 3, "bids": [{"bundle": ["g1", "g2"], "value": 0.8}]}
  ]
})";

TEST(InstanceJsonTest, ParsesDocumentedFormat) {
  const AuctionInstance instance = ParseInstanceJson(kLlgJson);
  EXPECT_EQ(instance.num_bidders(), 3);
  EXPECT_EQ(instance.num_goods(), 2);
  EXPECT_EQ(instance.bidder(3).bids[0].bundle,
            (std::vector<std::string>{"g1", "g2"}));
  // Same auction as the LLG shorthand.
  const PaymentVector vcg = Vcg(instance);
  const PaymentVector shorthand =
      Vcg(AuctionInstance::Llg(LlgBidProfile(0.4, 0.5, 0.8)));
  for (int id = 1; id <= 3; ++id) EXPECT_NEAR(vcg.of(id), shorthand.of(id), 1e-12);
}

TEST(InstanceJsonTest, RoundTrips) {
  const AuctionInstance instance = ParseInstanceJson(kLlgJson);
  const AuctionInstance again = ParseInstanceJson(ToJson(instance));
  EXPECT_EQ(ToJson(again), ToJson(instance));
}

TEST(InstanceJsonTest, BidderOrderInFileDoesNotMatter) {
  const AuctionInstance instance = ParseInstanceJson(R"({"goods":["x"],
    "bidders":[{"id":2,"bids":[{"bundle":["x"],"value":2}]},
               {"id":1,"bids":[{"bundle":["x"],"value":1}]}]})");
  EXPECT_EQ(instance.bidder(2).bids[0].value, 2.0);
}

TEST(InstanceJsonTest, MalformedInputThrowsFormatError) {
  EXPECT_THROW(ParseInstanceJson("{not json"), InstanceFormatError);
  EXPECT_THROW(ParseInstanceJson(R"({"goods":["a"]})"), InstanceFormatError);
  EXPECT_THROW(ParseInstanceJson(
                   R"({"goods":["a"],"bidders":[{"id":1,"bids":[{"value":1}]}]})"),
               InstanceFormatError);
  EXPECT_THROW(LoadInstanceJson("/nonexistent/instance.json"),
               InstanceFormatError);
}

TEST(InstanceJsonTest, InvalidAuctionThrowsModelError) {
  EXPECT_THROW(ParseInstanceJson(
                   R"({"goods":["a"],"bidders":[{"id":1,"bids":[{"bundle":["b"],"value":1}]}]})"),
               InvalidInstanceError);
}

}  // namespace
}  // namespace refpoint
