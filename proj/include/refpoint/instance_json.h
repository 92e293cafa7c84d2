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

#ifndef REFPOINT_INSTANCE_JSON_H_
#define REFPOINT_INSTANCE_JSON_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "refpoint/ca_model.h"

namespace refpoint {

class InstanceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Format:
//   {"goods":["g1","g2"],
//    "bidders":[{"id":1,"bids":[{"bundle":["g1"],"value":0.4}]}, ...]}
//
// Malformed JSON or a wrong shape throws InstanceFormatError; a well-formed
// document describing an invalid auction throws the ca_model errors.
AuctionInstance ParseInstanceJson(const std::string& text);
AuctionInstance LoadInstanceJson(const std::filesystem::path& path);
std::string ToJson(const AuctionInstance& instance);

}  // namespace refpoint

#endif  // REFPOINT_INSTANCE_JSON_H_
