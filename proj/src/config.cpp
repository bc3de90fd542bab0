// Copyright 2026 The hamparity Authors
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

#include "hamparity/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "hamparity/error.hpp"

namespace hamparity {
namespace {

std::size_t initial_oracle_cap() {
  const char* env = std::getenv("HAMPARITY_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOracleCap;
  try {
    std::size_t pos = 0;
    const unsigned long value = std::stoul(env, &pos);
    if (env[pos] == '\0' && value >= 1) return value;
  } catch (const std::exception&) {
  }
  return kDefaultOracleCap;
}

std::atomic<std::size_t>& oracle_cap_slot() {
  static std::atomic<std::size_t> slot{initial_oracle_cap()};
  return slot;
}

std::atomic<std::size_t> subset_sum_cap_slot{kDefaultSubsetSumCap};
std::atomic<std::size_t> dp_cap_slot{kDefaultDpCap};
std::atomic<std::size_t> path_system_cap_slot{kDefaultPathSystemCap};

}  // namespace

std::size_t oracle_cap() { return oracle_cap_slot().load(); }
void set_oracle_cap(std::size_t cap) { oracle_cap_slot().store(cap); }

std::size_t subset_sum_cap() { return subset_sum_cap_slot.load(); }
void set_subset_sum_cap(std::size_t cap) { subset_sum_cap_slot.store(cap); }

std::size_t dp_cap() { return dp_cap_slot.load(); }
void set_dp_cap(std::size_t cap) {
  // 33! is the largest factorial below 2^128, the widest DP cell type.
  dp_cap_slot.store(cap < 33 ? cap : 33);
}

std::size_t path_system_cap() { return path_system_cap_slot.load(); }
void set_path_system_cap(std::size_t cap) { path_system_cap_slot.store(cap); }

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotDirected: return "NotDirected";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ScaleRefusal: return "ScaleRefusal";
    case ErrorCode::MalformedRequirement: return "MalformedRequirement";
    case ErrorCode::NotATournament: return "NotATournament";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::EmptyA: return "EmptyA";
    case ErrorCode::MalformedExtension: return "MalformedExtension";
    case ErrorCode::DuplicateEndpointPair: return "DuplicateEndpointPair";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
  }
  return "Unknown";
}

}  // namespace hamparity
