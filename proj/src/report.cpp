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

#include "hamparity/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "hamparity/error.hpp"

namespace hamparity {

const char* engine_name(Engine e) noexcept {
  switch (e) {
    case Engine::Oracle: return "oracle";
    case Engine::Dp: return "dp";
    case Engine::Both: return "both";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "oracle") return Engine::Oracle;
  if (name == "dp") return Engine::Dp;
  if (name == "both") return Engine::Both;
  return std::nullopt;
}

void ParityReport::add(std::string name, Count value) {
  counts.push_back({std::move(name), std::move(value)});
}

bool ParityReport::has_count(std::string_view name) const {
  return std::any_of(counts.begin(), counts.end(),
                     [&](const NamedCount& c) { return c.name == name; });
}

const Count& ParityReport::count(std::string_view name) const {
  for (const auto& c : counts)
    if (c.name == name) return c.value;
  throw Error(ErrorCode::InvalidArgument,
              "report has no count named '" + std::string(name) + "'");
}

std::string ParityReport::to_json() const {
  // ordered_json keeps counts in insertion order.
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["n"] = n;
  nlohmann::ordered_json inputs;
  inputs["digest"] = digest;
  for (const auto& [key, value] : params) inputs[key] = value;
  j["inputs"] = inputs;
  nlohmann::ordered_json cs = nlohmann::ordered_json::object();
  nlohmann::ordered_json ps = nlohmann::ordered_json::object();
  for (const auto& c : counts) {
    cs[c.name] = to_decimal(c.value);
    ps[c.name] = is_even(c.value) ? "even" : "odd";
  }
  j["counts"] = cs;
  j["parities"] = ps;
  j["pass"] = pass;
  j["engine"] = engine_name(engine);
  return j.dump();
}

}  // namespace hamparity
