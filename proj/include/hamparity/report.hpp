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

#ifndef HAMPARITY_REPORT_HPP
#define HAMPARITY_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamparity/bigcount.hpp"

namespace hamparity {

enum class Engine : std::uint8_t { Oracle, Dp, Both };

const char* engine_name(Engine e) noexcept;
std::optional<Engine> parse_engine(std::string_view name);

struct NamedCount {
  std::string name;
  Count value;
};

/// Outcome of one verifier run. Counts keep insertion order; a parity entry
/// is derived for every count. When both engines ran, the oracle value of a
/// quantity `x` is stored as `x_oracle` next to `x`.
struct ParityReport {
  std::string theorem;
  std::size_t n = 0;
  std::string digest;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<NamedCount> counts;
  bool pass = false;
  Engine engine = Engine::Dp;

  void add(std::string name, Count value);
  const Count& count(std::string_view name) const;
  bool has_count(std::string_view name) const;

  /// {"theorem","n","inputs":{"digest",...params},"counts":{name:"decimal"},
  ///  "parities":{name:"even"|"odd"},"pass","engine"} on a single line.
  std::string to_json() const;
};

}  // namespace hamparity

#endif  // HAMPARITY_REPORT_HPP
