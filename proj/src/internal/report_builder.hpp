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

#ifndef HAMPARITY_INTERNAL_REPORT_BUILDER_HPP
#define HAMPARITY_INTERNAL_REPORT_BUILDER_HPP

#include <functional>
#include <span>
#include <string>

#include "hamparity/count.hpp"
#include "hamparity/report.hpp"

namespace hamparity::detail {

/// Fills a ParityReport. measure() runs the fast route, the oracle, or both
/// according to the engine and remembers any disagreement.
class ReportBuilder {
 public:
  ReportBuilder(std::string theorem, const MixedGraph& g, Engine engine);

  Count measure(const std::string& name, const std::function<Count()>& fast,
                const std::function<Count()>& oracle);
  void record(const std::string& name, Count value);
  void param(std::string key, std::string value);
  void mark_disagreement() { agree_ = false; }

  ParityReport finish(bool predicate);

 private:
  ParityReport report_;
  Engine engine_;
  bool agree_ = true;
};

void require_two_vertices(const MixedGraph& g);
std::string format_pairs(std::span<const UnorderedPair> pairs);
std::string format_vertices(std::span<const VertexId> vs);

/// N_A by inclusion-exclusion, or by the segment DP when |E3bar| is above
/// the inclusion-exclusion cap. Records the route taken.
Count n_a_fast(const MixedGraph& g, std::span<const UnorderedPair> a,
               ReportBuilder& builder);

}  // namespace hamparity::detail

#endif  // HAMPARITY_INTERNAL_REPORT_BUILDER_HPP
