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

#ifndef HAMPARITY_CONFIG_HPP
#define HAMPARITY_CONFIG_HPP

#include <cstddef>

namespace hamparity {

// Process-wide size limits. Each getter is safe to call from any thread.
// The oracle cap is read from HAMPARITY_ORACLE_CAP on first use.

inline constexpr std::size_t kDefaultOracleCap = 10;
inline constexpr std::size_t kDefaultSubsetSumCap = 22;
inline constexpr std::size_t kDefaultDpCap = 24;
inline constexpr std::size_t kDefaultPathSystemCap = 10;

/// Largest n for which permutations are enumerated exhaustively.
std::size_t oracle_cap();
void set_oracle_cap(std::size_t cap);

/// Largest |E3bar| accepted by the inclusion-exclusion sum.
std::size_t subset_sum_cap();
void set_subset_sum_cap(std::size_t cap);

/// Largest n accepted by the subset dynamic program.
std::size_t dp_cap();
void set_dp_cap(std::size_t cap);

/// Largest |W| accepted by path-system enumeration.
std::size_t path_system_cap();
void set_path_system_cap(std::size_t cap);

}  // namespace hamparity

#endif  // HAMPARITY_CONFIG_HPP
