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

#ifndef HAMPARITY_BIGCOUNT_HPP
#define HAMPARITY_BIGCOUNT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hamparity {

/// Exact counts. n! leaves 64-bit range at n = 21, so every public count is
/// arbitrary precision.
using Count = mpz_class;

Count factorial(std::size_t n);
Count from_u128(unsigned __int128 value);
std::string to_decimal(const Count& value);
bool is_even(const Count& value);

}  // namespace hamparity

#endif  // HAMPARITY_BIGCOUNT_HPP
