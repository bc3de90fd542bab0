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

#include "hamparity/bigcount.hpp"

namespace hamparity {

Count factorial(std::size_t n) {
  Count result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Count from_u128(unsigned __int128 value) {
  const auto high = static_cast<std::uint64_t>(value >> 64);
  const auto low = static_cast<std::uint64_t>(value);
  Count result;
  mpz_import(result.get_mpz_t(), 1, 1, sizeof(high), 0, 0, &high);
  result <<= 64;
  Count low_part;
  mpz_import(low_part.get_mpz_t(), 1, 1, sizeof(low), 0, 0, &low);
  result += low_part;
  return result;
}

std::string to_decimal(const Count& value) { return value.get_str(10); }

bool is_even(const Count& value) { return mpz_even_p(value.get_mpz_t()) != 0; }

}  // namespace hamparity
