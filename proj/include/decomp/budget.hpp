/* Copyright 2026 The decomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>

#include "decomp/combinatorics.hpp"
#include "decomp/error.hpp"

namespace decomp {

/// Limits on exhaustive enumerations.
struct Budget {
  /// Largest q^(N-K) codeword enumeration allowed.
  std::uint64_t max_codewords = std::uint64_t{1} << 26;
  /// Largest q^K syndrome table allowed.
  std::uint64_t max_table_entries = std::uint64_t{1} << 24;

  void require_codewords(std::uint64_t q, std::uint64_t exp) const {
    if (saturating_pow(q, exp, max_codewords) > max_codewords) {
      throw BudgetError("codeword enumeration " + std::to_string(q) + "^" + std::to_string(exp) +
                        " exceeds budget of " + std::to_string(max_codewords) +
                        " (raise with --budget-codewords)");
    }
  }

  void require_table(std::uint64_t q, std::uint64_t exp) const {
    if (saturating_pow(q, exp, max_table_entries) > max_table_entries) {
      throw BudgetError("syndrome table " + std::to_string(q) + "^" + std::to_string(exp) +
                        " exceeds budget of " + std::to_string(max_table_entries) +
                        " entries (raise with --budget-table-entries)");
    }
  }
};

}  // namespace decomp
