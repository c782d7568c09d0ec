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

#include <cstddef>
#include <vector>

#include "decomp/codes.hpp"
#include "decomp/matrix.hpp"

// Worked example: q = 3, N = 11 servers, K = 5 users, L = 12 subfunctions,
// D the ternary Golay parity check. Sets are transcribed 1-based as published
// and converted to 0-based by the accessors.

namespace decomp::example {

inline FieldMatrix demand() {
  return FieldMatrix::from_rows(FieldSpec(3), {
                                                  {2, 1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 0},
                                                  {1, 0, 0, 2, 2, 2, 0, 1, 1, 1, 0, 1},
                                                  {1, 2, 1, 0, 1, 0, 2, 1, 2, 0, 1, 1},
                                                  {0, 2, 0, 2, 0, 1, 2, 1, 0, 1, 2, 1},
                                                  {0, 0, 0, 1, 1, 2, 2, 0, 1, 1, 1, 2},
                                              });
}

inline FieldMatrix encoding() {
  return FieldMatrix::from_rows(FieldSpec(3), {
                                                  {2, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
                                                  {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0},
                                                  {0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0},
                                                  {1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 2},
                                                  {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                                  {0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                                  {0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0},
                                                  {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2},
                                                  {0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0},
                                              });
}

inline FieldMatrix decoding() { return golay_ternary_parity_check(); }

inline constexpr std::size_t kGamma = 21;
inline constexpr std::size_t kLambda = 3;

namespace detail {
inline std::vector<std::vector<std::size_t>> to_zero_based(std::vector<std::vector<std::size_t>> sets) {
  for (auto& s : sets)
    for (auto& i : s) --i;
  return sets;
}
}  // namespace detail

/// S_1..S_11.
inline std::vector<std::vector<std::size_t>> jobs() {
  return detail::to_zero_based(
      {{1, 8, 10}, {2, 6}, {5, 9}, {4}, {7, 11}, {1, 6, 12}, {3}, {2}, {3, 10}, {7, 12}, {5, 8}});
}

/// T_1..T_11.
inline std::vector<std::vector<std::size_t>> audiences() {
  return detail::to_zero_based({{1, 2, 3, 4, 5},
                                {1, 2, 3, 4},
                                {1, 2, 3, 5},
                                {1, 2, 4, 5},
                                {1, 3, 4, 5},
                                {2, 3, 4, 5},
                                {1},
                                {2},
                                {3},
                                {4},
                                {5}});
}

}  // namespace decomp::example
