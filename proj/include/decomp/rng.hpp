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
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "decomp/field.hpp"

namespace decomp {

/**
 * Portable seeded source of field elements.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. Residues are drawn by rejection sampling on the raw 64-bit
 * outputs (not std::uniform_int_distribution, whose algorithm is
 * implementation-defined), so a seed yields the same stream on every platform.
 */
class ResidueRng {
 public:
  explicit ResidueRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x <= limit) return x % bound;
    }
  }

  Residue residue(std::uint32_t q) { return static_cast<Residue>(below(q)); }

  std::vector<Residue> vector(std::uint32_t q, std::size_t len) {
    std::vector<Residue> v(len);
    for (auto& e : v) e = residue(q);
    return v;
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace decomp
