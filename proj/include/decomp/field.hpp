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

#include "decomp/error.hpp"

namespace decomp {

using Residue = std::uint32_t;

/// Largest supported field modulus.
inline constexpr std::uint32_t kMaxModulus = 1u << 16;

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// A prime field GF(q). Construction validates the modulus.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint64_t q) : q_(static_cast<std::uint32_t>(q)) {
    if (q < 2 || q > kMaxModulus) {
      throw ValidationError("field modulus " + std::to_string(q) + " outside [2, " +
                            std::to_string(kMaxModulus) + "]");
    }
    if (!is_prime(q)) {
      throw ValidationError("field modulus " + std::to_string(q) + " is not prime");
    }
  }

  std::uint32_t q() const noexcept { return q_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t q_;
};

constexpr Residue field_add(Residue a, Residue b, std::uint32_t q) noexcept {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= q ? s - q : s);
}

constexpr Residue field_sub(Residue a, Residue b, std::uint32_t q) noexcept {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + q - b);
}

constexpr Residue field_neg(Residue a, std::uint32_t q) noexcept { return a == 0 ? 0 : q - a; }

constexpr Residue field_mul(Residue a, Residue b, std::uint32_t q) noexcept {
  return static_cast<Residue>((std::uint64_t{a} * b) % q);
}

/// Multiplicative inverse by the extended Euclidean algorithm.
inline Residue field_inv(Residue a, std::uint32_t q) {
  if (a % q == 0) throw ValidationError("no inverse of zero");
  std::int64_t r0 = q, r1 = a % q;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += q;
  return static_cast<Residue>(t0);
}

}  // namespace decomp
