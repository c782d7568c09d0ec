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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "decomp/error.hpp"

namespace decomp {

// Checked unsigned arithmetic. All counting in the library (ball volumes,
// bound sums, table sizes) goes through these so overflow is an error rather
// than a wrong answer.

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetError("integer overflow in exact count");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetError("integer overflow in exact count");
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// q^exp, or limit + 1 if the power exceeds limit. Used for budget checks.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step; divide by the gcd first to
    // keep the intermediate small.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    r = checked_mul(r / g, num / (i / g));
  }
  return r;
}

/// V_q(n, r): number of vectors in GF(q)^n of Hamming weight at most r.
inline std::uint64_t ball_volume(std::uint64_t q, std::uint64_t n, std::uint64_t r) {
  if (r > n) {
    throw ValidationError("ball radius " + std::to_string(r) + " exceeds length " + std::to_string(n));
  }
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= r; ++i) {
    total = checked_add(total, checked_mul(binomial(n, i), checked_pow(q - 1, i)));
  }
  return total;
}

/// Non-negative rational kept in lowest terms.
class Rational {
 public:
  Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    const std::uint64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  bool is_one() const noexcept { return num_ == den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num_) * b.den_ < static_cast<unsigned __int128>(b.num_) * a.den_;
  }

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

}  // namespace decomp
