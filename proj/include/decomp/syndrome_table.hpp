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
#include <array>
#include <cstdint>
#include <cstring>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "decomp/budget.hpp"
#include "decomp/combinatorics.hpp"
#include "decomp/error.hpp"
#include "decomp/matrix.hpp"
#include "decomp/matrix_io.hpp"

namespace decomp {

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Content hash of a matrix, taken over its canonical text form.
inline std::uint64_t matrix_hash(const FieldMatrix& m) { return fnv1a(serialize_matrix(m)); }

/**
 * Complete syndrome -> minimum-weight coset leader map for a full-rank K x N
 * parity-check matrix H.
 *
 * Syndromes s in GF(q)^K are indexed little-endian mixed radix:
 * index(s) = s_0 + s_1 q + ... + s_{K-1} q^{K-1}.
 *
 * The table is filled by enumerating error patterns in non-decreasing weight.
 * Within one weight, supports are visited in lexicographic order and, for each
 * support, the non-zero values in lexicographic order; the first pattern that
 * reaches a syndrome becomes its leader. Ties between equal-weight candidates
 * therefore go to the lexicographically smallest (support, values) pair.
 *
 * Binary cache layout (all integers little-endian):
 *
 *   bytes 0..7    magic "DCSYNT01"
 *   u32           q
 *   u32           K
 *   u32           N
 *   u64           FNV-1a hash of serialize_matrix(H)
 *   q^K * N       leader residues in syndrome-index order, one byte each when
 *                 q <= 256, otherwise two bytes each
 */
class SyndromeTable {
 public:
  static SyndromeTable build(const FieldMatrix& h, const Budget& budget = {}) {
    SyndromeTable t(h, budget);
    t.fill();
    return t;
  }

  const FieldMatrix& parity_check() const noexcept { return h_; }
  std::uint32_t q() const noexcept { return h_.q(); }
  std::size_t redundancy() const noexcept { return h_.rows(); }
  std::size_t length() const noexcept { return h_.cols(); }
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t h_hash() const noexcept { return hash_; }

  std::uint64_t syndrome_index(std::span<const Residue> s) const {
    if (s.size() != redundancy()) {
      throw ValidationError("syndrome length " + std::to_string(s.size()) + " does not match K = " +
                            std::to_string(redundancy()));
    }
    std::uint64_t idx = 0;
    for (std::size_t i = s.size(); i-- > 0;) {
      if (s[i] >= q()) throw ValidationError("syndrome entry out of range");
      idx = idx * q() + s[i];
    }
    return idx;
  }

  std::vector<Residue> syndrome_of_index(std::uint64_t idx) const {
    if (idx >= size_) throw ValidationError("syndrome index out of range");
    std::vector<Residue> s(redundancy());
    for (auto& d : s) {
      d = static_cast<Residue>(idx % q());
      idx /= q();
    }
    return s;
  }

  /// H e for a length-N vector e.
  std::vector<Residue> syndrome(std::span<const Residue> e) const {
    if (e.size() != length()) throw ValidationError("error vector length does not match N");
    std::vector<Residue> s(redundancy(), 0);
    for (std::size_t i = 0; i < redundancy(); ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < length(); ++j) acc += std::uint64_t{h_(i, j)} * e[j];
      s[i] = static_cast<Residue>(acc % q());
    }
    return s;
  }

  std::vector<Residue> leader(std::uint64_t idx) const {
    if (idx >= size_) throw ValidationError("syndrome index out of range");
    const auto* p = leaders_.data() + idx * length();
    return std::vector<Residue>(p, p + length());
  }

  std::size_t leader_weight(std::uint64_t idx) const {
    if (idx >= size_) throw ValidationError("syndrome index out of range");
    return weights_[idx];
  }

  /// Coset leader for syndrome s (length K); H * result == s.
  std::vector<Residue> decode(std::span<const Residue> s) const { return leader(syndrome_index(s)); }

  FieldMatrix decode(const FieldMatrix& s) const {
    require_same_field(h_, s);
    if (!s.is_vector()) throw ValidationError("decode expects a syndrome vector");
    const auto e = decode(s.entries());
    return FieldMatrix::column_vector(h_.field(), e);
  }

  /// Largest leader weight, i.e. the covering radius of the code.
  std::size_t covering_radius() const noexcept { return rho_; }

  std::map<std::size_t, std::uint64_t> weight_histogram() const {
    std::map<std::size_t, std::uint64_t> h;
    for (auto w : weights_) ++h[w];
    return h;
  }

  void save(std::ostream& out) const {
    out.write(kMagic, 8);
    put_u32(out, q());
    put_u32(out, static_cast<std::uint32_t>(redundancy()));
    put_u32(out, static_cast<std::uint32_t>(length()));
    put_u64(out, hash_);
    const bool wide = q() > 256;
    for (auto v : leaders_) {
      out.put(static_cast<char>(v & 0xff));
      if (wide) out.put(static_cast<char>(v >> 8));
    }
    if (!out) throw ValidationError("failed writing syndrome table cache");
  }

  /// Loads a cache written by save(); rejects files built for a different H.
  static SyndromeTable load(std::istream& in, const FieldMatrix& h, const Budget& budget = {}) {
    SyndromeTable t(h, budget);
    std::array<char, 8> magic{};
    in.read(magic.data(), 8);
    if (!in || std::memcmp(magic.data(), kMagic, 8) != 0) throw ValidationError("syndrome cache: bad magic");
    const auto cq = get_u32(in);
    const auto ck = get_u32(in);
    const auto cn = get_u32(in);
    const auto chash = get_u64(in);
    if (cq != h.q() || ck != h.rows() || cn != h.cols()) {
      throw ValidationError("syndrome cache: stale (field or dimensions differ)");
    }
    if (chash != t.hash_) throw ValidationError("syndrome cache: stale (parity-check hash differs)");
    const bool wide = cq > 256;
    for (auto& v : t.leaders_) {
      int lo = in.get();
      int hi = wide ? in.get() : 0;
      if (!in) throw ValidationError("syndrome cache: truncated");
      v = static_cast<std::uint16_t>(lo | (hi << 8));
      if (v >= cq) throw ValidationError("syndrome cache: residue out of range");
    }
    if (in.peek() != std::char_traits<char>::eof()) throw ValidationError("syndrome cache: trailing bytes");
    // Every leader must land on its own syndrome.
    std::vector<Residue> e(t.length());
    for (std::uint64_t idx = 0; idx < t.size_; ++idx) {
      const auto* p = t.leaders_.data() + idx * t.length();
      std::copy(p, p + t.length(), e.begin());
      if (t.syndrome_index(t.syndrome(e)) != idx) throw ValidationError("syndrome cache: corrupt leader");
      t.weights_[idx] = static_cast<std::uint32_t>(weight(e));
      t.rho_ = std::max<std::size_t>(t.rho_, t.weights_[idx]);
    }
    return t;
  }

  friend bool operator==(const SyndromeTable& a, const SyndromeTable& b) {
    return a.h_ == b.h_ && a.leaders_ == b.leaders_;
  }

 private:
  static constexpr char kMagic[9] = "DCSYNT01";
  static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  SyndromeTable(const FieldMatrix& h, const Budget& budget) : h_(h) {
    if (h.rows() == 0) throw ValidationError("parity-check matrix has no rows");
    if (rank(h) != h.rows()) throw ValidationError("parity-check not full rank");
    budget.require_table(h.q(), h.rows());
    size_ = checked_pow(h.q(), h.rows());
    hash_ = matrix_hash(h);
    leaders_.assign(size_ * h.cols(), 0);
    weights_.assign(size_, kUnset);
  }

  void fill() {
    const std::size_t k = redundancy();
    const std::size_t n = length();
    const std::uint32_t mod = q();

    // Syndrome-index contribution of each digit position, for fast indexing.
    std::vector<std::uint64_t> radix(k, 1);
    for (std::size_t i = 1; i < k; ++i) radix[i] = radix[i - 1] * mod;

    weights_[0] = 0;
    std::uint64_t filled = 1;
    std::vector<std::uint64_t> acc(k);

    for (std::size_t w = 1; w <= n && filled < size_; ++w) {
      std::vector<std::size_t> pos(w);
      for (std::size_t j = 0; j < w; ++j) pos[j] = j;
      std::vector<Residue> vals(w);
      for (bool more_supports = true; more_supports && filled < size_;) {
        std::fill(vals.begin(), vals.end(), 1);
        for (bool more_vals = true; more_vals && filled < size_;) {
          std::fill(acc.begin(), acc.end(), 0);
          for (std::size_t j = 0; j < w; ++j)
            for (std::size_t i = 0; i < k; ++i) acc[i] += std::uint64_t{vals[j]} * h_(i, pos[j]);
          std::uint64_t idx = 0;
          for (std::size_t i = 0; i < k; ++i) idx += (acc[i] % mod) * radix[i];
          if (weights_[idx] == kUnset) {
            auto* dst = leaders_.data() + idx * n;
            for (std::size_t j = 0; j < w; ++j) dst[pos[j]] = static_cast<std::uint16_t>(vals[j]);
            weights_[idx] = static_cast<std::uint32_t>(w);
            rho_ = w;
            ++filled;
          }
          more_vals = next_values(vals, mod);
        }
        more_supports = next_combination(pos, n);
      }
    }
  }

  // Lexicographic successor in {1..q-1}^w, last position fastest.
  static bool next_values(std::vector<Residue>& vals, std::uint32_t q) {
    for (std::size_t j = vals.size(); j-- > 0;) {
      if (vals[j] + 1 < q) {
        ++vals[j];
        return true;
      }
      vals[j] = 1;
    }
    return false;
  }

  // Lexicographic successor among w-subsets of [0, n).
  static bool next_combination(std::vector<std::size_t>& pos, std::size_t n) {
    const std::size_t w = pos.size();
    for (std::size_t j = w; j-- > 0;) {
      if (pos[j] < n - w + j) {
        ++pos[j];
        for (std::size_t t = j + 1; t < w; ++t) pos[t] = pos[t - 1] + 1;
        return true;
      }
    }
    return false;
  }

  static void put_u32(std::ostream& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  static void put_u64(std::ostream& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  static std::uint64_t get_bytes(std::istream& in, int count) {
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) {
      const int c = in.get();
      if (!in) throw ValidationError("syndrome cache: truncated header");
      v |= static_cast<std::uint64_t>(c & 0xff) << (8 * i);
    }
    return v;
  }
  static std::uint32_t get_u32(std::istream& in) { return static_cast<std::uint32_t>(get_bytes(in, 4)); }
  static std::uint64_t get_u64(std::istream& in) { return get_bytes(in, 8); }

  FieldMatrix h_;
  std::uint64_t size_ = 0;
  std::uint64_t hash_ = 0;
  std::vector<std::uint16_t> leaders_;
  std::vector<std::uint32_t> weights_;
  std::size_t rho_ = 0;
};

}  // namespace decomp
