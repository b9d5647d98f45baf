/*
 * Copyright 2026 The dgscheme Authors
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
#include <span>
#include <vector>

#include "dgscheme/galois_ring.hpp"

namespace dgscheme {

/// Finite abelian group Z4^r x Z2^s with a nondegenerate symmetric pairing
/// <g, h> = sum_jk g_j W_jk h_k (mod 4), so that chi_g(h) = i^<g,h>.
///
/// Element index layout: bits [0, r) hold the low bits of the Z4 digits,
/// bits [r, r+s) the Z2 digits, bits [r+s, 2r+s) the high bits of the Z4
/// digits. Addition is then two XORs and an AND.
class GroupShape {
 public:
  /// `pairing` is row-major (r+s) x (r+s). Entries touching a Z2 coordinate
  /// must be even. Throws std::invalid_argument if the pairing is not
  /// symmetric, not well defined, or degenerate.
  GroupShape(int z4_count, int z2_count, std::vector<Z4> pairing);

  int z4_count() const { return r_; }
  int z2_count() const { return s_; }
  int coordinate_count() const { return r_ + s_; }
  std::uint32_t order() const { return order_; }
  int modulus(int k) const { return k < r_ ? 4 : 2; }
  const std::vector<Z4>& pairing_matrix() const { return w_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t la = a & lmask_, lb = b & lmask_;
    const std::uint32_t h = (a >> nl_) ^ (b >> nl_) ^ (la & lb & z4mask_);
    return (la ^ lb) | (h << nl_);
  }
  std::uint32_t neg(std::uint32_t a) const {
    const std::uint32_t l = a & lmask_;
    return l | (((a >> nl_) ^ (l & z4mask_)) << nl_);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::vector<Z4> digits(std::uint32_t index) const;
  void digits_into(std::uint32_t index, std::span<Z4> out) const;
  std::uint32_t index(std::span<const Z4> digits) const;

  /// <g, h> straight from the pairing matrix.
  Z4 pair(std::uint32_t g, std::uint32_t h) const;

  /// Index of the character coordinate vector y(g) = gW (Z2 digits halved):
  /// chi_g(h) = i^{sum_k y_k h_k} with Z2 terms weighted by 2.
  std::uint32_t dual_coordinates(std::uint32_t g) const { return y_of_g_[g]; }
  /// Inverse of dual_coordinates.
  std::uint32_t from_dual_coordinates(std::uint32_t y) const { return g_of_y_[y]; }
  /// Exponent sum_k y_k h_k (mod 4) for a dual-coordinate index y.
  Z4 pair_dual(std::uint32_t y, std::uint32_t h) const;

  /// Bit positions (low, high) of Z4 coordinate k, or (bit, -1) for Z2.
  std::pair<int, int> bit_positions(int k) const;

  friend bool operator==(const GroupShape& a, const GroupShape& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.w_ == b.w_;
  }

 private:
  int r_;
  int s_;
  int nl_;
  std::uint32_t lmask_;
  std::uint32_t z4mask_;
  std::uint32_t order_;
  std::vector<Z4> w_;
  std::vector<std::uint32_t> y_of_g_;
  std::vector<std::uint32_t> g_of_y_;
};

}  // namespace dgscheme
