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

#include "dgscheme/group_shape.hpp"

#include <bit>
#include <stdexcept>

namespace dgscheme {

GroupShape::GroupShape(int z4_count, int z2_count, std::vector<Z4> pairing)
    : r_(z4_count), s_(z2_count), nl_(z4_count + z2_count), w_(std::move(pairing)) {
  const int n = r_ + s_;
  if (r_ < 0 || s_ < 0 || 2 * r_ + s_ > 30) throw std::invalid_argument("group shape out of range");
  if (w_.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("pairing matrix has wrong size");
  lmask_ = (1u << nl_) - 1;
  z4mask_ = (1u << r_) - 1;
  order_ = 1u << (2 * r_ + s_);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Z4 v = w_[j * n + k] & 3;
      w_[j * n + k] = v;
      if (v != (w_[k * n + j] & 3)) throw std::invalid_argument("pairing matrix is not symmetric");
      if ((j >= r_ || k >= r_) && (v & 1)) throw std::invalid_argument("pairing is not well defined on a Z2 coordinate");
    }
  }

  // y(g) is additive, so build it bit by bit: every element is the group sum
  // of the elements named by its set bits.
  std::vector<std::uint32_t> y_of_bit(2 * r_ + s_);
  for (int b = 0; b < 2 * r_ + s_; ++b) {
    std::vector<Z4> g(n, 0);
    if (b < r_) g[b] = 1;
    else if (b < nl_) g[b] = 1;
    else g[b - nl_] = 2;
    std::vector<Z4> y(n, 0);
    for (int k = 0; k < n; ++k) {
      int acc = 0;
      for (int j = 0; j < n; ++j) acc += g[j] * w_[j * n + k];
      acc &= 3;
      y[k] = static_cast<Z4>(k < r_ ? acc : acc >> 1);
    }
    y_of_bit[b] = index(y);
  }
  y_of_g_.assign(order_, 0);
  g_of_y_.assign(order_, order_);
  for (std::uint32_t g = 1; g < order_; ++g) {
    const int b = std::countr_zero(g);
    y_of_g_[g] = add(y_of_g_[g & (g - 1)], y_of_bit[b]);
  }
  for (std::uint32_t g = 0; g < order_; ++g) {
    const std::uint32_t y = y_of_g_[g];
    if (g_of_y_[y] != order_) throw std::invalid_argument("pairing is degenerate");
    g_of_y_[y] = g;
  }
}

void GroupShape::digits_into(std::uint32_t idx, std::span<Z4> out) const {
  for (int k = 0; k < r_; ++k) out[k] = static_cast<Z4>(((idx >> k) & 1) | (((idx >> (nl_ + k)) & 1) << 1));
  for (int k = r_; k < nl_; ++k) out[k] = static_cast<Z4>((idx >> k) & 1);
}

std::vector<Z4> GroupShape::digits(std::uint32_t idx) const {
  std::vector<Z4> d(r_ + s_);
  digits_into(idx, d);
  return d;
}

std::uint32_t GroupShape::index(std::span<const Z4> d) const {
  std::uint32_t idx = 0;
  for (int k = 0; k < r_; ++k) idx |= (static_cast<std::uint32_t>(d[k] & 1) << k) | (static_cast<std::uint32_t>((d[k] >> 1) & 1) << (nl_ + k));
  for (int k = r_; k < nl_; ++k) idx |= static_cast<std::uint32_t>(d[k] & 1) << k;
  return idx;
}

Z4 GroupShape::pair(std::uint32_t g, std::uint32_t h) const {
  const int n = r_ + s_;
  Z4 gd[32], hd[32];
  digits_into(g, std::span<Z4>(gd, n));
  digits_into(h, std::span<Z4>(hd, n));
  int acc = 0;
  for (int j = 0; j < n; ++j) {
    if (!gd[j]) continue;
    for (int k = 0; k < n; ++k) acc += gd[j] * w_[j * n + k] * hd[k];
  }
  return static_cast<Z4>(acc & 3);
}

Z4 GroupShape::pair_dual(std::uint32_t y, std::uint32_t h) const {
  const std::uint32_t yl = y & z4mask_, hl = h & z4mask_;
  const std::uint32_t yz2 = y & lmask_ & ~z4mask_, hz2 = h & lmask_ & ~z4mask_;
  const std::uint32_t yh = y >> nl_, hh = h >> nl_;
  const int v = std::popcount(yl & hl) + 2 * (std::popcount(yl & hh) + std::popcount(yh & hl) + std::popcount(yz2 & hz2));
  return static_cast<Z4>(v & 3);
}

std::pair<int, int> GroupShape::bit_positions(int k) const {
  if (k < r_) return {k, nl_ + k};
  return {k, -1};
}

}  // namespace dgscheme
