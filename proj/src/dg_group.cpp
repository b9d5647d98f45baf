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

#include "dgscheme/dg_group.hpp"

#include <stdexcept>

#include "dgscheme/kernels.hpp"

namespace dgscheme {

std::vector<Z4> dg_pairing(const GaloisRing& ring, bool with_field) {
  const int m = ring.degree();
  const int n = 1 + m + (with_field ? m : 0);
  std::vector<Z4> w(static_cast<std::size_t>(n) * n, 0);
  w[0] = 1;
  const auto gram = ring.trace_gram();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) w[(1 + i) * n + 1 + j] = gram[i * m + j];
  if (with_field) {
    const auto& f = ring.field();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        w[(1 + m + i) * n + 1 + m + j] = static_cast<Z4>(2 * f.trace(f.mul(f.exp(i), f.exp(j))));
  }
  return w;
}

DgGroup::DgGroup(int m, Exec exec)
    : ring_(m), shape_(1 + m, m, dg_pairing(ring_, true)), kerdock_shape_(1 + m, 0, dg_pairing(ring_, false)) {
  xi_ = exec == Exec::parallel ? kernels::xi_table_parallel(ring_) : kernels::xi_table_serial(ring_);
  s_.resize(order());
  for (std::uint32_t idx = 0; idx < order(); ++idx) {
    const GroupElement g = element(idx);
    const Gauss64 x = xi(g.a, g.b);
    std::int64_t re = 0;
    switch (g.u) {
      case 0: re = x.re; break;
      case 1: re = -x.im; break;
      case 2: re = -x.re; break;
      default: re = x.im; break;
    }
    s_[idx] = static_cast<std::int32_t>(2 * re);
  }
}

std::uint32_t DgGroup::index(const GroupElement& g) const {
  const int m = this->m();
  return (g.u & 1u) | (g.a.lo << 1) | (g.b.bits << (m + 1)) | (static_cast<std::uint32_t>(g.u >> 1) << (2 * m + 1)) |
         (g.a.hi << (2 * m + 2));
}

GroupElement DgGroup::element(std::uint32_t idx) const {
  const int m = this->m();
  const std::uint32_t mask = q() - 1;
  GroupElement g;
  g.u = static_cast<Z4>((idx & 1) | (((idx >> (2 * m + 1)) & 1) << 1));
  g.a = {(idx >> 1) & mask, (idx >> (2 * m + 2)) & mask};
  g.b = {(idx >> (m + 1)) & mask};
  return g;
}

std::uint32_t DgGroup::from_kerdock_index(std::uint32_t k) const {
  // Kerdock layout: bits [0, m+1) low planes, [m+1, 2m+2) high planes.
  const int m = this->m();
  const std::uint32_t lo = k & ((2u << m) - 1), hi = k >> (m + 1);
  return lo | (hi << (2 * m + 1));
}

}  // namespace dgscheme
