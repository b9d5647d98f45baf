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
#include <vector>

#include "dgscheme/codes.hpp"
#include "dgscheme/galois_ring.hpp"
#include "dgscheme/gaussian.hpp"
#include "dgscheme/group_shape.hpp"
#include "dgscheme/scheme.hpp"

namespace dgscheme {

/// G = Z4 x R x F_q as a group shape with pairing
/// <(u,a,b), (v,c,d)> = uv + T(ac) + 2 tr(bd), plus tables of xi and S.
///
/// Coordinates: u, then the m ring coefficients, then the m field bits, so
/// the index of (u, a, b) is
///   (u & 1) | a.lo << 1 | b << (m+1) | (u >> 1) << (2m+1) | a.hi << (2m+2).
class DgGroup {
 public:
  explicit DgGroup(int m, Exec exec = Exec::parallel);

  int m() const { return ring_.degree(); }
  std::uint32_t q() const { return ring_.q(); }
  /// s = sqrt(2q).
  std::int64_t s() const { return std::int64_t{1} << ((m() + 1) / 2); }
  std::uint32_t order() const { return shape_.order(); }
  const GaloisRing& ring() const { return ring_; }
  const GroupShape& shape() const { return shape_; }
  /// The subgroup b = 0 (the Kerdock code) as its own shape Z4^{m+1}.
  const GroupShape& kerdock_shape() const { return kerdock_shape_; }

  std::uint32_t index(const GroupElement& g) const;
  GroupElement element(std::uint32_t idx) const;
  /// Index in kerdock_shape() of (u, a, 0).
  std::uint32_t kerdock_index(Z4 u, RingElement a) const {
    return (u & 1u) | (a.lo << 1) | (static_cast<std::uint32_t>(u >> 1) << (m() + 1)) | (a.hi << (m() + 2));
  }
  /// Element of G embedded from kerdock_shape() index.
  std::uint32_t from_kerdock_index(std::uint32_t k) const;

  Gauss64 xi(RingElement a, FieldElement b) const { return xi_[static_cast<std::size_t>(ring_.code(a)) * q() + b.bits]; }
  /// S(g) = 2 Re(i^u xi(a, b)).
  std::int32_t big_s(std::uint32_t idx) const { return s_[idx]; }
  const std::vector<std::int32_t>& s_table() const { return s_; }

 private:
  GaloisRing ring_;
  GroupShape shape_;
  GroupShape kerdock_shape_;
  std::vector<Gauss64> xi_;
  std::vector<std::int32_t> s_;
};

/// Pairing matrix block(1, T(beta^{i+j}), 2 tr(alpha^{i+j})).
std::vector<Z4> dg_pairing(const GaloisRing& ring, bool with_field);

}  // namespace dgscheme
