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

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dgscheme {

using Z4 = std::uint8_t;

/// Discrete-log / Teichmuller exponent. kZeroLog stands for the element 0.
using LogIndex = std::int32_t;
inline constexpr LogIndex kZeroLog = -1;

inline constexpr int kMinDegree = 3;
inline constexpr int kMaxDegree = 15;

/// Element of F_{2^m} in the polynomial basis 1, alpha, ..., alpha^{m-1}.
struct FieldElement {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Element of GR(4,m) as two bit planes of its Z4 coefficient vector in the
/// basis 1, beta, ..., beta^{m-1}: coefficient j equals lo_j + 2 hi_j.
struct RingElement {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  constexpr bool is_zero() const { return (lo | hi) == 0; }
  /// Membership in the maximal ideal 2R.
  constexpr bool is_even() const { return lo == 0; }
  friend constexpr bool operator==(RingElement, RingElement) = default;
  friend constexpr auto operator<=>(RingElement, RingElement) = default;
};

/// The basic irreducible polynomial g over Z4 and its binary reduction h.
struct RingModulus {
  int degree = 0;
  std::vector<Z4> lifted;            // g_0..g_m, g_m = 1
  std::vector<std::uint8_t> binary;  // h_0..h_m
  std::uint32_t binary_mask = 0;     // bit j = h_j
};

/// Smallest primitive polynomial of degree m over F_2, as a bit mask with
/// bit j holding the coefficient of x^j.
std::uint32_t smallest_primitive_binary(int m);

/// Graeffe lift g(x^2) = -h(x) h(-x) mod 4 of the smallest primitive h.
/// Throws std::invalid_argument unless m is odd and 3 <= m <= 15.
RingModulus lift_basic_irreducible(int m);

/// F_{2^m} with exp/log tables. Immutable after construction.
class BinaryField {
 public:
  BinaryField(int m, std::uint32_t modulus_mask);

  int degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  std::uint32_t modulus_mask() const { return modulus_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return {1}; }
  FieldElement alpha() const { return {2}; }

  static constexpr FieldElement add(FieldElement x, FieldElement y) { return {x.bits ^ y.bits}; }
  FieldElement mul(FieldElement x, FieldElement y) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::int64_t e) const;
  FieldElement square(FieldElement x) const { return mul(x, x); }
  FieldElement cube(FieldElement x) const { return mul(x, square(x)); }
  /// x^{2^{m-1}}, the inverse of squaring.
  FieldElement sqrt(FieldElement x) const;
  /// Inverse of cubing; a bijection because gcd(3, 2^m - 1) = 1 for odd m.
  FieldElement cube_root(FieldElement x) const;
  int trace(FieldElement x) const;

  LogIndex log(FieldElement x) const { return log_[x.bits]; }
  FieldElement exp(LogIndex k) const;

  /// Bit j of the result is tr(alpha^j y), so tr(x y) = parity(x & mask).
  std::uint32_t trace_mask(FieldElement y) const;

  /// Inverse exponent of 3 modulo 2^m - 1.
  std::int64_t inverse_of_three() const { return inv3_; }

 private:
  int m_;
  std::uint32_t q_;
  std::uint32_t modulus_;
  std::uint32_t trace_basis_ = 0;
  std::int64_t inv3_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<LogIndex> log_;
};

/// GR(4,m) = Z4[x]/(g) together with its Teichmuller set and residue field.
/// All tables are O(2^m); the ring itself is never tabulated.
class GaloisRing {
 public:
  explicit GaloisRing(int m);

  int degree() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t size() const { return q_ * q_; }
  const RingModulus& modulus() const { return modulus_; }
  const BinaryField& field() const { return field_; }

  RingElement zero() const { return {}; }
  RingElement one() const { return {1, 0}; }
  RingElement beta() const { return {2, 0}; }
  RingElement from_int(int n) const;

  static constexpr RingElement add(RingElement x, RingElement y) {
    return {x.lo ^ y.lo, x.hi ^ y.hi ^ (x.lo & y.lo)};
  }
  static constexpr RingElement neg(RingElement x) { return {x.lo, x.hi ^ x.lo}; }
  static constexpr RingElement sub(RingElement x, RingElement y) { return add(x, neg(y)); }
  static constexpr RingElement twice(RingElement x) { return {0, x.lo}; }
  RingElement mul(RingElement x, RingElement y) const;
  RingElement pow(RingElement x, std::uint64_t e) const;

  /// Dense code lo | hi << m in [0, 4^m).
  std::uint32_t code(RingElement x) const { return x.lo | (x.hi << m_); }
  RingElement from_code(std::uint32_t c) const { return {c & (q_ - 1), c >> m_}; }

  std::array<Z4, kMaxDegree> coefficients(RingElement x) const;
  RingElement from_coefficients(std::span<const Z4> c) const;

  /// mu: reduction modulo 2.
  static constexpr FieldElement reduce(RingElement x) { return {x.lo}; }

  /// Teichmuller set in table order 0, 1, beta, ..., beta^{2^m-2}.
  const std::vector<RingElement>& teichmuller() const { return teich_; }
  /// beta^k, or 0 for kZeroLog.
  RingElement teich(LogIndex k) const;
  /// Unique element of the Teichmuller set reducing to x.
  RingElement teich_lift(FieldElement x) const { return teich_by_bits_[x.bits]; }
  bool is_teichmuller(RingElement x) const { return teich_lift(reduce(x)) == x; }
  /// Exponent k with x = beta^k; x must lie in the Teichmuller set.
  LogIndex teich_log(RingElement x) const;

  /// (A, B) in T x T with x = A + 2B.
  std::pair<RingElement, RingElement> two_adic(RingElement x) const;
  /// sigma(A + 2B) = A^2 + 2B^2.
  RingElement frobenius(RingElement x) const;
  /// T(x) through the precomputed values T(beta^j).
  Z4 trace(RingElement x) const;
  /// T(x) as sum_{i<m} sigma^i(x), computed from scratch.
  Z4 trace_by_definition(RingElement x) const;

  /// Digits of T(beta^j w) split into bit planes, so that
  /// T(a w) = apply_trace_mask(mask, a) for every a.
  struct TraceMask {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
  };
  TraceMask trace_mask(RingElement w) const;
  static Z4 apply_trace_mask(TraceMask t, RingElement a);

  /// Gram matrix T(beta^i beta^j), row-major m x m.
  std::vector<Z4> trace_gram() const;
  /// Basis dual to 1, beta, ..., beta^{m-1} under (x, y) -> T(xy).
  /// Throws std::runtime_error if the pairing is degenerate.
  std::vector<RingElement> trace_dual_basis() const;
  /// Basis of F_q dual to 1, alpha, ... under (x, y) -> tr(xy).
  std::vector<FieldElement> field_trace_dual_basis() const;

 private:
  RingElement times_x(RingElement x) const;

  int m_;
  std::uint32_t q_;
  RingModulus modulus_;
  BinaryField field_;
  std::vector<RingElement> teich_;          // table order
  std::vector<RingElement> teich_by_bits_;  // indexed by reduction
  std::vector<Z4> trace_of_basis_;          // T(beta^j)
  TraceMask trace_one_;
};

}  // namespace dgscheme
