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

#include "dgscheme/galois_ring.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace dgscheme {

namespace {

void check_degree(int m) {
  if (m < kMinDegree || m > kMaxDegree || m % 2 == 0) {
    throw std::invalid_argument("degree m must be odd with 3 <= m <= 15, got " + std::to_string(m));
  }
}

// Multiplicative order of x in F_2[x]/(h), or 0 if x^k never returns to 1
// within 2^m - 1 steps.
std::uint64_t order_of_x(std::uint32_t h, int m) {
  const std::uint32_t top = 1u << m;
  const std::uint64_t bound = (1ull << m) - 1;
  std::uint32_t cur = 1;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    cur <<= 1;
    if (cur & top) cur ^= h;
    if (cur == 1) return k;
  }
  return 0;
}

}  // namespace

std::uint32_t smallest_primitive_binary(int m) {
  check_degree(m);
  const std::uint64_t want = (1ull << m) - 1;
  for (std::uint32_t h = (1u << m) | 1u; h < (2u << m); h += 2) {
    if (order_of_x(h, m) == want) return h;
  }
  throw std::logic_error("no primitive polynomial found");
}

RingModulus lift_basic_irreducible(int m) {
  const std::uint32_t h = smallest_primitive_binary(m);
  // h(x) = e(x^2) + x o(x^2); for odd m, g(y) = y o(y)^2 - e(y)^2 is monic.
  const int half = m / 2;
  std::vector<int> e(half + 1, 0), o(half + 1, 0);
  for (int j = 0; j <= m; ++j) {
    const int bit = (h >> j) & 1;
    if (j % 2 == 0) e[j / 2] = bit;
    else o[j / 2] = bit;
  }
  std::vector<int> g(m + 1, 0);
  for (int i = 0; i <= half; ++i) {
    for (int j = 0; j <= half; ++j) {
      if (i + j + 1 <= m) g[i + j + 1] += o[i] * o[j];
      g[i + j] -= e[i] * e[j];
    }
  }
  RingModulus mod;
  mod.degree = m;
  mod.binary_mask = h;
  mod.lifted.resize(m + 1);
  mod.binary.resize(m + 1);
  for (int j = 0; j <= m; ++j) {
    mod.lifted[j] = static_cast<Z4>(((g[j] % 4) + 4) % 4);
    mod.binary[j] = static_cast<std::uint8_t>((h >> j) & 1);
    if ((mod.lifted[j] & 1) != mod.binary[j]) throw std::logic_error("Graeffe lift does not reduce to h");
  }
  if (mod.lifted[m] != 1) throw std::logic_error("Graeffe lift is not monic");
  return mod;
}

// ---------------------------------------------------------------------------
// BinaryField

BinaryField::BinaryField(int m, std::uint32_t modulus_mask)
    : m_(m), q_(1u << m), modulus_(modulus_mask) {
  const std::uint32_t n = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(n), 0);
  log_.assign(q_, kZeroLog);
  std::uint32_t cur = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    if (log_[cur] != kZeroLog) throw std::invalid_argument("field modulus is not primitive");
    exp_[k] = cur;
    log_[cur] = static_cast<LogIndex>(k);
    cur <<= 1;
    if (cur & q_) cur ^= modulus_;
  }
  for (std::uint32_t k = n; k < 2 * n; ++k) exp_[k] = exp_[k - n];
  inv3_ = ((2ll << m) - 1) / 3;

  for (int j = 0; j < m_; ++j) {
    FieldElement x{1u << j};
    FieldElement acc{};
    FieldElement t = x;
    for (int i = 0; i < m_; ++i) {
      acc = add(acc, t);
      t = square(t);
    }
    if (acc.bits > 1) throw std::logic_error("trace left the prime field");
    trace_basis_ |= acc.bits << j;
  }
}

FieldElement BinaryField::mul(FieldElement x, FieldElement y) const {
  if (x.is_zero() || y.is_zero()) return {};
  return {exp_[static_cast<std::size_t>(log_[x.bits] + log_[y.bits])]};
}

FieldElement BinaryField::inv(FieldElement x) const {
  if (x.is_zero()) throw std::domain_error("inverse of zero in F_q");
  const LogIndex k = log_[x.bits];
  return {exp_[k == 0 ? 0 : (q_ - 1) - static_cast<std::uint32_t>(k)]};
}

FieldElement BinaryField::exp(LogIndex k) const {
  if (k == kZeroLog) return {};
  const std::int64_t n = q_ - 1;
  return {exp_[static_cast<std::size_t>(((k % n) + n) % n)]};
}

FieldElement BinaryField::pow(FieldElement x, std::int64_t e) const {
  if (x.is_zero()) return e == 0 ? one() : zero();
  const std::int64_t n = q_ - 1;
  const std::int64_t k = static_cast<std::int64_t>(log_[x.bits]) * (((e % n) + n) % n) % n;
  return {exp_[static_cast<std::size_t>(k)]};
}

FieldElement BinaryField::sqrt(FieldElement x) const { return pow(x, std::int64_t{1} << (m_ - 1)); }

FieldElement BinaryField::cube_root(FieldElement x) const { return pow(x, inv3_); }

int BinaryField::trace(FieldElement x) const { return std::popcount(x.bits & trace_basis_) & 1; }

std::uint32_t BinaryField::trace_mask(FieldElement y) const {
  std::uint32_t mask = 0;
  for (int j = 0; j < m_; ++j) mask |= static_cast<std::uint32_t>(trace(mul({1u << j}, y))) << j;
  return mask;
}

// ---------------------------------------------------------------------------
// GaloisRing

GaloisRing::GaloisRing(int m)
    : m_(m), q_(1u << m), modulus_(lift_basic_irreducible(m)), field_(m, modulus_.binary_mask) {
  teich_.assign(q_, RingElement{});
  teich_by_bits_.assign(q_, RingElement{});
  RingElement t = one();
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    teich_[k + 1] = t;
    teich_by_bits_[t.lo] = t;
    t = times_x(t);
  }
  if (t != one()) throw std::logic_error("beta does not have order 2^m - 1");

  trace_of_basis_.resize(m_);
  RingElement b = one();
  for (int j = 0; j < m_; ++j) {
    trace_of_basis_[j] = trace_by_definition(b);
    trace_one_.lo |= static_cast<std::uint32_t>(trace_of_basis_[j] & 1) << j;
    trace_one_.hi |= static_cast<std::uint32_t>(trace_of_basis_[j] >> 1) << j;
    b = times_x(b);
  }
}

RingElement GaloisRing::from_int(int n) const {
  const int r = ((n % 4) + 4) % 4;
  return {static_cast<std::uint32_t>(r & 1), static_cast<std::uint32_t>(r >> 1)};
}

std::array<Z4, kMaxDegree> GaloisRing::coefficients(RingElement x) const {
  std::array<Z4, kMaxDegree> c{};
  for (int j = 0; j < m_; ++j) c[j] = static_cast<Z4>(((x.lo >> j) & 1) | (((x.hi >> j) & 1) << 1));
  return c;
}

RingElement GaloisRing::from_coefficients(std::span<const Z4> c) const {
  RingElement x;
  for (int j = 0; j < m_ && j < static_cast<int>(c.size()); ++j) {
    x.lo |= static_cast<std::uint32_t>(c[j] & 1) << j;
    x.hi |= static_cast<std::uint32_t>((c[j] >> 1) & 1) << j;
  }
  return x;
}

RingElement GaloisRing::times_x(RingElement x) const {
  const std::uint32_t top = 1u << (m_ - 1);
  const int c = static_cast<int>(((x.lo & top) ? 1 : 0) | ((x.hi & top) ? 2 : 0));
  RingElement shifted{(x.lo << 1) & (q_ - 1), (x.hi << 1) & (q_ - 1)};
  if (c == 0) return shifted;
  // x^m = -(g_0 + ... + g_{m-1} x^{m-1})
  std::array<Z4, kMaxDegree> red{};
  for (int j = 0; j < m_; ++j) red[j] = static_cast<Z4>((4 - modulus_.lifted[j]) * c % 4);
  return add(shifted, from_coefficients(std::span<const Z4>(red.data(), m_)));
}

RingElement GaloisRing::mul(RingElement x, RingElement y) const {
  const auto a = coefficients(x);
  const auto b = coefficients(y);
  std::array<int, 2 * kMaxDegree> p{};
  for (int i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < m_; ++j) p[i + j] += a[i] * b[j];
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    const int c = p[k] & 3;
    p[k] = 0;
    if (c == 0) continue;
    for (int j = 0; j < m_; ++j) p[k - m_ + j] += c * (4 - modulus_.lifted[j]);
  }
  std::array<Z4, kMaxDegree> r{};
  for (int j = 0; j < m_; ++j) r[j] = static_cast<Z4>(p[j] & 3);
  return from_coefficients(std::span<const Z4>(r.data(), m_));
}

RingElement GaloisRing::pow(RingElement x, std::uint64_t e) const {
  RingElement result = one();
  while (e) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

RingElement GaloisRing::teich(LogIndex k) const {
  if (k == kZeroLog) return {};
  const std::int64_t n = q_ - 1;
  return teich_[static_cast<std::size_t>(((k % n) + n) % n) + 1];
}

LogIndex GaloisRing::teich_log(RingElement x) const {
  if (!is_teichmuller(x)) throw std::invalid_argument("element is not in the Teichmuller set");
  return field_.log(reduce(x));
}

std::pair<RingElement, RingElement> GaloisRing::two_adic(RingElement x) const {
  const RingElement a = teich_lift(reduce(x));
  const RingElement diff = sub(x, a);  // in 2R, so diff.lo == 0
  return {a, teich_lift({diff.hi})};
}

RingElement GaloisRing::frobenius(RingElement x) const {
  const auto [a, b] = two_adic(x);
  return add(mul(a, a), twice(mul(b, b)));
}

Z4 GaloisRing::trace_by_definition(RingElement x) const {
  RingElement acc{};
  RingElement t = x;
  for (int i = 0; i < m_; ++i) {
    acc = add(acc, t);
    t = frobenius(t);
  }
  if ((acc.lo | acc.hi) > 1) throw std::logic_error("trace left Z4");
  return static_cast<Z4>(acc.lo | (acc.hi << 1));
}

Z4 GaloisRing::trace(RingElement x) const { return apply_trace_mask(trace_one_, x); }

GaloisRing::TraceMask GaloisRing::trace_mask(RingElement w) const {
  TraceMask t;
  RingElement b = w;
  for (int j = 0; j < m_; ++j) {
    const Z4 v = trace(b);
    t.lo |= static_cast<std::uint32_t>(v & 1) << j;
    t.hi |= static_cast<std::uint32_t>(v >> 1) << j;
    b = times_x(b);
  }
  return t;
}

Z4 GaloisRing::apply_trace_mask(TraceMask t, RingElement a) {
  const int v = std::popcount(a.lo & t.lo) + 2 * (std::popcount(a.lo & t.hi) + std::popcount(a.hi & t.lo));
  return static_cast<Z4>(v & 3);
}

std::vector<Z4> GaloisRing::trace_gram() const {
  std::vector<Z4> g(static_cast<std::size_t>(m_) * m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) g[i * m_ + j] = trace(pow(beta(), static_cast<std::uint64_t>(i + j)));
  return g;
}

std::vector<RingElement> GaloisRing::trace_dual_basis() const {
  const int n = m_;
  std::vector<int> a(static_cast<std::size_t>(n) * 2 * n, 0);
  const auto gram = trace_gram();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * 2 * n + j] = gram[i * n + j];
    a[i * 2 * n + n + i] = 1;
  }
  // Gauss-Jordan over Z4 with odd (unit) pivots.
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r * 2 * n + col] & 1) { piv = r; break; }
    if (piv < 0) throw std::runtime_error("trace form on R is degenerate");
    for (int j = 0; j < 2 * n; ++j) std::swap(a[col * 2 * n + j], a[piv * 2 * n + j]);
    const int inv = a[col * 2 * n + col];  // units of Z4 are self-inverse
    for (int j = 0; j < 2 * n; ++j) a[col * 2 * n + j] = a[col * 2 * n + j] * inv & 3;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const int f = a[r * 2 * n + col];
      if (f == 0) continue;
      for (int j = 0; j < 2 * n; ++j) a[r * 2 * n + j] = ((a[r * 2 * n + j] - f * a[col * 2 * n + j]) % 4 + 4) % 4;
    }
  }
  std::vector<RingElement> dual(n);
  for (int k = 0; k < n; ++k) {
    std::array<Z4, kMaxDegree> c{};
    for (int l = 0; l < n; ++l) c[l] = static_cast<Z4>(a[l * 2 * n + n + k]);
    dual[k] = from_coefficients(std::span<const Z4>(c.data(), n));
  }
  return dual;
}

std::vector<FieldElement> GaloisRing::field_trace_dual_basis() const {
  const int n = m_;
  std::vector<std::uint64_t> rows(n);  // [gram | identity] packed
  for (int i = 0; i < n; ++i) {
    std::uint64_t r = 0;
    for (int j = 0; j < n; ++j)
      r |= static_cast<std::uint64_t>(field_.trace(field_.exp(i + j))) << j;
    rows[i] = r | (1ull << (n + i));
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if ((rows[r] >> col) & 1) { piv = r; break; }
    if (piv < 0) throw std::runtime_error("trace form on F_q is degenerate");
    std::swap(rows[col], rows[piv]);
    for (int r = 0; r < n; ++r)
      if (r != col && ((rows[r] >> col) & 1)) rows[r] ^= rows[col];
  }
  std::vector<FieldElement> dual(n);
  for (int k = 0; k < n; ++k) {
    std::uint32_t bits = 0;
    for (int l = 0; l < n; ++l) bits |= static_cast<std::uint32_t>((rows[l] >> (n + k)) & 1) << l;
    dual[k] = {bits};
  }
  return dual;
}

}  // namespace dgscheme
