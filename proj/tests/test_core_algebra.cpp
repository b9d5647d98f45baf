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

#include "doctest.h"

#include <set>

#include "dgscheme/galois_ring.hpp"
#include "dgscheme/polynomial.hpp"

using namespace dgscheme;

namespace {

// Z4-coefficient multiplication of polynomials, then reduction modulo g,
// written without the bit-plane tricks of the library.
std::vector<int> naive_mul(const std::vector<int>& x, const std::vector<int>& y, const std::vector<Z4>& g) {
  const int m = static_cast<int>(g.size()) - 1;
  std::vector<int> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % 4;
  for (int d = 2 * m - 2; d >= m; --d) {
    const int c = prod[d];
    prod[d] = 0;
    for (int j = 0; j < m; ++j) prod[d - m + j] = ((prod[d - m + j] - c * g[j]) % 4 + 4) % 4;
  }
  prod.resize(m);
  return prod;
}

std::vector<int> coeffs(const GaloisRing& r, RingElement x) {
  auto c = r.coefficients(x);
  return std::vector<int>(c.begin(), c.begin() + r.degree());
}

}  // namespace

TEST_CASE("lift of the smallest primitive cubic") {
  const RingModulus mod = lift_basic_irreducible(3);
  CHECK(mod.lifted == std::vector<Z4>{3, 1, 2, 1});  // x^3 + 2x^2 + x + 3
  CHECK(mod.binary == std::vector<std::uint8_t>{1, 1, 0, 1});
  CHECK(mod.binary_mask == 0b1011u);
  CHECK_THROWS_AS(lift_basic_irreducible(4), std::invalid_argument);
  CHECK_THROWS_AS(lift_basic_irreducible(1), std::invalid_argument);
  CHECK_THROWS_AS(lift_basic_irreducible(17), std::invalid_argument);
}

TEST_CASE("graeffe relation g(x^2) = -h(x) h(-x) mod 4") {
  for (int m : {3, 5, 7, 9}) {
    const RingModulus mod = lift_basic_irreducible(m);
    std::vector<int> h(mod.binary.begin(), mod.binary.end()), hm(m + 1), prod(2 * m + 1, 0);
    for (int j = 0; j <= m; ++j) hm[j] = (j % 2 ? -h[j] : h[j]);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) prod[i + j] += h[i] * hm[j];
    for (int k = 0; k <= 2 * m; ++k) {
      const int want = ((-prod[k]) % 4 + 4) % 4;
      const int got = k % 2 ? 0 : mod.lifted[k / 2];
      CHECK(want == got);
    }
  }
}

TEST_CASE("order of beta") {
  for (int m : {3, 5, 7}) {
    GaloisRing r(m);
    const std::uint64_t n = (1u << m) - 1;
    CHECK(r.pow(r.beta(), n) == r.one());
    for (std::uint64_t d = 1; d < n; ++d)
      if (n % d == 0) CHECK(r.pow(r.beta(), d) != r.one());
  }
  GaloisRing r5(5);
  int order = 1;
  RingElement x = r5.beta();
  while (x != r5.one()) {
    x = r5.mul(x, r5.beta());
    ++order;
  }
  CHECK(order == 31);
}

TEST_CASE("ring arithmetic agrees with schoolbook polynomials") {
  GaloisRing r(3);
  const auto& g = r.modulus().lifted;
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    const RingElement x = r.from_code(i);
    CHECK(GaloisRing::add(x, GaloisRing::neg(x)) == r.zero());
    for (std::uint32_t j = 0; j < r.size(); ++j) {
      const RingElement y = r.from_code(j);
      CHECK(coeffs(r, r.mul(x, y)) == naive_mul(coeffs(r, x), coeffs(r, y), g));
      auto sx = coeffs(r, x), sy = coeffs(r, y), sum = coeffs(r, GaloisRing::add(x, y));
      for (int k = 0; k < 3; ++k) CHECK(sum[k] == (sx[k] + sy[k]) % 4);
    }
  }
  CHECK(r.mul(r.from_int(2), r.from_int(2)) == r.zero());
  CHECK(r.mul(r.beta(), r.teich(6)) == r.one());
  GaloisRing r5(5);
  CHECK(r5.mul(r5.beta(), r5.teich(30)) == r5.one());
}

TEST_CASE("frobenius") {
  GaloisRing r(3);
  CHECK(r.frobenius(r.zero()) == r.zero());
  CHECK(r.frobenius(r.beta()) == r.mul(r.beta(), r.beta()));
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    const RingElement z = r.from_code(i);
    RingElement w = z;
    for (int k = 0; k < 3; ++k) w = r.frobenius(w);
    CHECK(w == z);
    for (std::uint32_t j = 0; j < r.size(); j += 3) {
      const RingElement y = r.from_code(j);
      CHECK(r.frobenius(r.mul(z, y)) == r.mul(r.frobenius(z), r.frobenius(y)));
      CHECK(r.frobenius(GaloisRing::add(z, y)) == GaloisRing::add(r.frobenius(z), r.frobenius(y)));
    }
  }
}

TEST_CASE("ring trace") {
  for (int m : {3, 5}) {
    GaloisRing r(m);
    CHECK(r.trace(r.zero()) == 0);
    CHECK(r.trace(r.one()) == m % 4);
    for (std::uint32_t i = 0; i < r.size(); ++i) {
      const RingElement z = r.from_code(i);
      const Z4 t = r.trace(z);
      CHECK(t == r.trace_by_definition(z));
      CHECK(t == r.trace(r.frobenius(z)));
      CHECK((t & 1) == r.field().trace(GaloisRing::reduce(z)));
    }
  }
  GaloisRing r(3);
  for (std::uint32_t i = 0; i < r.size(); ++i)
    for (std::uint32_t j = 0; j < r.size(); ++j) {
      const RingElement x = r.from_code(i), y = r.from_code(j);
      CHECK(r.trace(GaloisRing::add(x, y)) == ((r.trace(x) + r.trace(y)) & 3));
      const auto mask = r.trace_mask(y);
      CHECK(GaloisRing::apply_trace_mask(mask, x) == r.trace(r.mul(x, y)));
    }
}

TEST_CASE("trace pairing is nondegenerate") {
  GaloisRing r(3);
  for (std::uint32_t i = 1; i < r.size(); ++i) {
    bool hit = false;
    for (std::uint32_t j = 0; j < r.size() && !hit; ++j) hit = r.trace(r.mul(r.from_code(i), r.from_code(j))) != 0;
    CHECK(hit);
  }
  for (int m : {3, 5, 7}) {
    GaloisRing rr(m);
    const auto dual = rr.trace_dual_basis();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) CHECK(rr.trace(rr.mul(rr.teich(i), dual[j])) == (i == j ? 1 : 0));
    const auto fd = rr.field_trace_dual_basis();
    const auto& f = rr.field();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) CHECK(f.trace(f.mul(f.exp(i), fd[j])) == (i == j ? 1 : 0));
  }
}

TEST_CASE("two-adic decomposition") {
  GaloisRing r(3);
  CHECK(r.two_adic(r.from_int(2)) == std::pair{r.zero(), r.one()});
  CHECK(r.two_adic(r.from_int(3)) == std::pair{r.one(), r.one()});
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    const RingElement z = r.from_code(i);
    const auto [a, b] = r.two_adic(z);
    CHECK(r.is_teichmuller(a));
    CHECK(r.is_teichmuller(b));
    CHECK(GaloisRing::add(a, GaloisRing::twice(b)) == z);
    CHECK(r.frobenius(z) == GaloisRing::add(r.mul(a, a), GaloisRing::twice(r.mul(b, b))));
    seen.insert({r.code(a), r.code(b)});
  }
  CHECK(seen.size() == r.size());
  for (const auto& a : r.teichmuller())
    for (const auto& b : r.teichmuller()) {
      const auto [a2, b2] = r.two_adic(GaloisRing::add(a, GaloisRing::twice(b)));
      CHECK(a2 == a);
      CHECK(b2 == b);
    }
  for (std::uint32_t x = 0; x < r.q(); ++x) {
    const RingElement t = r.teich_lift({x});
    CHECK(GaloisRing::reduce(t) == FieldElement{x});
    CHECK(r.teich_lift(GaloisRing::reduce(t)) == t);
  }
}

TEST_CASE("teichmuller table") {
  GaloisRing r(5);
  const auto& t = r.teichmuller();
  REQUIRE(t.size() == 32);
  CHECK(t[0] == r.zero());
  CHECK(t[1] == r.one());
  CHECK(t[2] == r.beta());
  std::set<std::uint32_t> bits;
  for (std::size_t k = 1; k < t.size(); ++k) {
    CHECK(r.pow(t[k], 31) == r.one());
    CHECK(r.teich_log(t[k]) == static_cast<LogIndex>(k - 1));
    bits.insert(GaloisRing::reduce(t[k]).bits);
  }
  CHECK(bits.size() == 31);
  CHECK(r.teich_log(r.zero()) == kZeroLog);
  CHECK(r.teich(kZeroLog) == r.zero());
}

TEST_CASE("field arithmetic") {
  for (int m : {3, 5}) {
    GaloisRing r(m);
    const auto& f = r.field();
    CHECK(f.trace(f.one()) == 1);
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    for (std::uint32_t i = 0; i < f.size(); ++i) {
      const FieldElement x{i};
      CHECK(f.square(f.sqrt(x)) == x);
      CHECK(f.sqrt(x) == f.pow(x, std::int64_t{1} << (m - 1)));
      CHECK(f.cube(f.cube_root(x)) == x);
      CHECK(f.cube_root(f.cube(x)) == x);
      if (i) {
        CHECK(f.mul(x, f.inv(x)) == f.one());
        CHECK(f.exp(f.log(x)) == x);
      }
      CHECK(r.reduce(r.teich_lift(x)) == x);
    }
  }
}

TEST_CASE("polynomial parser") {
  const Polynomial p = Polynomial::parse("1/24*s^6-1/8*s^4+1/12*s^2");
  CHECK(p.evaluate(4) == 140);
  CHECK(Polynomial::parse("1/2*(s^2-2)*s^2").evaluate(4) == 112);
  CHECK(Polynomial::parse("-2+2*s^2").evaluate(4) == 30);
  CHECK(Polynomial::parse("-s^2").evaluate(4) == -16);
  CHECK(Polynomial::parse("16*q^3*(3*q-1)", 'q').evaluate(8) == 188416);
  CHECK(Polynomial::parse("-1152*s^23*(s-1)^2*(s+1)^2").evaluate(2) == mpq_class(-1152) * (1 << 23) * 9);
  CHECK_THROWS_AS(Polynomial::parse("s^"), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse("1/(s)"), std::invalid_argument);
  CHECK(Polynomial::parse(p.to_string()) == p);
}
