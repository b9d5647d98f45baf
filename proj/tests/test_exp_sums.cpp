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

#include "dgscheme/codes.hpp"
#include "dgscheme/dg_group.hpp"
#include "dgscheme/exp_sums.hpp"

using namespace dgscheme;

namespace {

void require_pass(const LemmaReport& r) {
  INFO(r.to_json().dump());
  CHECK(r.cases_checked > 0);
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("xi basics and properties") {
  const GaloisRing r3(3);
  CHECK(xi(r3, r3.zero(), r3.field().zero()) == GaussianInteger(8));
  require_pass(check_xi_properties(r3));
  require_pass(check_xi_properties(GaloisRing(5)));
}

TEST_CASE("S values and Lee weights") {
  const DgGroup g(3);
  const auto& ring = g.ring();
  CHECK(big_s(ring, {0, ring.zero(), {}}) == 16);
  CHECK(big_s(ring, {2, ring.zero(), {}}) == -16);
  const std::set<long> allowed{-16, -8, -4, 0, 4, 8, 16};
  std::set<long> seen;
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    const GroupElement e = g.element(h);
    const long s = big_s(ring, e);
    seen.insert(s);
    CHECK(s == g.big_s(h));
    CHECK(s == 16 - 2 * lee_weight(codeword(ring, e)));
  }
  CHECK(seen == allowed);
}

TEST_CASE("S values sampled at m=5") {
  const DgGroup g(5);
  const std::set<long> allowed{-64, -16, -8, 0, 8, 16, 64};
  for (std::uint32_t h = 0; h < g.order(); h += 97) {
    const GroupElement e = g.element(h);
    const long s = big_s(g.ring(), e);
    CHECK(allowed.count(s) == 1);
    CHECK(s == 64 - 2 * lee_weight(codeword(g.ring(), e)));
  }
}

TEST_CASE("eta identities and root sets") {
  for (int m : {3, 5}) {
    const GaloisRing r(m);
    require_pass(check_eta_identities(r));
    require_pass(check_root_sets(r));
  }
  const GaloisRing r(3);
  const auto rs = root_sets(r.field(), r.field().zero());
  CHECK(rs.H.size() >= 2);
}

TEST_CASE("cubic classification") {
  const GaloisRing r3(3), r5(5);
  CHECK(cubic_census(r3.field()) == std::array<std::uint64_t, 3>{3, 3, 1});
  CHECK(cubic_census(r5.field()) == std::array<std::uint64_t, 3>{11, 15, 5});
  CHECK_THROWS_AS(classify_cubic(r3.field(), r3.field().zero()), std::invalid_argument);
  for (const auto* r : {&r3, &r5}) {
    require_pass(check_cubic_census(r->field()));
    require_pass(check_cubic_cases(r->field()));
  }
}

TEST_CASE("multiset lemmas") {
  for (int m : {3, 5}) {
    const GaloisRing r(m);
    for (auto p : all_multiset_patterns()) require_pass(check_multiset(r, p));
  }
  const GaloisRing r(3);
  // Nested loops agree with the histogram kernel.
  for (auto p : all_multiset_patterns()) {
    const auto h = multiset_histogram(r, p, Exec::serial);
    for (std::uint32_t c : {0u, 1u, 9u, 30u, 63u}) CHECK(multiset_count(r, p, r.from_code(c)) == h[c]);
  }
  // T + T + T outside -T.
  const RingElement two = GaloisRing::twice(r.one());
  CHECK(!r.is_teichmuller(GaloisRing::neg(two)));
  CHECK(multiset_count(r, MultisetPattern::T3, two) == 9);
  CHECK(multiset_count(r, MultisetPattern::T_minus_T, r.zero()) == 8);
  CHECK(multiset_count(r, MultisetPattern::T_minus_T, two) == 0);
}

TEST_CASE("solution counts") {
  for (int m : {3, 5}) {
    const GaloisRing r(m);
    for (auto v : all_system_variants()) require_pass(check_system(r, v));
  }
  const GaloisRing r(3);
  const auto& f = r.field();
  FieldElement m1{};
  for (std::uint32_t d = 1; d < 8; ++d)
    if (classify_cubic(f, {d}) == CubicClass::M1) m1 = {d};
  const RingElement B = r.beta();
  CHECK(system_count(r, SystemVariant::W_plus_2, r.one(), r.zero(), f.zero()) == 1);
  CHECK(system_count(r, SystemVariant::N8_2, r.zero(), B, f.zero()) == 24);
  CHECK(system_count(r, SystemVariant::N8_1, r.zero(), B, m1) == 16);
  CHECK(system_count(r, SystemVariant::N6_2, r.beta(), B, f.zero()) == 3);
  CHECK_THROWS_AS(system_count(r, SystemVariant::N8_1, r.zero(), r.zero(), f.zero()), std::invalid_argument);
}

TEST_CASE("E and F at m=3") {
  const DgGroup g(3);
  const auto& ring = g.ring();
  const auto E = sum_all(g, SumKind::E, Exec::serial);
  const auto F = sum_all(g, SumKind::F, Exec::parallel);
  int outside = 0;
  for (std::uint32_t code = 0; code < ring.size(); ++code) {
    const RingElement c = ring.from_code(code);
    for (std::uint32_t d = 0; d < g.q(); ++d) {
      const auto k = ring_field_index(ring, c, {d});
      CHECK(E[k] == sum_brute(g, SumKind::E, c, {d}));
      CHECK(F[k] == sum_brute(g, SumKind::F, c, {d}));
      CHECK(F[k] == *sum_closed(ring, SumKind::F, c, {d}));
      if (!c.is_even()) {
        ++outside;
        CHECK(E[k] == *sum_closed(ring, SumKind::E, c, {d}));
      } else {
        CHECK(!sum_closed(ring, SumKind::E, c, {d}));
      }
    }
  }
  CHECK(outside == 448);

  // c = 1 - beta.
  const RingElement c = GaloisRing::sub(ring.one(), ring.beta());
  const auto [Fe, Ge] = split_difference(ring, c);
  const auto& f = ring.field();
  const FieldElement d = BinaryField::add(f.cube(GaloisRing::reduce(Fe)), f.cube(GaloisRing::reduce(Ge)));
  CHECK(sum_brute(g, SumKind::E, c, d) == 90112);
  CHECK(sum_brute(g, SumKind::E, c, BinaryField::add(d, f.one())) == 24576);
}

TEST_CASE("E and F closed forms at m=5") {
  const DgGroup g(5);
  const auto& ring = g.ring();
  const auto E = sum_all(g, SumKind::E);
  const auto F = sum_all(g, SumKind::F);
  for (std::uint32_t code = 0; code < ring.size(); ++code) {
    const RingElement c = ring.from_code(code);
    for (std::uint32_t d = 0; d < g.q(); ++d) {
      const auto k = ring_field_index(ring, c, {d});
      CHECK(F[k] == *sum_closed(ring, SumKind::F, c, {d}));
      if (!c.is_even()) CHECK(E[k] == *sum_closed(ring, SumKind::E, c, {d}));
    }
  }
  const RingElement c = ring.beta();
  CHECK(E[ring_field_index(ring, c, {3})] == sum_brute(g, SumKind::E, c, {3}));
}

TEST_CASE("N columns") {
  const DgGroup g(3);
  CHECK(n_column(g, 0, 0) == GaussianInteger(2048));
  CHECK(n_column(g, 9, 0) == GaussianInteger(188416));
  const auto& ring = g.ring();
  const auto E = sum_all(g, SumKind::E);
  const auto F = sum_all(g, SumKind::F);
  for (int i = 0; i < 10; ++i) {
    const auto all = n_column_all(g, i, i % 2 ? Exec::serial : Exec::parallel);
    for (std::uint32_t h = 0; h < g.order(); h += (i < 8 ? 1 : 3)) {
      const auto d = n_column(g, i, h);
      CHECK(d.re == all[h].re);
      CHECK(d.im == all[h].im);
    }
    if (i != 8) continue;
    // S^4 splits as 4E on u = 0 and 16F on u = 2.
    for (std::uint32_t h = 0; h < g.order(); ++h) {
      const GroupElement e = g.element(h);
      const auto k = ring_field_index(ring, e.a, e.b);
      const mpz_class want = e.u == 0 ? mpz_class(4 * E[k]) : (e.u == 2 ? mpz_class(16 * F[k]) : mpz_class(0));
      CHECK(mpz_class(static_cast<long>(all[h].re)) == want);
    }
  }
  CHECK_THROWS_AS(n_column(g, 10, 0), std::invalid_argument);
}
