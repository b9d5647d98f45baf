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

#include <random>

#include "dgscheme/dg_constructions.hpp"
#include "dgscheme/kernels.hpp"
#include "dgscheme/reference_tables.hpp"

using namespace dgscheme;

namespace {

const DgGroup& group(int m) {
  static const DgGroup g3(3), g5(5);
  return m == 3 ? g3 : g5;
}

std::vector<std::uint64_t> row0(const ExactMatrix& m) {
  std::vector<std::uint64_t> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(mpz_class(m(0, c)).get_ui());
  return out;
}

}  // namespace

TEST_CASE("transform agrees with the naive character row") {
  const DgGroup& g = group(3);
  const Partition R = build_R_partition(g);
  std::vector<std::vector<Gauss64>> fast(10);
  for (int j = 0; j < 10; ++j) {
    std::vector<std::int64_t> ind(g.order());
    for (std::uint32_t h = 0; h < g.order(); ++h) ind[h] = R.labels[h] == j;
    fast[j] = character_sums(g.shape(), ind, Exec::parallel);
    CHECK(fast[j] == character_sums(g.shape(), ind, Exec::serial));
  }
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const auto row = character_row(g.shape(), R, x);
    mpz_class sum = 0;
    for (int j = 0; j < 10; ++j) {
      CHECK(row[j].re == fast[j][x].re);
      CHECK(row[j].im == fast[j][x].im);
      sum += row[j].re;
    }
    CHECK(sum == (x == 0 ? 2048 : 0));
  }
  const auto id = character_row(g.shape(), R, 0);
  const auto sizes = R.sizes();
  for (int j = 0; j < 10; ++j) CHECK(id[j].re == static_cast<long>(sizes[j]));
}

TEST_CASE("transform sampled at m=5") {
  const DgGroup& g = group(5);
  const Partition R = build_R_partition(g);
  std::vector<std::int64_t> ind(g.order());
  for (std::uint32_t h = 0; h < g.order(); ++h) ind[h] = R.labels[h] == 3;
  const auto fast = character_sums(g.shape(), ind);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, g.order() - 1);
  for (int t = 0; t < 1000; ++t) {
    const std::uint32_t x = pick(rng);
    const auto row = character_row(g.shape(), R, x);
    CHECK(row[3].re == fast[x].re);
    CHECK(row[3].im == fast[x].im);
  }
}

TEST_CASE("Fourier inversion and trivial inputs") {
  const GroupShape shapes[] = {group(3).shape(), GroupShape(1, 2, {1, 0, 0, 0, 2, 2, 0, 2, 0}),
                               GroupShape(2, 0, {0, 1, 1, 2})};
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> v(-50, 50);
  for (const auto& shape : shapes) {
    std::vector<Gauss64> f(shape.order());
    for (auto& z : f) z = {v(rng), v(rng)};
    auto F = character_sums(shape, f, Exec::parallel);
    for (auto& z : F) z.im = -z.im;
    auto back = character_sums(shape, F, Exec::serial);
    for (std::uint32_t h = 0; h < shape.order(); ++h) {
      CHECK(back[h].re == static_cast<std::int64_t>(shape.order()) * f[h].re);
      CHECK(-back[h].im == static_cast<std::int64_t>(shape.order()) * f[h].im);
    }
    std::vector<std::int64_t> delta(shape.order(), 0);
    delta[0] = 1;
    for (const auto& z : character_sums(shape, delta)) CHECK(z == Gauss64{1, 0});
  }
  std::vector<std::int64_t> huge(group(3).order(), std::int64_t{1} << 52);
  CHECK_THROWS_AS(character_sums(group(3).shape(), huge), std::overflow_error);
}

TEST_CASE("group shape rejects bad pairings") {
  CHECK_THROWS_AS(GroupShape(2, 0, {1, 0, 1, 1}), std::invalid_argument);   // not symmetric
  CHECK_THROWS_AS(GroupShape(1, 1, {1, 1, 1, 2}), std::invalid_argument);   // odd on Z2
  CHECK_THROWS_AS(GroupShape(2, 0, {1, 1, 1, 1}), std::invalid_argument);   // degenerate
  const GroupShape& s = group(3).shape();
  for (std::uint32_t g = 0; g < s.order(); g += 17) {
    CHECK(s.from_dual_coordinates(s.dual_coordinates(g)) == g);
    for (std::uint32_t h = 0; h < s.order(); h += 29) {
      CHECK(s.pair(g, h) == s.pair_dual(s.dual_coordinates(g), h));
      CHECK(s.sub(s.add(g, h), h) == g);
    }
  }
}

TEST_CASE("kernel variants agree") {
  const GaloisRing r(3);
  CHECK(kernels::xi_table_serial(r) == kernels::xi_table_parallel(r));
  const std::vector<kernels::TupleTerm> terms{{1, true}, {-1, true}, {2, false}};
  CHECK(kernels::tuple_histogram_serial(r, terms) == kernels::tuple_histogram_parallel(r, terms));
  const DgGroup& g = group(3);
  const Partition K = build_code_relations(g, CodeRelations::kerdock4);
  CHECK(kernels::intersection_counts_serial(g.kerdock_shape(), K.labels, 5) ==
        kernels::intersection_counts_parallel(g.kerdock_shape(), K.labels, 5));
}

TEST_CASE("complete scheme and non-schemes") {
  const DgGroup& g = group(3);
  Partition two{2, std::vector<std::uint16_t>(g.order(), 1)};
  two.labels[0] = 0;
  const auto d = dual_partition(g.shape(), two);
  CHECK(d.is_scheme);
  CHECK(d.dual.sizes() == std::vector<std::uint64_t>{1, 2047});
  Partition bad = two;
  bad.labels[0] = 1;
  CHECK(validate_partition(g.shape(), bad).has_value());
  CHECK(!dual_partition(g.shape(), bad).is_scheme);
  CHECK_THROWS_AS(intersection_numbers(group(5).shape(), build_R_partition(group(5))), std::length_error);
  Partition lopsided = two;
  lopsided.labels[g.index({1, g.ring().zero(), {}})] = 0;
  CHECK(validate_partition(g.shape(), lopsided).has_value());
}

TEST_CASE("reference tables are internally consistent") {
  const std::pair<ReferenceScheme, int> points[] = {
      {ReferenceScheme::A, 1}, {ReferenceScheme::B, 1}, {ReferenceScheme::C, 2}, {ReferenceScheme::D, 2}};
  for (int s : {4, 8, 16}) {
    const mpz_class order = mpz_class(s) * s * s * s * s * s / 2;  // 4 q^3 with s^2 = 2q
    for (const auto& [which, divisor] : points) {
      const auto& ref = reference_eigenmatrices(which);
      const ExactMatrix P = ref.P.evaluate(s), Q = ref.Q.evaluate(s);
      CHECK(P.is_integral());
      CHECK(Q.is_integral());
      mpz_class sum = 0;
      for (auto v : row0(P)) sum += v;
      CHECK(sum == order / divisor);
      const bool ok = P * Q == ExactMatrix::identity(P.rows(), mpq_class(order / divisor));
      // The printed second eigenmatrix of the seven-class scheme is garbled.
      CHECK(ok == (which != ReferenceScheme::A));
      if (which == ReferenceScheme::A) {
        const auto computed = second_eigenmatrix(P, order);
        REQUIRE(computed);
        CHECK(computed->is_integral());
        CHECK(P * *computed == ExactMatrix::identity(P.rows(), mpq_class(order)));
      }
    }
    CHECK(matrix_T_symbolic().evaluate(s).determinant() == expected_det_T().evaluate(s));
  }
  CHECK(reference_eigenmatrices(ReferenceScheme::C).P.rows() == 6);
  CHECK(reference_eigenmatrices(ReferenceScheme::D).P.rows() == 5);
  CHECK(reference_P(ReferenceScheme::B, 3)(0, 1) == 140);
  CHECK(row0(reference_P(ReferenceScheme::B, 3)) == std::vector<std::uint64_t>{1, 140, 112, 336, 30, 840, 336, 112, 140, 1});
  CHECK(row0(reference_Q(ReferenceScheme::B, 3)) == std::vector<std::uint64_t>{1, 7, 16, 112, 120, 840, 560, 336, 35, 21});
}

TEST_CASE("exact JSON numbers") {
  CHECK(exact_json(mpz_class(12)).is_number_integer());
  const mpz_class big = mpz_class(1) << 53;
  CHECK(exact_json(big) == Json("9007199254740992"));
  CHECK(exact_json(mpz_class(-big + 1)).is_number_integer());
  CHECK(exact_json(mpq_class(1, 3)) == Json("1/3"));
}
