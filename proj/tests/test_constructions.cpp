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

#include "dgscheme/dg_constructions.hpp"
#include "dgscheme/exp_sums.hpp"

using namespace dgscheme;

namespace {

std::vector<std::uint64_t> u64(std::initializer_list<std::uint64_t> v) { return v; }

const DgAnalysis& analysis(int m) {
  static const DgAnalysis a3(3), a5(5);
  return m == 3 ? a3 : a5;
}

}  // namespace

TEST_CASE("R partition") {
  const auto& a = analysis(3);
  CHECK(a.R.sizes() == u64({1, 140, 112, 336, 30, 840, 336, 112, 140, 1}));
  CHECK(a.R.labels[0] == 0);
  CHECK(a.R.labels[a.group.index({2, a.group.ring().zero(), {}})] == 9);
  CHECK(is_symmetric(a.group.shape(), a.R));
  CHECK(build_code_relations(a.group, CodeRelations::nine) == a.R);
  CHECK(build_code_relations(analysis(5).group, CodeRelations::nine) == analysis(5).R);
}

TEST_CASE("E partition equals the dual classes") {
  for (int m : {3, 5}) {
    const auto& a = analysis(m);
    INFO(a.dual_match_certificate.dump());
    CHECK(a.dual.is_scheme);
    CHECK(a.dual_matches_E);
    CHECK(a.dual.dual == a.E);
    CHECK(is_symmetric(a.group.shape(), a.E));
  }
  const auto& a = analysis(3);
  CHECK(a.E.sizes() == u64({1, 7, 16, 112, 120, 840, 560, 336, 35, 21}));
  CHECK(a.E.labels[a.group.index({0, a.group.ring().zero(), {5}})] == 1);
}

TEST_CASE("eigenmatrices against the reference tables") {
  for (int m : {3, 5}) {
    const auto& a = analysis(m);
    REQUIRE(a.dual_matches_E);
    CHECK(a.dual.P == reference_P(ReferenceScheme::B, m));
    REQUIRE(a.Q);
    CHECK(*a.Q == reference_Q(ReferenceScheme::B, m));
    const auto checks = check_eigenmatrices(a.dual.P, *a.Q, a.group.order(), a.R.sizes(), a.E.sizes());
    CHECK(checks.all());
  }
}

TEST_CASE("character table and matrix T") {
  for (int m : {3, 5}) {
    const auto& a = analysis(m);
    const ExactMatrix T = matrix_T(m);
    const ExactMatrix N = n_table_direct(a);
    CHECK(N == frak_T(m));
    CHECK(character_rows_direct(a) * T == N);
    CHECK(a.dual.P * T == frak_T(m));
    CHECK(frak_T(m) * *T.inverse() == a.dual.P);
  }
  for (int s : {4, 8, 16}) CHECK(matrix_T_symbolic().evaluate(s).determinant() == expected_det_T().evaluate(s));
  const ExactMatrix T3 = matrix_T(3);
  for (std::size_t r = 0; r < 10; ++r) CHECK(T3(r, 0) == 1);
  const ExactMatrix F = frak_T(3);
  CHECK(F(6, 6) == 12288);
  CHECK(F(5, 8) == 98304);
  CHECK(F(4, 8) == 360448);
}

TEST_CASE("code relation schemes") {
  const auto& a = analysis(3);
  const Partition seven = build_code_relations(a.group, CodeRelations::seven);
  CHECK(seven == fuse_partition(a.R, {{0}, {1}, {2, 3}, {4}, {5}, {6, 7}, {8}, {9}}));
  const auto d7 = dual_partition(a.group.shape(), seven);
  CHECK(d7.is_scheme);
  CHECK(match_rows(d7.P, reference_P(ReferenceScheme::A, 3)).has_value());

  const Partition lee = build_code_relations(a.group, CodeRelations::lee_only);
  CHECK(lee.class_count == 7);
  const auto dl = dual_partition(a.group.shape(), lee);
  CHECK(!dl.is_scheme);
  CHECK(dl.distinct_rows != 7);
  CHECK(!dl.certificate.empty());

  for (int m : {3, 5}) {
    const auto& g = analysis(m).group;
    const Partition k = build_code_relations(g, CodeRelations::kerdock4);
    CHECK(k.labels.size() == (m == 3 ? 256u : 4096u));
    CHECK(is_symmetric(g.kerdock_shape(), k));
    CHECK(intersection_numbers(g.kerdock_shape(), k).constant);
    CHECK(dual_partition(g.kerdock_shape(), k).is_scheme);
  }
}

TEST_CASE("intersection numbers of the ten-class partition") {
  const auto& a = analysis(3);
  const auto in = intersection_numbers(a.group.shape(), a.R);
  CHECK(in.constant);
  const auto sizes = a.R.sizes();
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < 10; ++k) {
      std::uint64_t row = 0;
      for (int j = 0; j < 10; ++j) {
        row += in.p_ijk(i, j, k);
        CHECK(in.p_ijk(0, j, k) == (j == k ? 1u : 0u));
      }
      CHECK(row == sizes[i]);
    }
}

TEST_CASE("fusions and quotients") {
  const auto& a = analysis(3);
  const Grouping g7{{0}, {1}, {2, 3}, {4}, {5}, {6, 7}, {8}, {9}};
  const auto f = fusion_check(a.dual.P, g7);
  REQUIRE(f.admissible);
  CHECK(match_rows(f.P, reference_P(ReferenceScheme::A, 3)).has_value());
  // Identity grouping leaves P alone.
  Grouping id;
  for (int j = 0; j < 10; ++j) id.push_back({j});
  CHECK(fusion_check(a.dual.P, id).P == a.dual.P);

  const auto fusions = all_admissible_fusions(a.dual.P);
  int hits = 0;
  for (const auto& g : fusions)
    if (g.size() == 8 && equal_up_to_permutation(fusion_check(a.dual.P, g).P, reference_P(ReferenceScheme::A, 3)))
    {
      ++hits;
      CHECK(g == g7);
    }
  CHECK(hits == 1);

  const std::uint32_t z = a.group.index({2, a.group.ring().zero(), {}});
  const auto qr = quotient_scheme(a.group.shape(), a.R, z);
  CHECK(qr.clean);
  CHECK(qr.shape.order() == 1024);
  CHECK(qr.partition.class_count == 6);
  const auto dq = dual_partition(qr.shape, qr.partition);
  REQUIRE(dq.is_scheme);
  const auto refc = reference_P(ReferenceScheme::C, 3);
  CHECK(equal_up_to_permutation(dq.P, refc));
  const auto trivial = quotient_scheme(a.group.shape(), a.R, 0);
  CHECK(trivial.partition == a.R);
}

TEST_CASE("Gray image at m=3") {
  const auto& a = analysis(3);
  const GrayImage gi = gray_image(a.group, a.R);
  CHECK(gi.linear);
  CHECK(gi.dimension == 11);
  REQUIRE(gi.shape);
  CHECK(intersection_numbers(*gi.shape, gi.partition).constant);
  const auto d = dual_partition(*gi.shape, gi.partition);
  REQUIRE(d.is_scheme);
  CHECK(!match_rows(d.P, a.dual.P).has_value());
  CHECK(!equal_up_to_permutation(d.P, a.dual.P));
}
