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
#include <set>

#include "dgscheme/codes.hpp"
#include "dgscheme/dg_group.hpp"
#include "dgscheme/exp_sums.hpp"

using namespace dgscheme;

namespace {

std::uint64_t total(const WeightDistribution& w) {
  std::uint64_t t = 0;
  for (const auto& [k, v] : w) t += v;
  return t;
}

}  // namespace

TEST_CASE("codewords") {
  const DgGroup g(3);
  const auto& ring = g.ring();
  CHECK(codeword(ring, {0, ring.zero(), {}}) == Codeword(8, 0));
  CHECK(codeword(ring, {2, ring.zero(), {}}) == Codeword(8, 2));
  std::set<Codeword> seen;
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    const GroupElement e = g.element(h);
    const Codeword c = codeword(ring, e);
    seen.insert(c);
    CHECK(lee_weight(codeword(ring, neg(e))) == lee_weight(c));
    CHECK(hamming_weight(gray_map(c)) == lee_weight(c));
  }
  CHECK(seen.size() == 2048);
  CHECK(lee_weight(Codeword(8, 2)) == 16);
  CHECK(gray_map(Codeword(8, 2)) == std::vector<std::uint8_t>(16, 1));
  CHECK(gray_map(Codeword(8, 0)) == std::vector<std::uint8_t>(16, 0));
  CHECK(is_kerdock({1, ring.beta(), {}}));
  CHECK(!is_kerdock({0, ring.zero(), {1}}));
}

TEST_CASE("codeword map is additive") {
  std::mt19937 rng(12345);
  for (int m : {3, 5}) {
    const DgGroup g(m);
    std::uniform_int_distribution<std::uint32_t> pick(0, g.order() - 1);
    for (int t = 0; t < 10000; ++t) {
      const GroupElement x = g.element(pick(rng)), y = g.element(pick(rng));
      CHECK(codeword(g.ring(), add(x, y)) == add(codeword(g.ring(), x), codeword(g.ring(), y)));
    }
  }
}

TEST_CASE("Kerdock weight distribution") {
  const WeightDistribution k3{{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}};
  CHECK(weight_distribution(GaloisRing(3), CodeFamily::kerdock) == k3);
  CHECK(kerdock_formula(3) == k3);
  const auto k5 = weight_distribution(GaloisRing(5), CodeFamily::kerdock);
  CHECK(k5 == kerdock_formula(5));
  CHECK(k5.at(28) == 1984);
  CHECK(k5.at(32) == 126);
  CHECK(total(k5) == 4096);
}

TEST_CASE("Delsarte-Goethals weight distribution") {
  const WeightDistribution d3{{0, 1}, {4, 140}, {6, 448}, {8, 870}, {10, 448}, {12, 140}, {16, 1}};
  const auto w3 = weight_distribution(GaloisRing(3), CodeFamily::delsarte_goethals);
  CHECK(w3 == d3);
  CHECK(dg_formula(3) == d3);
  // The printed denominator 2 gives 672 and an impossible total.
  const auto printed = dg_formula(3, 2);
  CHECK(printed.at(6) == 672);
  CHECK(total(printed) == 2496);
  const auto w5 = weight_distribution(GaloisRing(5), CodeFamily::delsarte_goethals);
  CHECK(w5 == dg_formula(5));
  CHECK(w5.at(28) == 23808);
  CHECK(total(w5) == 131072);
  CHECK(total(dg_formula(5, 2)) != 131072);
  CHECK(weight_distribution_csv(d3).rfind("weight,count\n0,1\n4,140\n", 0) == 0);
}
