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
#include <map>
#include <string>
#include <vector>

#include "dgscheme/galois_ring.hpp"

namespace dgscheme {

/// (u, a, b) in Z4 x R x F_q; b stands for its Teichmuller lift.
struct GroupElement {
  Z4 u = 0;
  RingElement a;
  FieldElement b;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupElement& x);

/// Entries u + T(aX + 2BX^3) over the Teichmuller set in table order.
using Codeword = std::vector<Z4>;

Codeword codeword(const GaloisRing& ring, const GroupElement& g);
Codeword add(const Codeword& x, const Codeword& y);
int lee_weight(const Codeword& w);
/// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10, coordinate by coordinate.
std::vector<std::uint8_t> gray_map(const Codeword& w);
int hamming_weight(const std::vector<std::uint8_t>& v);
inline bool is_kerdock(const GroupElement& g) { return g.b.is_zero(); }

enum class CodeFamily { kerdock, delsarte_goethals };

using WeightDistribution = std::map<int, std::uint64_t>;

/// Exhaustive Lee weight distribution over all codewords.
WeightDistribution weight_distribution(const GaloisRing& ring, CodeFamily family);

/// Closed forms for odd m. `dg_mid_denominator` is the divisor in the count
/// of words of weight q +- sqrt(q/2); 3 balances the totals, 2 is the
/// misprinted variant kept for the report.
WeightDistribution kerdock_formula(int m);
WeightDistribution dg_formula(int m, int dg_mid_denominator = 3);

std::string weight_distribution_csv(const WeightDistribution& w);

}  // namespace dgscheme
