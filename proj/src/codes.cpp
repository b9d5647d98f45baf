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

#include "dgscheme/codes.hpp"

#include <omp.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dgscheme {

GroupElement add(const GroupElement& x, const GroupElement& y) {
  return {static_cast<Z4>((x.u + y.u) & 3), GaloisRing::add(x.a, y.a), BinaryField::add(x.b, y.b)};
}

GroupElement neg(const GroupElement& x) { return {static_cast<Z4>((4 - x.u) & 3), GaloisRing::neg(x.a), x.b}; }

Codeword codeword(const GaloisRing& ring, const GroupElement& g) {
  const RingElement b = ring.teich_lift(g.b);
  Codeword w;
  w.reserve(ring.q());
  for (const RingElement& x : ring.teichmuller()) {
    const RingElement x3 = ring.mul(x, ring.mul(x, x));
    const RingElement arg = GaloisRing::add(ring.mul(g.a, x), GaloisRing::twice(ring.mul(b, x3)));
    w.push_back(static_cast<Z4>((g.u + ring.trace(arg)) & 3));
  }
  return w;
}

Codeword add(const Codeword& x, const Codeword& y) {
  if (x.size() != y.size()) throw std::invalid_argument("codeword lengths differ");
  Codeword z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = static_cast<Z4>((x[i] + y[i]) & 3);
  return z;
}

int lee_weight(const Codeword& w) {
  int s = 0;
  for (Z4 c : w) s += c <= 2 ? c : 4 - c;
  return s;
}

std::vector<std::uint8_t> gray_map(const Codeword& w) {
  static constexpr std::uint8_t kBits[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  std::vector<std::uint8_t> v;
  v.reserve(2 * w.size());
  for (Z4 c : w) {
    v.push_back(kBits[c & 3][0]);
    v.push_back(kBits[c & 3][1]);
  }
  return v;
}

int hamming_weight(const std::vector<std::uint8_t>& v) {
  int s = 0;
  for (auto b : v) s += b != 0;
  return s;
}

WeightDistribution weight_distribution(const GaloisRing& ring, CodeFamily family) {
  const std::int64_t q = ring.q();
  const std::int64_t bs = family == CodeFamily::kerdock ? 1 : q;
  const std::int64_t total = 4 * ring.size() * bs;
  std::vector<std::uint64_t> hist(2 * q + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(2 * q + 1, 0);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < total; ++t) {
      const GroupElement g{static_cast<Z4>(t & 3), ring.from_code(static_cast<std::uint32_t>((t >> 2) % ring.size())),
                           FieldElement{static_cast<std::uint32_t>((t >> 2) / ring.size())}};
      ++local[lee_weight(codeword(ring, g))];
    }
#pragma omp critical
    for (std::size_t i = 0; i < local.size(); ++i) hist[i] += local[i];
  }
  WeightDistribution out;
  for (std::size_t w = 0; w < hist.size(); ++w)
    if (hist[w]) out[static_cast<int>(w)] = hist[w];
  return out;
}

namespace {

void check_odd(int m) {
  if (m < kMinDegree || m > kMaxDegree || m % 2 == 0) throw std::invalid_argument("m must be odd with 3 <= m <= 15");
}

}  // namespace

WeightDistribution kerdock_formula(int m) {
  check_odd(m);
  const std::int64_t q = std::int64_t{1} << m;
  const std::int64_t h = std::int64_t{1} << ((m - 1) / 2);  // sqrt(q/2)
  return {{0, 1}, {static_cast<int>(q - h), 2 * q * (q - 1)}, {static_cast<int>(q), 4 * q - 2},
          {static_cast<int>(q + h), 2 * q * (q - 1)}, {static_cast<int>(2 * q), 1}};
}

WeightDistribution dg_formula(int m, int dg_mid_denominator) {
  check_odd(m);
  const std::int64_t q = std::int64_t{1} << m;
  const std::int64_t h = std::int64_t{1} << ((m - 1) / 2);
  const std::int64_t s = 2 * h;  // sqrt(2q)
  const std::uint64_t outer = (q - 1) * q * (2 * q - 1) / 6;
  const std::uint64_t mid = (q - 1) * 2 * q * (q + 4) / dg_mid_denominator;
  return {{0, 1},
          {static_cast<int>(q - s), outer},
          {static_cast<int>(q - h), mid},
          {static_cast<int>(q), static_cast<std::uint64_t>((2 * q - 1) * (q * q - q + 2))},
          {static_cast<int>(q + h), mid},
          {static_cast<int>(q + s), outer},
          {static_cast<int>(2 * q), 1}};
}

std::string weight_distribution_csv(const WeightDistribution& w) {
  std::ostringstream os;
  os << "weight,count\n";
  for (const auto& [k, v] : w) os << k << ',' << v << '\n';
  return os.str();
}

}  // namespace dgscheme
