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

#include "dgscheme/kernels.hpp"

#include <omp.h>

#include <bit>

namespace dgscheme::kernels {
namespace {

// Spreads t over the positions left free by clearing bits p1 < p2.
inline std::uint32_t deposit2(std::uint32_t t, int p1, int p2) {
  t = ((t >> p1) << (p1 + 1)) | (t & ((1u << p1) - 1));
  return ((t >> p2) << (p2 + 1)) | (t & ((1u << p2) - 1));
}
inline std::uint32_t deposit1(std::uint32_t t, int p) { return ((t >> p) << (p + 1)) | (t & ((1u << p) - 1)); }

inline void radix4(Gauss64* d, std::uint32_t b, std::uint32_t lo, std::uint32_t hi) {
  const Gauss64 x0 = d[b], x1 = d[b | lo], x2 = d[b | hi], x3 = d[b | lo | hi];
  const std::int64_t ar = x0.re + x2.re, ai = x0.im + x2.im;  // x0 + x2
  const std::int64_t br = x0.re - x2.re, bi = x0.im - x2.im;  // x0 - x2
  const std::int64_t cr = x1.re + x3.re, ci = x1.im + x3.im;  // x1 + x3
  const std::int64_t er = x1.re - x3.re, ei = x1.im - x3.im;  // x1 - x3
  d[b] = {ar + cr, ai + ci};
  d[b | lo] = {br - ei, bi + er};  // x0 + i x1 - x2 - i x3
  d[b | hi] = {ar - cr, ai - ci};
  d[b | lo | hi] = {br + ei, bi - er};
}

inline void radix2(Gauss64* d, std::uint32_t b, std::uint32_t bit) {
  const Gauss64 x0 = d[b], x1 = d[b | bit];
  d[b] = {x0.re + x1.re, x0.im + x1.im};
  d[b | bit] = {x0.re - x1.re, x0.im - x1.im};
}

template <bool Parallel>
void transform_impl(const GroupShape& shape, std::span<Gauss64> data) {
  Gauss64* d = data.data();
  const std::int64_t n = shape.order();
  for (int k = 0; k < shape.coordinate_count(); ++k) {
    const auto [pl, ph] = shape.bit_positions(k);
    if (ph >= 0) {
      const std::int64_t count = n / 4;
      const std::uint32_t lo = 1u << pl, hi = 1u << ph;
#pragma omp parallel for schedule(static) if (Parallel)
      for (std::int64_t t = 0; t < count; ++t) radix4(d, deposit2(static_cast<std::uint32_t>(t), pl, ph), lo, hi);
    } else {
      const std::int64_t count = n / 2;
      const std::uint32_t bit = 1u << pl;
#pragma omp parallel for schedule(static) if (Parallel)
      for (std::int64_t t = 0; t < count; ++t) radix2(d, deposit1(static_cast<std::uint32_t>(t), pl), bit);
    }
  }
}

template <bool Parallel>
std::vector<std::uint32_t> counts_impl(const GroupShape& shape, std::span<const std::uint16_t> labels, int c) {
  const std::int64_t n = shape.order();
  const std::size_t cc = static_cast<std::size_t>(c) * c;
  std::vector<std::uint32_t> out(n * cc, 0);
  std::vector<std::uint32_t> neg(n);
  for (std::int64_t h = 0; h < n; ++h) neg[h] = shape.neg(static_cast<std::uint32_t>(h));
#pragma omp parallel for schedule(dynamic, 16) if (Parallel)
  for (std::int64_t g = 0; g < n; ++g) {
    std::uint32_t* row = out.data() + g * cc;
    for (std::int64_t h = 0; h < n; ++h) {
      const std::uint32_t diff = shape.add(static_cast<std::uint32_t>(g), neg[h]);
      ++row[labels[h] * c + labels[diff]];
    }
  }
  return out;
}

template <bool Parallel>
std::vector<Gauss64> xi_impl(const GaloisRing& ring) {
  const std::uint32_t q = ring.q();
  const std::int64_t rs = ring.size();
  const auto& teich = ring.teichmuller();
  std::vector<GaloisRing::TraceMask> masks(q);
  std::vector<std::uint32_t> cube_masks(q);
  for (std::uint32_t k = 0; k < q; ++k) {
    masks[k] = ring.trace_mask(teich[k]);
    const FieldElement x = GaloisRing::reduce(teich[k]);
    cube_masks[k] = ring.field().trace_mask(ring.field().cube(x));
  }
  std::vector<Gauss64> out(rs * q);
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::int64_t code = 0; code < rs; ++code) {
    const RingElement a = ring.from_code(static_cast<std::uint32_t>(code));
    Gauss64* row = out.data() + code * q;
    for (std::uint32_t k = 0; k < q; ++k) {
      const int t = GaloisRing::apply_trace_mask(masks[k], a);
      for (std::uint32_t b = 0; b < q; ++b) {
        const int e = (t + 2 * (std::popcount(b & cube_masks[k]) & 1)) & 3;
        switch (e) {
          case 0: ++row[b].re; break;
          case 1: ++row[b].im; break;
          case 2: --row[b].re; break;
          default: --row[b].im; break;
        }
      }
    }
  }
  return out;
}

struct Summand {
  RingElement value;
  std::uint32_t cube;
};

template <bool Parallel>
std::vector<std::uint64_t> histogram_impl(const GaloisRing& ring, std::span<const TupleTerm> terms) {
  const std::uint32_t q = ring.q();
  const std::size_t bins = static_cast<std::size_t>(ring.size()) * q;
  const int k = static_cast<int>(terms.size());
  std::vector<std::vector<Summand>> tab(k, std::vector<Summand>(q));
  for (int j = 0; j < k; ++j) {
    for (std::uint32_t t = 0; t < q; ++t) {
      RingElement x = ring.teichmuller()[t];
      const std::uint32_t cube = terms[j].in_cube_sum ? ring.field().cube(GaloisRing::reduce(x)).bits : 0;
      const int c = terms[j].coefficient;
      if (c == 2 || c == -2) x = GaloisRing::twice(x);
      if (c < 0) x = GaloisRing::neg(x);
      tab[j][t] = {x, cube};
    }
  }
  std::vector<std::uint64_t> total(bins, 0);
  if (k == 0) {
    total[0] = 1;
    return total;
  }
  std::uint64_t inner = 1;
  for (int j = 1; j < k; ++j) inner *= q;

#pragma omp parallel if (Parallel)
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static)
    for (std::int64_t first = 0; first < static_cast<std::int64_t>(q); ++first) {
      for (std::uint64_t rest = 0; rest < inner; ++rest) {
        RingElement s = tab[0][first].value;
        std::uint32_t cube = tab[0][first].cube;
        std::uint64_t r = rest;
        for (int j = 1; j < k; ++j) {
          const Summand& e = tab[j][r % q];
          r /= q;
          s = GaloisRing::add(s, e.value);
          cube ^= e.cube;
        }
        ++local[static_cast<std::size_t>(ring.code(s)) * q + cube];
      }
    }
#pragma omp critical
    for (std::size_t i = 0; i < bins; ++i) total[i] += local[i];
  }
  return total;
}

}  // namespace

void transform_serial(const GroupShape& shape, std::span<Gauss64> data) { transform_impl<false>(shape, data); }
void transform_parallel(const GroupShape& shape, std::span<Gauss64> data) { transform_impl<true>(shape, data); }

std::vector<std::uint32_t> intersection_counts_serial(const GroupShape& shape, std::span<const std::uint16_t> labels,
                                                      int classes) {
  return counts_impl<false>(shape, labels, classes);
}
std::vector<std::uint32_t> intersection_counts_parallel(const GroupShape& shape,
                                                        std::span<const std::uint16_t> labels, int classes) {
  return counts_impl<true>(shape, labels, classes);
}

std::vector<Gauss64> xi_table_serial(const GaloisRing& ring) { return xi_impl<false>(ring); }
std::vector<Gauss64> xi_table_parallel(const GaloisRing& ring) { return xi_impl<true>(ring); }

std::vector<std::uint64_t> tuple_histogram_serial(const GaloisRing& ring, std::span<const TupleTerm> terms) {
  return histogram_impl<false>(ring, terms);
}
std::vector<std::uint64_t> tuple_histogram_parallel(const GaloisRing& ring, std::span<const TupleTerm> terms) {
  return histogram_impl<true>(ring, terms);
}

}  // namespace dgscheme::kernels
