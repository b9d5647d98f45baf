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
#include <span>
#include <vector>

#include "dgscheme/galois_ring.hpp"
#include "dgscheme/gaussian.hpp"
#include "dgscheme/group_shape.hpp"

namespace dgscheme::kernels {

/// In-place character transform over the index domain of `shape`:
/// afterwards data[y] = sum_h data_in[h] i^{pair_dual(y, h)}.
/// The caller guarantees that the l1 norm of the input is below 2^62.
void transform_serial(const GroupShape& shape, std::span<Gauss64> data);
void transform_parallel(const GroupShape& shape, std::span<Gauss64> data);

/// counts[(g * c + i) * c + j] = |{h : label(h) = i, label(g - h) = j}|.
std::vector<std::uint32_t> intersection_counts_serial(const GroupShape& shape, std::span<const std::uint16_t> labels,
                                                      int classes);
std::vector<std::uint32_t> intersection_counts_parallel(const GroupShape& shape,
                                                        std::span<const std::uint16_t> labels, int classes);

/// xi(a, b) = sum_{X in T} i^{T(aX + 2 B X^3)} for every a (by ring code)
/// and b (by field bits), laid out as [code(a) * q + b].
std::vector<Gauss64> xi_table_serial(const GaloisRing& ring);
std::vector<Gauss64> xi_table_parallel(const GaloisRing& ring);

/// One summand c X of a Teichmuller tuple sum; c in {1, -1, 2, -2}.
struct TupleTerm {
  int coefficient = 1;
  bool in_cube_sum = true;
};

/// Histogram over all tuples (X_1..X_k) in T^k of the pair
/// (sum c_j X_j, sum over flagged j of x_j^3), laid out as
/// [code(ring sum) * q + cube sum bits]. With cubes disabled the second
/// key is always 0.
std::vector<std::uint64_t> tuple_histogram_serial(const GaloisRing& ring, std::span<const TupleTerm> terms);
std::vector<std::uint64_t> tuple_histogram_parallel(const GaloisRing& ring, std::span<const TupleTerm> terms);

}  // namespace dgscheme::kernels
