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

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgscheme/exact_matrix.hpp"
#include "dgscheme/gaussian.hpp"
#include "dgscheme/group_shape.hpp"

namespace dgscheme {

using Json = nlohmann::ordered_json;

/// Labelling of every group element with a class index 0..class_count-1.
struct Partition {
  int class_count = 0;
  std::vector<std::uint16_t> labels;

  std::vector<std::uint64_t> sizes() const;
  /// Elements of class j in increasing index order.
  std::vector<std::uint32_t> members(int j) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Rebuilds labels after an order change: new class k is old class order[k].
Partition relabel(const Partition& p, std::span<const int> order);

/// nullopt when the partition is a valid symmetric partition with singleton
/// identity class; otherwise a certificate naming the offending element.
std::optional<Json> validate_partition(const GroupShape& shape, const Partition& p);

/// Whether label(-g) = label(g) everywhere.
bool is_symmetric(const GroupShape& shape, const Partition& p);

/// chi_g(S_j) for every class j with the pairing evaluated directly.
std::vector<GaussianInteger> character_row(const GroupShape& shape, const Partition& p, std::uint32_t g);

enum class Exec { serial, parallel };

/// F(g) = sum_h f(h) i^{<g,h>} for every g (indexed by group element).
/// Throws std::overflow_error when the l1 norm of f reaches 2^62.
std::vector<Gauss64> character_sums(const GroupShape& shape, std::span<const Gauss64> f, Exec exec = Exec::parallel);
/// Same with real integer weights.
std::vector<Gauss64> character_sums(const GroupShape& shape, std::span<const std::int64_t> f,
                                    Exec exec = Exec::parallel);

/// Characters grouped by their value rows (chi_g(S_0), ..., chi_g(S_d)).
struct DualResult {
  bool is_scheme = false;
  Partition dual;      // label of every character g; valid only if is_scheme
  ExactMatrix P;       // P(j, i) = chi(S_i) on dual class j; valid only if is_scheme
  int distinct_rows = 0;
  std::vector<std::uint32_t> representatives;  // first character of each dual class
  Json certificate;
};

/// Canonical order: identity first, then by (size, value row).
DualResult dual_partition(const GroupShape& shape, const Partition& p, Exec exec = Exec::parallel);

/// Reorders the dual classes of a scheme: new class k is old class order[k].
void reorder_dual(DualResult& r, std::span<const int> order);

/// Permutation matching the rows of `computed` to the rows of `reference`
/// (order[k] = row of computed equal to reference row k), or nullopt.
std::optional<std::vector<int>> match_rows(const ExactMatrix& computed, const ExactMatrix& reference);

/// Q = |X| P^{-1}; nullopt when P is singular.
std::optional<ExactMatrix> second_eigenmatrix(const ExactMatrix& P, const mpz_class& points);

/// Checks used for every eigenmatrix pair.
struct EigenChecks {
  bool pq_is_scaled_identity = false;
  bool p_integral = false;
  bool q_integral = false;
  bool p_row0_is_sizes = false;
  bool q_row0_is_dual_sizes = false;
  bool all() const { return pq_is_scaled_identity && p_integral && q_integral && p_row0_is_sizes && q_row0_is_dual_sizes; }
};
EigenChecks check_eigenmatrices(const ExactMatrix& P, const ExactMatrix& Q, const mpz_class& points,
                                std::span<const std::uint64_t> sizes, std::span<const std::uint64_t> dual_sizes);

inline constexpr std::uint32_t kIntersectionGuard = 1u << 13;

struct IntersectionResult {
  bool constant = false;
  int classes = 0;
  std::vector<std::uint32_t> p;  // p[(i * c + j) * c + k] = p_{i,j}^k
  Json certificate;
  std::uint32_t p_ijk(int i, int j, int k) const { return p[(static_cast<std::size_t>(i) * classes + j) * classes + k]; }
};

/// Brute-force constancy check of |{h in S_i : g - h in S_j}| over each S_k.
/// Throws std::length_error above kIntersectionGuard elements.
IntersectionResult intersection_numbers(const GroupShape& shape, const Partition& p, Exec exec = Exec::parallel);

/// A grouping of classes; group 0 must be {0}.
using Grouping = std::vector<std::vector<int>>;

struct FusionResult {
  bool admissible = false;
  ExactMatrix P;                 // fused eigenmatrix, valid only if admissible
  std::vector<std::vector<int>> row_groups;
  Json violation;
};

/// Bannai-Muzychuk test on the block row sums of P.
FusionResult fusion_check(const ExactMatrix& P, const Grouping& columns);

/// Every admissible grouping of columns 1..d, in the order the set
/// partitions are generated (restricted growth strings).
std::vector<Grouping> all_admissible_fusions(const ExactMatrix& P);

/// Merged partition for a grouping; classes numbered by group order.
Partition fuse_partition(const Partition& p, const Grouping& columns);

struct QuotientResult {
  GroupShape shape;
  Partition partition;
  Grouping merged;   // new class -> old classes
  bool clean = false;
  Json certificate;
};

/// Pushes the partition down to G / <z>. Supported generators are 0 and
/// z = 2 e_k for a Z4 coordinate k that the pairing couples only to itself.
/// Throws std::invalid_argument for other z.
QuotientResult quotient_scheme(const GroupShape& shape, const Partition& p, std::uint32_t z);

/// Exact integer as a JSON number, or as a decimal string from 2^53 on.
Json exact_json(const mpz_class& v);
/// Integral rationals as exact_json; others as "num/den" strings.
Json exact_json(const mpq_class& v);

Json shape_json(const GroupShape& shape);
Json matrix_json(const ExactMatrix& m);
Json element_json(const GroupShape& shape, std::uint32_t g);

}  // namespace dgscheme
