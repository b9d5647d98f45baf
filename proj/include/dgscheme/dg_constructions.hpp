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
#include <optional>
#include <string>
#include <vector>

#include "dgscheme/dg_group.hpp"
#include "dgscheme/exact_matrix.hpp"
#include "dgscheme/reference_tables.hpp"
#include "dgscheme/scheme.hpp"

namespace dgscheme {

/// R_0..R_9 from the value of S and whether b = 0. Throws std::logic_error
/// on a value of S outside {+-2q, +-2s, +-s, 0}.
Partition build_R_partition(const DgGroup& g);

/// E_0..E_9 materialised from their set-builder descriptions. Throws
/// std::logic_error if two sets overlap or their union misses an element.
Partition build_E_partition(const DgGroup& g);

enum class CodeRelations {
  kerdock4,  // on kerdock_shape(): weights 0, q - sqrt(q/2), q, q + sqrt(q/2), 2q
  seven,     // S_0..S_7
  nine,      // S_0, S_1, S'_21, S'_22, S_3, S_4, S'_51, S'_52, S_6, S_7
  lee_only,  // the seven Lee weights with no Kerdock split
};
/// Labels from the Lee weight of the literal codeword and Kerdock
/// membership. Throws std::logic_error on an unexpected weight.
Partition build_code_relations(const DgGroup& g, CodeRelations kind);

/// s = sqrt(2q) for odd m.
inline mpq_class s_value(int m) { return mpq_class(mpz_class(1) << ((m + 1) / 2)); }
inline mpq_class q_value(int m) { return mpq_class(mpz_class(1) << m); }

ExactMatrix matrix_T(int m);
/// Closed-form character table, rows E_0..E_9, columns N_0..N_9.
ExactMatrix frak_T(int m);
/// Reference P and Q evaluated at s.
ExactMatrix reference_P(ReferenceScheme which, int m);
ExactMatrix reference_Q(ReferenceScheme which, int m);

/// Everything derived from the ten-class partition at one m.
struct DgAnalysis {
  explicit DgAnalysis(int m, Exec exec = Exec::parallel);

  DgGroup group;
  Partition R;
  Partition E;
  DualResult dual;    // dual classes ordered as E_0..E_9 when they match
  bool dual_matches_E = false;
  Json dual_match_certificate;
  std::optional<ExactMatrix> Q;
  std::vector<std::uint32_t> representatives;  // one element of each E_j
};

/// Rows (g(N_i))_i at each E-representative by direct evaluation.
ExactMatrix n_table_direct(const DgAnalysis& a);
/// Rows (chi_g(R_j))_j at each E-representative, pairing evaluated directly.
ExactMatrix character_rows_direct(const DgAnalysis& a);

/// Gray image of the ten-class partition on the binary code (m = 3 only,
/// where the image is linear).
struct GrayImage {
  int dimension = 0;
  bool linear = false;
  std::optional<GroupShape> shape;  // Z2^dimension with pairing 2I
  Partition partition;
};
GrayImage gray_image(const DgGroup& g, const Partition& R);

/// Whether two eigenmatrices agree after some permutation of rows and of
/// columns 1.. (column 0 fixed).
bool equal_up_to_permutation(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace dgscheme
