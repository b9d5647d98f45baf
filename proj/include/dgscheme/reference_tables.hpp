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

#include <string>
#include <vector>

#include "dgscheme/polynomial.hpp"

namespace dgscheme {

/// The four eigenmatrix pairs tabulated as polynomials in s = 2^{(m+1)/2}.
enum class ReferenceScheme { A, B, C, D };

struct ReferenceEigenmatrices {
  SymbolicMatrix P;
  SymbolicMatrix Q;
  std::vector<std::string> row_labels;  // dual classes of P
  std::vector<std::string> col_labels;  // classes of P
};

const ReferenceEigenmatrices& reference_eigenmatrices(ReferenceScheme which);

/// The 10x10 transform (N_0..N_9) = (R_0..R_9) T, entries in s.
const SymbolicMatrix& matrix_T_symbolic();
/// The closed-form table of g(N_i) on E_0..E_9, entries in q.
const SymbolicMatrix& character_table_symbolic();

/// Column grouping that turns the 5-class quotient scheme into the 4-class
/// fusion. Found by exhaustive fusion search and frozen here.
const std::vector<std::vector<int>>& frozen_quotient_fusion();

/// -1152 s^23 (s-1)^2 (s+1)^2.
Polynomial expected_det_T();

}  // namespace dgscheme
