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

// Hand transcription. Each cell is a polynomial in s (or q for the
// character table); the P*Q and row-0 checks in the tests catch typos.

#include "dgscheme/reference_tables.hpp"

#include <string_view>

namespace dgscheme {
namespace {

const std::vector<std::vector<std::string_view>> kMatrixT = {
    {"1", "1", "s^2", "s^2", "s^4", "s^4", "s^6", "s^6", "s^8", "s^8"},
    {"1", "0", "2*s", "0", "4*s^2", "0", "8*s^3", "0", "16*s^4", "0"},
    {"1", "1", "s", "s", "s^2", "s^2", "s^3", "s^3", "s^4", "s^4"},
    {"1", "0", "s", "0", "s^2", "0", "s^3", "0", "s^4", "0"},
    {"1", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "0", "-s", "0", "s^2", "0", "-s^3", "0", "s^4", "0"},
    {"1", "1", "-s", "-s", "s^2", "s^2", "-s^3", "-s^3", "s^4", "s^4"},
    {"1", "0", "-2*s", "0", "4*s^2", "0", "-8*s^3", "0", "16*s^4", "0"},
    {"1", "1", "-s^2", "-s^2", "s^4", "s^4", "-s^6", "-s^6", "s^8", "s^8"},
};

const std::vector<std::vector<std::string_view>> kTableFrakT = {
    {"4*q^3", "4*q^2", "0", "0", "8*q^4", "8*q^3", "0", "0", "16*q^4*(3*q-1)", "16*q^3*(3*q-1)"},
    {"0", "4*q^2", "0", "0", "0", "8*q^3", "0", "0", "0", "16*q^3*(3*q-1)"},
    {"0", "0", "4*q^3", "4*q^2", "0", "0", "8*q^3*(3*q-1)", "8*q^2*(3*q-1)", "0", "0"},
    {"0", "0", "0", "4*q^2", "0", "0", "0", "8*q^2*(3*q-1)", "0", "0"},
    {"0", "0", "0", "0", "8*q^3", "8*q^2", "0", "0", "32*q^3*(3*q-2)", "32*q^4"},
    {"0", "0", "0", "0", "0", "8*q^2", "0", "0", "32*q^3*(q-2)", "32*q^4"},
    {"0", "0", "0", "0", "0", "0", "24*q^3", "8*q^2*(2*q-1)", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "8*q^2*(2*q-1)", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "48*q^4", "16*q^3*(2*q-1)"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "16*q^3*(2*q-1)"},
};

const std::vector<std::vector<std::string_view>> kPA = {
    {"1", "1/24*s^6-1/8*s^4+1/12*s^2", "1/2*s^4-4/3*s^2+1/12*s^6", "-2+2*s^2", "1/4*s^6-3/4*s^4+1/2*s^2", "1/2*s^4-4/3*s^2+1/12*s^6", "1/24*s^6-1/8*s^4+1/12*s^2", "1"},
    {"1", "-1/12*s^4+1/12*s^2", "1/3*s^4-4/3*s^2", "-2+2*s^2", "-1/2*s^4+1/2*s^2", "1/3*s^4-4/3*s^2", "-1/12*s^4+1/12*s^2", "1"},
    {"1", "1/12*s^5-1/4*s^3+1/6*s", "1/2*s^3-4/3*s+1/12*s^5", "0", "0", "-1/12*s^5+4/3*s-1/2*s^3", "-1/12*s^5+1/4*s^3-1/6*s", "-1"},
    {"1", "-1/6*s^3+1/6*s", "1/3*s^3-4/3*s", "0", "0", "-1/3*s^3+4/3*s", "1/6*s^3-1/6*s", "-1"},
    {"1", "1/8*s^4-1/4*s^2", "0", "-2", "-1/4*s^4+1/2*s^2", "0", "1/8*s^4-1/4*s^2", "1"},
    {"1", "-1/4*s^2", "0", "-2", "1/2*s^2", "0", "-1/4*s^2", "1"},
    {"1", "1/12*s^3+1/6*s", "-4/3*s-1/6*s^3", "0", "0", "1/6*s^3+4/3*s", "-1/12*s^3-1/6*s", "-1"},
    {"1", "1/24*s^4+1/12*s^2", "-4/3*s^2-1/6*s^4", "-2+2*s^2", "1/4*s^4+1/2*s^2", "-4/3*s^2-1/6*s^4", "1/24*s^4+1/12*s^2", "1"},
};

const std::vector<std::vector<std::string_view>> kQA = {
    {"1", "1/2*s^2-1", "s^2", "1/2*(s^2-2)*s^2", "1/2*s^2*(s^2-1)", "1/4*s^2*(s^4-3*s^2+2)", "1/6*s^2*(s^4-3*s^2+2)", "1/6*s^4-1/2*s^2+1/3"},
    {"1", "-1", "2*s", "-2*s", "3/2*s^2", "-3/2*s^2", "1/3*s*(s^2+2)", "1/6*s^2+1/3"},
    {"1", "1/2*s^2-1", "s", "1/2*(s^2-2)*s", "0", "0", "-1/3*s*(s^2-1)", "1/3-1/3*s^2"},
    {"1", "-1", "s", "-s", "0", "-1/4*(s^2-2)*s^2", "0", "1/6*s^4-1/2*s^2+1/3"},
    {"1", "1/2*s^2-1", "0", "0", "-1/2*s^2", "1/2*s^2", "0", "1/6*s^2+1/3"},
    {"1", "-1", "0", "0", "-1/2*s^2", "0", "1/3*s*(s^2-1)", "1/3-1/3*s^2"},
    {"1", "-1", "-s", "s", "0", "-3/2*s^2", "-1/3*s*(s^2+2)", "1/6*s^2+1/3"},
    {"1", "1/2*s^2-1", "-s", "-1/2*(s^2-2)*s", "0", "1/4*s^2*(s^4-3*s^2+2)", "-1/6*s^2*(s^4-3*s^2+2)", "1/6*s^4-1/2*s^2+1/3"},
};

const std::vector<std::vector<std::string_view>> kPB = {
    {"1", "1/24*s^6-1/8*s^4+1/12*s^2", "1/2*s^4-s^2", "1/12*s^6-1/3*s^2", "-2+2*s^2", "1/4*s^6-3/4*s^4+1/2*s^2", "1/12*s^6-1/3*s^2", "1/2*s^4-s^2", "1/24*s^6-1/8*s^4+1/12*s^2", "1"},
    {"1", "-1/12*s^4+1/12*s^2", "1/2*s^4-s^2", "-1/6*s^4-1/3*s^2", "-2+2*s^2", "-1/2*s^4+1/2*s^2", "-1/6*s^4-1/3*s^2", "1/2*s^4-s^2", "-1/12*s^4+1/12*s^2", "1"},
    {"1", "1/12*s^5-1/4*s^3+1/6*s", "1/2*s^3-s", "1/12*s^5-1/3*s", "0", "0", "-1/12*s^5+1/3*s", "-1/2*s^3+s", "-1/12*s^5+1/4*s^3-1/6*s", "-1"},
    {"1", "-1/6*s^3+1/6*s", "1/2*s^3-s", "-1/6*s^3-1/3*s", "0", "0", "1/6*s^3+1/3*s", "-1/2*s^3+s", "1/6*s^3-1/6*s", "-1"},
    {"1", "1/8*s^4-1/4*s^2", "0", "0", "-2", "-1/4*s^4+1/2*s^2", "0", "0", "1/8*s^4-1/4*s^2", "1"},
    {"1", "-1/4*s^2", "0", "0", "-2", "1/2*s^2", "0", "0", "-1/4*s^2", "1"},
    {"1", "1/12*s^3+1/6*s", "-s", "-1/6*s^3-1/3*s", "0", "0", "1/6*s^3+1/3*s", "s", "-1/12*s^3-1/6*s", "-1"},
    {"1", "-1/6*s^3+1/6*s", "-s", "-1/3*s+1/3*s^3", "0", "0", "1/3*s-1/3*s^3", "s", "1/6*s^3-1/6*s", "-1"},
    {"1", "1/24*s^4+1/12*s^2", "-s^2", "-1/6*s^4-1/3*s^2", "-2+2*s^2", "1/4*s^4+1/2*s^2", "-1/6*s^4-1/3*s^2", "-s^2", "1/24*s^4+1/12*s^2", "1"},
    {"1", "-1/12*s^4+1/12*s^2", "-s^2", "-1/3*s^2+1/3*s^4", "-2+2*s^2", "-1/2*s^4+1/2*s^2", "-1/3*s^2+1/3*s^4", "-s^2", "-1/12*s^4+1/12*s^2", "1"},
};

const std::vector<std::vector<std::string_view>> kQB = {
    {"1", "1/2*s^2-1", "s^2", "1/2*(s^2-2)*s^2", "1/2*s^2*(s^2-1)", "1/4*s^2*(s^4-3*s^2+2)", "1/6*s^2*(s^4-3*s^2+2)", "1/12*s^2*(s^4-4)", "1/6*s^4-1/2*s^2+1/3", "1/12*s^4-1/3"},
    {"1", "-1", "2*s", "-2*s", "3/2*s^2", "-3/2*s^2", "1/3*s*(s^2+2)", "-1/3*s*(s^2+2)", "1/6*s^2+1/3", "-1/6*s^2-1/3"},
    {"1", "1/2*s^2-1", "s", "1/2*(s^2-2)*s", "0", "0", "-1/3*s*(s^2-1)", "-1/6*s*(s^2+2)", "1/3-1/3*s^2", "-1/6*s^2-1/3"},
    {"1", "-1", "s", "-s", "0", "0", "-1/3*s*(s^2-1)", "1/3*s*(s^2-1)", "1/3-1/3*s^2", "-1/3+1/3*s^2"},
    {"1", "1/2*s^2-1", "0", "0", "-1/2*s^2", "-1/4*(s^2-2)*s^2", "0", "0", "1/6*s^4-1/2*s^2+1/3", "1/12*s^4-1/3"},
    {"1", "-1", "0", "0", "-1/2*s^2", "1/2*s^2", "0", "0", "1/6*s^2+1/3", "-1/6*s^2-1/3"},
    {"1", "-1", "-s", "s", "0", "0", "1/3*s*(s^2-1)", "-1/3*s*(s^2-1)", "1/3-1/3*s^2", "-1/3+1/3*s^2"},
    {"1", "1/2*s^2-1", "-s", "-1/2*(s^2-2)*s", "0", "0", "1/3*s*(s^2-1)", "1/6*s*(s^2+2)", "1/3-1/3*s^2", "-1/6*s^2-1/3"},
    {"1", "-1", "-2*s", "2*s", "3/2*s^2", "-3/2*s^2", "-1/3*s*(s^2+2)", "1/3*s*(s^2+2)", "1/6*s^2+1/3", "-1/6*s^2-1/3"},
    {"1", "1/2*s^2-1", "-s^2", "-1/2*(s^2-2)*s^2", "1/2*s^2*(s^2-1)", "1/4*s^2*(s^4-3*s^2+2)", "-1/6*s^2*(s^4-3*s^2+2)", "-1/12*s^2*(s^4-4)", "1/6*s^4-1/2*s^2+1/3", "1/12*s^4-1/3"},
};

const std::vector<std::vector<std::string_view>> kPC = {
    {"1", "1/24*s^6-1/8*s^4+1/12*s^2", "1/2*s^4-s^2", "1/12*s^6-1/3*s^2", "s^2-1", "1/8*s^6-3/8*s^4+1/4*s^2"},
    {"1", "-1/12*s^4+1/12*s^2", "1/2*s^4-s^2", "-1/6*s^4-1/3*s^2", "s^2-1", "-1/4*s^4+1/4*s^2"},
    {"1", "1/8*s^4-1/4*s^2", "0", "0", "-1", "-1/8*s^4+1/4*s^2"},
    {"1", "-1/4*s^2", "0", "0", "-1", "1/4*s^2"},
    {"1", "1/24*s^4+1/12*s^2", "-s^2", "-1/6*s^4-1/3*s^2", "s^2-1", "1/8*s^4+1/4*s^2"},
    {"1", "-1/12*s^4+1/12*s^2", "-s^2", "-1/3*s^2+1/3*s^4", "s^2-1", "-1/4*s^4+1/4*s^2"},
};

const std::vector<std::vector<std::string_view>> kQC = {
    {"1", "1/2*s^2-1", "1/2*s^2*(s^2-1)", "1/4*s^2*(s^4-3*s^2+2)", "1/6*s^4-1/2*s^2+1/3", "1/12*s^4-1/3"},
    {"1", "-1", "3/2*s^2", "-3/2*s^2", "1/6*s^2+1/3", "-1/6*s^2-1/3"},
    {"1", "1/2*s^2-1", "0", "0", "1/3-1/3*s^2", "-1/6*s^2-1/3"},
    {"1", "-1", "0", "0", "1/3-1/3*s^2", "-1/3+1/3*s^2"},
    {"1", "1/2*s^2-1", "-1/2*s^2", "-1/4*(s^2-2)*s^2", "1/6*s^4-1/2*s^2+1/3", "1/12*s^4-1/3"},
    {"1", "-1", "-1/2*s^2", "1/2*s^2", "1/6*s^2+1/3", "-1/6*s^2-1/3"},
};

const std::vector<std::vector<std::string_view>> kPD = {
    {"1", "1/24*s^6-1/8*s^4+1/12*s^2", "1/2*s^4-4/3*s^2+1/12*s^6", "s^2-1", "1/8*s^6-3/8*s^4+1/4*s^2"},
    {"1", "-1/12*s^4+1/12*s^2", "1/3*s^4-4/3*s^2", "s^2-1", "-1/4*s^4+1/4*s^2"},
    {"1", "1/8*s^4-1/4*s^2", "0", "-1", "-1/8*s^4+1/4*s^2"},
    {"1", "-1/4*s^2", "0", "-1", "1/4*s^2"},
    {"1", "1/24*s^4+1/12*s^2", "-4/3*s^2-1/6*s^4", "s^2-1", "1/8*s^4+1/4*s^2"},
};

const std::vector<std::vector<std::string_view>> kQD = {
    {"1", "1/2*s^2-4/3+1/12*s^4", "1/2*s^2*(s^2-1)", "1/4*s^2*(s^4-3*s^2+2)", "1/6*s^4-1/2*s^2+1/3"},
    {"1", "-4/3-1/6*s^2", "3/2*s^2", "-3/2*s^2", "1/6*s^2+1/3"},
    {"1", "1/3*s^2-4/3", "0", "0", "1/3-1/3*s^2"},
    {"1", "1/2*s^2-4/3+1/12*s^4", "-1/2*s^2", "-1/4*(s^2-2)*s^2", "1/6*s^4-1/2*s^2+1/3"},
    {"1", "-4/3-1/6*s^2", "-1/2*s^2", "1/2*s^2", "1/6*s^2+1/3"},
};
ReferenceEigenmatrices make(const std::vector<std::vector<std::string_view>>& p,
                            const std::vector<std::vector<std::string_view>>& q,
                            std::vector<std::string> rows, std::vector<std::string> cols) {
  return {SymbolicMatrix::parse(p, 's'), SymbolicMatrix::parse(q, 's'), std::move(rows), std::move(cols)};
}

}  // namespace

const ReferenceEigenmatrices& reference_eigenmatrices(ReferenceScheme which) {
  static const ReferenceEigenmatrices a =
      make(kPA, kQA, {"E0", "E1+E9", "E2", "E3+E7", "E4", "E5", "E6", "E8"},
           {"R0", "R1", "R2+R3", "R4", "R5", "R6+R7", "R8", "R9"});
  static const ReferenceEigenmatrices b =
      make(kPB, kQB, {"E0", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9"},
           {"R0", "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9"});
  static const ReferenceEigenmatrices c =
      make(kPC, kQC, {"E0", "E1", "E4", "E5", "E8", "E9"},
           {"R0+R9", "R1+R8", "R2+R7", "R3+R6", "R4", "R5"});
  static const ReferenceEigenmatrices d =
      make(kPD, kQD, {"E0", "E1+E9", "E4", "E5", "E8"},
           {"R0+R9", "R1+R8", "R2+R7+R3+R6", "R4", "R5"});
  switch (which) {
    case ReferenceScheme::A: return a;
    case ReferenceScheme::B: return b;
    case ReferenceScheme::C: return c;
    default: return d;
  }
}

const SymbolicMatrix& matrix_T_symbolic() {
  static const SymbolicMatrix t = SymbolicMatrix::parse(kMatrixT, 's');
  return t;
}

const SymbolicMatrix& character_table_symbolic() {
  static const SymbolicMatrix t = SymbolicMatrix::parse(kTableFrakT, 'q');
  return t;
}

const std::vector<std::vector<int>>& frozen_quotient_fusion() {
  // search result
  static const std::vector<std::vector<int>> g = {{0}, {1}, {2, 3}, {4}, {5}};
  return g;
}

Polynomial expected_det_T() {
  return Polynomial::parse("-1152*s^23*(s-1)^2*(s+1)^2");
}

}  // namespace dgscheme
