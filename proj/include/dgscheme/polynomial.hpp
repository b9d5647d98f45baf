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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "dgscheme/exact_matrix.hpp"

namespace dgscheme {

/// Univariate polynomial with rational coefficients (index = power).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  static Polynomial constant(const mpq_class& c);
  static Polynomial variable();

  /// Parses expressions such as "1/24*s^6-1/8*s^4+1/12*s^2" or
  /// "1/2*(s^2-2)*s^2" in the named variable. Throws std::invalid_argument.
  static Polynomial parse(std::string_view text, char var = 's');

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  mpq_class evaluate(const mpq_class& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 's') const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Matrix of polynomial entries, evaluated exactly at a rational point.
class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);
  /// Builds from a row-major table of expression strings.
  static SymbolicMatrix parse(const std::vector<std::vector<std::string_view>>& rows, char var = 's');

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  ExactMatrix evaluate(const mpq_class& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> e_;
};

}  // namespace dgscheme
