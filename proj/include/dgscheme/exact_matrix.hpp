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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dgscheme {

/// Dense matrix of arbitrary-precision rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static ExactMatrix identity(std::size_t n, const mpq_class& scale = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<mpq_class> row(std::size_t r) const;
  ExactMatrix transpose() const;
  ExactMatrix scaled(const mpq_class& k) const;
  ExactMatrix permute_rows(const std::vector<std::size_t>& order) const;
  ExactMatrix permute_cols(const std::vector<std::size_t>& order) const;

  /// Inverse by Gauss-Jordan elimination; nullopt when singular.
  std::optional<ExactMatrix> inverse() const;
  mpq_class determinant() const;
  bool is_integral() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  /// Rows as comma-separated exact values.
  std::string to_csv() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

}  // namespace dgscheme
