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

#include "dgscheme/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace dgscheme {

ExactMatrix ExactMatrix::identity(std::size_t n, const mpq_class& scale) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = scale;
  return m;
}

std::vector<mpq_class> ExactMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::scaled(const mpq_class& k) const {
  ExactMatrix s = *this;
  for (auto& v : s.data_) v *= k;
  return s;
}

ExactMatrix ExactMatrix::permute_rows(const std::vector<std::size_t>& order) const {
  ExactMatrix p(order.size(), cols_);
  for (std::size_t r = 0; r < order.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) p(r, c) = (*this)(order[r], c);
  return p;
}

ExactMatrix ExactMatrix::permute_cols(const std::vector<std::size_t>& order) const {
  ExactMatrix p(rows_, order.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < order.size(); ++c) p(r, c) = (*this)(r, order[c]);
  return p;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (!square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix a = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    }
    const mpq_class p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const mpq_class f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

mpq_class ExactMatrix::determinant() const {
  if (!square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix a = *this;
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const mpq_class f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

bool ExactMatrix::is_integral() const {
  for (const auto& v : data_)
    if (v.get_den() != 1) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string ExactMatrix::to_csv() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace dgscheme
