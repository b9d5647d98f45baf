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

#include "dgscheme/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dgscheme {

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const mpq_class& c) { return Polynomial({c}); }

Polynomial Polynomial::variable() { return Polynomial({0, 1}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Polynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<mpq_class> c = a.c_;
  for (auto& v : c) v = -v;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& v = c_[k];
    if (v == 0) continue;
    if (!first) os << (v < 0 ? "-" : "+");
    else if (v < 0) os << "-";
    const mpq_class a = abs(v);
    if (k == 0 || a != 1) os << a.get_str() << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := integer | var | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view s, char var) : s_(s), var_(var) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("polynomial parse error (") + what + ") in: " + std::string(s_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else return p;
    }
  }
  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        const Polynomial d = unary();
        if (d.degree() != 0) fail("division by a non-constant");
        p = p * Polynomial::constant(1 / d.coefficients()[0]);
      } else {
        return p;
      }
    }
  }
  Polynomial unary() {
    if (eat('-')) return -unary();
    return power();
  }
  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      const mpz_class e = integer();
      Polynomial r = Polynomial::constant(1);
      for (mpz_class k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }
  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == var_) {
      ++pos_;
      return Polynomial::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(mpq_class(integer()));
    fail("unexpected character");
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, char var) { return Parser(text, var).run(); }

SymbolicMatrix::SymbolicMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) throw std::invalid_argument("symbolic matrix shape mismatch");
}

SymbolicMatrix SymbolicMatrix::parse(const std::vector<std::vector<std::string_view>>& rows, char var) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<Polynomial> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged symbolic matrix");
    for (auto cell : row) e.push_back(Polynomial::parse(cell, var));
  }
  return SymbolicMatrix(r, c, std::move(e));
}

ExactMatrix SymbolicMatrix::evaluate(const mpq_class& x) const {
  ExactMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(x);
  return m;
}

}  // namespace dgscheme
