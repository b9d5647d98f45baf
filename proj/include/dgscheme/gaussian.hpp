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

#include <cstdint>
#include <ostream>

namespace dgscheme {

/// Exact a + bi with arbitrary-precision components.
struct GaussianInteger {
  mpz_class re = 0;
  mpz_class im = 0;

  GaussianInteger() = default;
  GaussianInteger(mpz_class r, mpz_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianInteger(long r, long i = 0) : re(r), im(i) {}

  /// i^k for k taken mod 4.
  static GaussianInteger i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  bool is_real() const { return im == 0; }
  GaussianInteger conj() const { return {re, -im}; }
  mpz_class norm() const { return re * re + im * im; }

  GaussianInteger& operator+=(const GaussianInteger& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInteger& operator-=(const GaussianInteger& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  /// Adds i^k in place.
  void add_i_pow(int k) {
    switch (k & 3) {
      case 0: ++re; break;
      case 1: ++im; break;
      case 2: --re; break;
      default: --im; break;
    }
  }

  friend GaussianInteger operator+(GaussianInteger a, const GaussianInteger& b) { return a += b; }
  friend GaussianInteger operator-(GaussianInteger a, const GaussianInteger& b) { return a -= b; }
  friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re, -a.im}; }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInteger operator*(const GaussianInteger& a, const mpz_class& k) { return {a.re * k, a.im * k}; }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) { return a.re == b.re && a.im == b.im; }

  GaussianInteger pow(unsigned e) const {
    GaussianInteger r{1, 0}, b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) {
    return os << z.re << (z.im < 0 ? "-" : "+") << abs(z.im) << "i";
  }
};

/// Fixed-width Gaussian integer used inside the transform kernels. Callers
/// bound the input l1-norm so that no intermediate can overflow.
struct Gauss64 {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend bool operator==(Gauss64, Gauss64) = default;
};

}  // namespace dgscheme
