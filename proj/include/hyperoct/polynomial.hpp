/* Copyright 2026 The hyperoct Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef HYPEROCT_POLYNOMIAL_HPP
#define HYPEROCT_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "hyperoct/rational.hpp"

namespace hyperoct {

// Dense univariate polynomial with big integer coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  static IntPolynomial monomial(int degree, const Integer& c = 1);
  // x + c
  static IntPolynomial linear(const Integer& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer operator[](int k) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& y);
  IntPolynomial& operator-=(const IntPolynomial& y);
  friend IntPolynomial operator+(IntPolynomial x, const IntPolynomial& y) { return x += y; }
  friend IntPolynomial operator-(IntPolynomial x, const IntPolynomial& y) { return x -= y; }
  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator*(IntPolynomial x, const Integer& k);
  friend bool operator==(const IntPolynomial& x, const IntPolynomial& y) { return x.c_ == y.c_; }

  IntPolynomial truncated(int max_degree) const;
  Integer eval(const Integer& x) const;
  std::string str() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Π_{i<count} (x + start + i*step)
IntPolynomial rising_product(long start, long step, int count);

// Power series in y truncated at y^n, coefficients as big integers.
using Series = std::vector<Integer>;
Series series_one(int n);
Series series_mul(const Series& x, const Series& y, int n);
// (1 - s*y^i)^(-b), truncated at y^n; s = ±1.
Series series_inverse_power(int i, long b, int s, int n);

// Bivariate series in (x, y) stored as [x-degree][y-degree], truncated at y^n and x^n.
using BiSeries = std::vector<std::vector<Integer>>;
BiSeries biseries_one(int n);
BiSeries biseries_mul(const BiSeries& p, const BiSeries& q, int n);
BiSeries biseries_from_y(const Series& s, int n);
// (1 - x*y^i)^(-b)
BiSeries biseries_inverse_power_xy(int i, long b, int n);

Integer binomial(long n, long k);
Integer factorial(long n);
// (2n)! / (2^n n!)
Integer double_factorial_odd(long n);

}  // namespace hyperoct

#endif
