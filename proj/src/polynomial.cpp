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
#include "hyperoct/polynomial.hpp"

#include <algorithm>

namespace hyperoct {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& c) { return IntPolynomial({c, 1}); }

Integer IntPolynomial::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& y) {
  if (y.c_.size() > c_.size()) c_.resize(y.c_.size(), 0);
  for (std::size_t i = 0; i < y.c_.size(); ++i) c_[i] += y.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& y) {
  if (y.c_.size() > c_.size()) c_.resize(y.c_.size(), 0);
  for (std::size_t i = 0; i < y.c_.size(); ++i) c_[i] -= y.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.c_.empty() || y.c_.empty()) return {};
  std::vector<Integer> out(x.c_.size() + y.c_.size() - 1, 0);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(IntPolynomial x, const Integer& k) {
  for (auto& c : x.c_) c *= k;
  x.trim();
  return x;
}

IntPolynomial IntPolynomial::truncated(int max_degree) const {
  std::vector<Integer> v(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), max_degree + 1));
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Integer a = abs(c);
    if (a != 1 || k == 0) s += a.get_str();
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

IntPolynomial rising_product(long start, long step, int count) {
  IntPolynomial p({1});
  for (int i = 0; i < count; ++i) p = p * IntPolynomial::linear(Integer(start + step * i));
  return p;
}

Series series_one(int n) {
  Series s(static_cast<std::size_t>(n) + 1, 0);
  s[0] = 1;
  return s;
}

Series series_mul(const Series& x, const Series& y, int n) {
  Series out(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n && i < static_cast<int>(x.size()); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= n && j < static_cast<int>(y.size()); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

Series series_inverse_power(int i, long b, int s, int n) {
  // Σ_m binom(b+m-1, m) s^m y^{im}
  Series out(static_cast<std::size_t>(n) + 1, 0);
  for (int m = 0; i * m <= n; ++m) {
    Integer c = b == 0 ? Integer(m == 0 ? 1 : 0) : binomial(b + m - 1, m);
    if (s < 0 && m % 2 == 1) c = -c;
    out[static_cast<std::size_t>(i * m)] += c;
  }
  return out;
}

BiSeries biseries_one(int n) {
  BiSeries p(static_cast<std::size_t>(n) + 1, std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
  p[0][0] = 1;
  return p;
}

BiSeries biseries_mul(const BiSeries& p, const BiSeries& q, int n) {
  BiSeries out(static_cast<std::size_t>(n) + 1, std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      if (p[a][b] == 0) continue;
      for (int c = 0; a + c <= n; ++c)
        for (int d = 0; b + d <= n; ++d) out[a + c][b + d] += p[a][b] * q[c][d];
    }
  return out;
}

BiSeries biseries_from_y(const Series& s, int n) {
  BiSeries p(static_cast<std::size_t>(n) + 1, std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
  for (int j = 0; j <= n && j < static_cast<int>(s.size()); ++j) p[0][j] = s[j];
  return p;
}

BiSeries biseries_inverse_power_xy(int i, long b, int n) {
  BiSeries p(static_cast<std::size_t>(n) + 1, std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
  for (int m = 0; i * m <= n && m <= n; ++m)
    p[m][i * m] = b == 0 ? Integer(m == 0 ? 1 : 0) : binomial(b + m - 1, m);
  return p;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer double_factorial_odd(long n) {
  Integer r = 1;
  for (long i = 1; i <= n; ++i) r *= 2 * i - 1;
  return r;
}

}  // namespace hyperoct
