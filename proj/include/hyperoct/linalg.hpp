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
#ifndef HYPEROCT_LINALG_HPP
#define HYPEROCT_LINALG_HPP

#include <cstdint>
#include <vector>

#include "hyperoct/polynomial.hpp"
#include "hyperoct/rational.hpp"

namespace hyperoct {

// Dense row-major int64 matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  std::int64_t& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  IntMatrix transposed() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
// x - c*I
IntMatrix shift_diagonal(const IntMatrix& x, std::int64_t c);
// Largest row 1-norm.
std::int64_t max_row_norm(const IntMatrix& x);

// Arithmetic modulo an odd prime below 2^62 in Montgomery form.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);
  std::uint64_t prime() const { return p_; }
  std::uint64_t from_int(std::int64_t x) const;
  std::uint64_t from_integer(const Integer& x) const;
  std::uint64_t to_u64(std::uint64_t m) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t one() const { return one_; }

 private:
  std::uint64_t p_, pinv_, r2_, one_;
};

// Distinct primes in (2^61, 2^62), deterministic.
std::vector<std::uint64_t> large_primes(std::size_t count);

// Coefficients c_0..c_N of det(xI - A) mod p, as plain residues.
std::vector<std::uint64_t> charpoly_mod_p(const IntMatrix& a, std::uint64_t p);
int rank_mod_p(const IntMatrix& a, std::uint64_t p);

// Bound on |coefficients| of det(xI - A): (1 + max row norm)^N.
Integer charpoly_coefficient_bound(const IntMatrix& a);
// Number of primes from large_primes whose product exceeds 2*bound.
std::size_t primes_needed(const Integer& bound);

// Symmetric-range CRT lift of residues r_i mod p_i.
Integer crt_lift(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& primes);

// Exact references.
IntPolynomial charpoly_rational(const IntMatrix& a);
int rank_exact(const IntMatrix& a);

}  // namespace hyperoct

#endif
