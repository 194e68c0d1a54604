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
#include "hyperoct/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "hyperoct/error.hpp"

namespace hyperoct {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

static std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &out))
    throw std::overflow_error("int64 overflow in matrix product");
  return out;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw SizeMismatch("matrix product shapes");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const std::int64_t a = x(i, k);
      if (a == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y(k, j) != 0) z(i, j) = checked_mul_add(z(i, j), a, y(k, j));
    }
  return z;
}

IntMatrix shift_diagonal(const IntMatrix& x, std::int64_t c) {
  IntMatrix y = x;
  for (int i = 0; i < std::min(x.rows, x.cols); ++i) y(i, i) -= c;
  return y;
}

std::int64_t max_row_norm(const IntMatrix& x) {
  std::int64_t best = 0;
  for (int i = 0; i < x.rows; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < x.cols; ++j) s += x(i, j) < 0 ? -x(i, j) : x(i, j);
    best = std::max(best, s);
  }
  return best;
}

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p % 2 == 0 || p >= (u64(1) << 62)) throw std::invalid_argument("PrimeField needs an odd prime < 2^62");
  u64 inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  pinv_ = ~inv + 1;
  const u64 r = static_cast<u64>((u128(1) << 64) % p);
  one_ = r;
  r2_ = static_cast<u64>((u128(r) * r) % p);
}

u64 PrimeField::mul(u64 a, u64 b) const {
  const u128 t = u128(a) * b;
  const u64 m = static_cast<u64>(t) * pinv_;
  u64 r = static_cast<u64>((t + u128(m) * p_) >> 64);
  return r >= p_ ? r - p_ : r;
}

u64 PrimeField::from_int(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return mul(static_cast<u64>(r), r2_);
}

u64 PrimeField::from_integer(const Integer& x) const {
  Integer r = x % Integer(std::to_string(p_));
  if (r < 0) r += Integer(std::to_string(p_));
  return mul(std::stoull(r.get_str()), r2_);
}

u64 PrimeField::to_u64(u64 m) const { return mul(m, 1); }

u64 PrimeField::inv(u64 a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  u64 e = p_ - 2, base = a, acc = one_;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<u64> large_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> lock(mu);
  Integer z = Integer(1) << 61;
  if (!cache.empty()) z = Integer(std::to_string(cache.back()));
  while (cache.size() < count) {
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    cache.push_back(std::stoull(z.get_str()));
  }
  return std::vector<u64>(cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count));
}

std::vector<u64> charpoly_mod_p(const IntMatrix& a, u64 p) {
  if (a.rows != a.cols) throw SizeMismatch("charpoly needs a square matrix");
  const int n = a.rows;
  const PrimeField F(p);
  std::vector<u64> h(a.data.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = F.from_int(a.data[i]);
  auto H = [&](int i, int j) -> u64& { return h[static_cast<std::size_t>(i) * n + j]; };

  // reduce to upper Hessenberg form by similarity
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (H(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(H(piv, c), H(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(H(r, piv), H(r, j + 1));
    }
    const u64 inv = F.inv(H(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      const u64 u = F.mul(H(i, j), inv);
      if (u == 0) continue;
      for (int c = j; c < n; ++c) H(i, c) = F.sub(H(i, c), F.mul(u, H(j + 1, c)));
      for (int r = 0; r < n; ++r) H(r, j + 1) = F.add(H(r, j + 1), F.mul(u, H(r, i)));
    }
  }

  // p_m = (x - h_mm) p_{m-1} - Σ_i h_{i,m} (Π h_{j,j-1}) p_{i-1}
  std::vector<std::vector<u64>> P(static_cast<std::size_t>(n) + 1);
  P[0] = {F.one()};
  for (int m = 1; m <= n; ++m) {
    std::vector<u64> cur(static_cast<std::size_t>(m) + 1, 0);
    const auto& prev = P[m - 1];
    const u64 d = H(m - 1, m - 1);
    for (int k = 0; k < m; ++k) {
      cur[k + 1] = F.add(cur[k + 1], prev[k]);
      cur[k] = F.sub(cur[k], F.mul(d, prev[k]));
    }
    u64 t = F.one();
    for (int i = m - 1; i >= 1; --i) {
      t = F.mul(t, H(i, i - 1));
      if (t == 0) break;
      const u64 c = F.mul(H(i - 1, m - 1), t);
      if (c == 0) continue;
      const auto& q = P[i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = F.sub(cur[k], F.mul(c, q[k]));
    }
    P[m] = std::move(cur);
  }
  std::vector<u64> out(P[n].size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = F.to_u64(P[n][k]);
  return out;
}

int rank_mod_p(const IntMatrix& a, u64 p) {
  const PrimeField F(p);
  const int r = a.rows, c = a.cols;
  std::vector<u64> m(a.data.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = F.from_int(a.data[i]);
  auto M = [&](int i, int j) -> u64& { return m[static_cast<std::size_t>(i) * c + j]; };
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (M(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < c; ++j) std::swap(M(piv, j), M(rank, j));
    const u64 inv = F.inv(M(rank, col));
    for (int i = rank + 1; i < r; ++i) {
      const u64 u = F.mul(M(i, col), inv);
      if (u == 0) continue;
      for (int j = col; j < c; ++j) M(i, j) = F.sub(M(i, j), F.mul(u, M(rank, j)));
    }
    ++rank;
  }
  return rank;
}

Integer charpoly_coefficient_bound(const IntMatrix& a) {
  Integer b;
  mpz_pow_ui(b.get_mpz_t(), Integer(1 + max_row_norm(a)).get_mpz_t(), static_cast<unsigned long>(a.rows));
  return b;
}

std::size_t primes_needed(const Integer& bound) {
  const Integer target = 2 * bound;
  Integer prod = 1;
  std::size_t k = 0;
  while (prod <= target) {
    ++k;
    prod *= Integer(std::to_string(large_primes(k).back()));
  }
  return k;
}

Integer crt_lift(const std::vector<u64>& residues, const std::vector<u64>& primes) {
  Integer x = 0, M = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Integer p(std::to_string(primes[i]));
    Integer r(std::to_string(residues[i]));
    Integer diff = (r - x) % p;
    if (diff < 0) diff += p;
    Integer minv;
    mpz_invert(minv.get_mpz_t(), Integer(M % p).get_mpz_t(), p.get_mpz_t());
    Integer t = (diff * minv) % p;
    x += M * t;
    M *= p;
  }
  if (2 * x > M) x -= M;
  return x;
}

IntPolynomial charpoly_rational(const IntMatrix& a) {
  if (a.rows != a.cols) throw SizeMismatch("charpoly needs a square matrix");
  const int n = a.rows;
  std::vector<Rational> h(a.data.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = Rational(static_cast<long>(a.data[i]));
  auto H = [&](int i, int j) -> Rational& { return h[static_cast<std::size_t>(i) * n + j]; };
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (H(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(H(piv, c), H(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(H(r, piv), H(r, j + 1));
    }
    const Rational inv = 1 / H(j + 1, j);
    for (int i = j + 2; i < n; ++i) {
      const Rational u = H(i, j) * inv;
      if (u == 0) continue;
      for (int c = j; c < n; ++c) H(i, c) -= u * H(j + 1, c);
      for (int r = 0; r < n; ++r) H(r, j + 1) += u * H(r, i);
    }
  }
  std::vector<std::vector<Rational>> P(static_cast<std::size_t>(n) + 1);
  P[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Rational> cur(static_cast<std::size_t>(m) + 1, 0);
    const auto& prev = P[m - 1];
    for (int k = 0; k < m; ++k) {
      cur[k + 1] += prev[k];
      cur[k] -= H(m - 1, m - 1) * prev[k];
    }
    Rational t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t *= H(i, i - 1);
      if (t == 0) break;
      const Rational c = H(i - 1, m - 1) * t;
      if (c == 0) continue;
      for (std::size_t k = 0; k < P[i - 1].size(); ++k) cur[k] -= c * P[i - 1][k];
    }
    P[m] = std::move(cur);
  }
  std::vector<Integer> coeffs;
  for (const auto& q : P[n]) {
    if (q.get_den() != 1) throw std::logic_error("non-integral characteristic polynomial");
    coeffs.push_back(q.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

int rank_exact(const IntMatrix& a) {
  // fraction-free Bareiss elimination
  const int r = a.rows, c = a.cols;
  std::vector<Integer> m(a.data.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = Integer(static_cast<long>(a.data[i]));
  auto M = [&](int i, int j) -> Integer& { return m[static_cast<std::size_t>(i) * c + j]; };
  Integer prev = 1;
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (M(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < c; ++j) std::swap(M(piv, j), M(rank, j));
    for (int i = rank + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j) {
        M(i, j) = M(rank, col) * M(i, j) - M(i, col) * M(rank, j);
        mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      M(i, col) = 0;
    }
    prev = M(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace hyperoct
