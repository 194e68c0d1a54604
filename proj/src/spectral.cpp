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
#include "hyperoct/spectral.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hyperoct/error.hpp"

namespace hyperoct {

DoublePartition::DoublePartition(std::vector<int> l, std::vector<int> lb)
    : lambda(std::move(l)), lambda_bar(std::move(lb)) {
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  std::sort(lambda_bar.begin(), lambda_bar.end(), std::greater<>());
}

int DoublePartition::size() const {
  int s = 0;
  for (int p : lambda) s += p;
  for (int p : lambda_bar) s += p;
  return s;
}

static std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string format_double_partition(const DoublePartition& dp) {
  return join_ints(dp.lambda) + "|" + join_ints(dp.lambda_bar);
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<DoublePartition> double_partitions(int n) {
  std::vector<DoublePartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& l : partitions(k))
      for (const auto& lb : partitions(n - k)) out.emplace_back(l, lb);
  return out;
}

std::string format_set_composition(const SetComposition& b) {
  std::string s;
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    if (i) s += "|";
    for (std::size_t j = 0; j < b.blocks[i].size(); ++j) {
      if (j) s += " ";
      const auto& e = b.blocks[i][j];
      s += std::to_string(e.barred ? -e.index : e.index);
    }
  }
  return s;
}

std::vector<SetComposition> compatible_set_compositions(const DoublePartition& dp, const std::vector<int>& dplus) {
  int total = 0;
  for (int d : dplus) total += d;
  if (total != dp.size())
    throw SizeMismatch("double partition of " + std::to_string(dp.size()) + " against composition of " +
                       std::to_string(total));
  std::vector<std::pair<PartIndex, int>> elems;
  for (std::size_t j = 0; j < dp.lambda.size(); ++j) elems.push_back({{static_cast<int>(j) + 1, false}, dp.lambda[j]});
  for (std::size_t j = 0; j < dp.lambda_bar.size(); ++j)
    elems.push_back({{static_cast<int>(j) + 1, true}, dp.lambda_bar[j]});

  std::vector<SetComposition> out;
  std::vector<int> room = dplus;
  SetComposition cur;
  cur.blocks.assign(dplus.size(), {});
  auto rec = [&](auto&& self, std::size_t e) -> void {
    if (e == elems.size()) {
      if (std::all_of(room.begin(), room.end(), [](int r) { return r == 0; })) {
        SetComposition c = cur;
        for (auto& blk : c.blocks) std::sort(blk.begin(), blk.end());
        out.push_back(std::move(c));
      }
      return;
    }
    for (std::size_t i = 0; i < room.size(); ++i) {
      if (room[i] < elems[e].second) continue;
      room[i] -= elems[e].second;
      cur.blocks[i].push_back(elems[e].first);
      self(self, e + 1);
      cur.blocks[i].pop_back();
      room[i] += elems[e].second;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Integer beta(const DoublePartition& dp, const DecoratedComposition& d) {
  Integer b = 0;
  for (const auto& sc : compatible_set_compositions(dp, d.plus())) {
    int barred = 0;
    for (std::size_t i = 0; i < sc.blocks.size(); ++i) {
      if (!d[i].decorated()) continue;
      for (const auto& e : sc.blocks[i]) barred += e.barred ? 1 : 0;
    }
    b += barred % 2 == 0 ? 1 : -1;
  }
  return b;
}

std::vector<std::pair<DoublePartition, Rational>> operator_eigenvalues(const DescentOperator& t) {
  std::vector<std::pair<DoublePartition, Rational>> out;
  for (const auto& dp : double_partitions(t.degree())) {
    Rational v = 0;
    for (const auto& [d, c] : t.terms()) v += c * Rational(beta(dp, d));
    out.emplace_back(dp, v);
  }
  return out;
}

static Integer multiset_count(const std::vector<int>& parts, const std::vector<long>& b) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  Integer r = 1;
  for (const auto& [i, m] : mult) {
    const long bi = i - 1 < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(i - 1)] : 0;
    r *= bi == 0 ? Integer(0) : binomial(bi + m - 1, m);
  }
  return r;
}

std::vector<std::pair<DoublePartition, Integer>> multiplicity_genfun(const std::vector<long>& b,
                                                                     const std::vector<long>& b_bar, int n) {
  std::vector<std::pair<DoublePartition, Integer>> out;
  for (const auto& dp : double_partitions(n))
    out.emplace_back(dp, multiset_count(dp.lambda, b) * multiset_count(dp.lambda_bar, b_bar));
  return out;
}

std::vector<SpectrumEntry> aggregate_spectrum(const std::vector<SpectrumEntry>& entries) {
  std::map<Rational, Integer, std::greater<>> acc;
  for (const auto& e : entries) acc[e.eigenvalue] += e.multiplicity;
  std::vector<SpectrumEntry> out;
  for (const auto& [v, m] : acc)
    if (m != 0) out.push_back({v, m});
  return out;
}

std::vector<SpectrumEntry> riffle_spectrum(int a, Sign sign, Involution /*flavor*/, const std::vector<long>& b,
                                           const std::vector<long>& b_bar, int n) {
  auto bi = [](const std::vector<long>& v, int i) { return i - 1 < static_cast<int>(v.size()) ? v[i - 1] : 0L; };
  BiSeries inv = biseries_one(n);
  Series neg_plus = series_one(n), neg_minus = series_one(n);
  for (int i = 1; i <= n; ++i) {
    inv = biseries_mul(inv, biseries_inverse_power_xy(i, bi(b, i), n), n);
    neg_plus = series_mul(neg_plus, series_inverse_power(i, bi(b_bar, i), +1, n), n);
    neg_minus = series_mul(neg_minus, series_inverse_power(i, bi(b_bar, i), -1, n), n);
  }
  std::vector<SpectrumEntry> out;
  // dim H_n: set x = 1 in inv, times neg_plus
  Series inv_at_one(static_cast<std::size_t>(n) + 1, 0);
  for (int l = 0; l <= n; ++l)
    for (int j = 0; j <= n; ++j) inv_at_one[j] += inv[l][j];
  const Integer dim = series_mul(inv_at_one, neg_plus, n)[n];

  if (a % 2 == 0) {
    Integer used = 0;
    for (int l = 0; l <= n; ++l) {
      out.push_back({rational_pow(a, l), inv[l][n]});
      used += inv[l][n];
    }
    out.push_back({0, dim - used});
  } else if (sign == Sign::plus) {
    const BiSeries f = biseries_mul(inv, biseries_from_y(neg_plus, n), n);
    for (int l = 0; l <= n; ++l) out.push_back({rational_pow(a, l), f[l][n]});
  } else {
    // even / odd number of negating factors
    Series even(static_cast<std::size_t>(n) + 1), odd(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      even[j] = (neg_plus[j] + neg_minus[j]) / 2;
      odd[j] = (neg_plus[j] - neg_minus[j]) / 2;
    }
    const BiSeries fe = biseries_mul(inv, biseries_from_y(even, n), n);
    const BiSeries fo = biseries_mul(inv, biseries_from_y(odd, n), n);
    for (int l = 0; l <= n; ++l) {
      out.push_back({rational_pow(a, l), fe[l][n]});
      out.push_back({-rational_pow(a, l), fo[l][n]});
    }
  }
  return aggregate_spectrum(out);
}

Integer stirling_c(int n, int k) {
  if (k < 0 || k > n) return 0;
  return rising_product(0, 1, n)[k];
}

Integer hyperoct_stirling(int n, int k, int k_bar) {
  if (k < 0 || k_bar < 0 || k + k_bar > n) return 0;
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n - k - k_bar));
  return pow2 * stirling_c(n, k + k_bar) * binomial(k + k_bar, k);
}

Integer hyperoct_stirling_recursive(int n, int k, int k_bar) {
  if (n < 0 || k < 0 || k_bar < 0) return 0;
  // table[m][i][j] for m <= n
  std::vector<std::vector<std::vector<Integer>>> t(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::vector<Integer>>(static_cast<std::size_t>(n) + 2, std::vector<Integer>(static_cast<std::size_t>(n) + 2, 0)));
  t[0][0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i <= m; ++i)
      for (int j = 0; i + j <= m; ++j) {
        Integer v = 2 * (m - 1) * t[m - 1][i][j];
        if (i > 0) v += t[m - 1][i - 1][j];
        if (j > 0) v += t[m - 1][i][j - 1];
        t[m][i][j] = v;
      }
  if (k + k_bar > n) return 0;
  return t[n][k][k_bar];
}

std::vector<SpectrumEntry> shuffle_multiplicities(int a, Sign sign, Involution /*flavor*/, int n) {
  std::vector<SpectrumEntry> out;
  if (a % 2 == 0) {
    const IntPolynomial p = rising_product(0, 2, n);
    for (int k = 0; k <= n; ++k) out.push_back({rational_pow(a, k - n), p[k]});
    out.push_back({0, (Integer(1) << n) * factorial(n) - double_factorial_odd(n)});
  } else if (sign == Sign::plus) {
    const IntPolynomial p = rising_product(1, 2, n);
    for (int k = 0; k <= n; ++k) out.push_back({rational_pow(a, k - n), p[k]});
  } else {
    const IntPolynomial tail = rising_product(1, 2, n - 1);
    const IntPolynomial pos = IntPolynomial::linear(n - 1) * tail;
    const IntPolynomial neg = tail * Integer(n);
    for (int k = 0; k <= n; ++k) {
      out.push_back({rational_pow(a, k - n), pos[k]});
      out.push_back({-rational_pow(a, k - n), neg[k]});
    }
  }
  return aggregate_spectrum(out);
}

}  // namespace hyperoct
