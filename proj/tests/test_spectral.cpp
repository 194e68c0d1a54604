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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hyperoct/lyndon.hpp"
#include "hyperoct/spectral.hpp"

using namespace hyperoct;

TEST_CASE("double partitions and set compositions") {
  CHECK(double_partitions(3).size() == 10);
  const DoublePartition dp({4, 2}, {2, 1, 1});
  std::set<std::string> got;
  for (const auto& b : compatible_set_compositions(dp, {5, 4, 1})) got.insert(format_set_composition(b));
  CHECK(got == std::set<std::string>{"1 -2|-1 2|-3", "1 -3|-1 2|-2", "-1 2 -2|1|-3", "-1 2 -3|1|-2"});
  CHECK(compatible_set_compositions(DoublePartition({1, 1}, {}), {1, 1}).size() == 2);
  CHECK_THROWS(compatible_set_compositions(dp, {5, 4}));
}

TEST_CASE("beta of the worked example vanishes") {
  CHECK(beta(DoublePartition({4, 2}, {2, 1, 1}), parse_composition("5b,4,1")) == 0);
}

TEST_CASE("beta of 1bar,n-1 counts ones") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& dp : double_partitions(n)) {
      const long ones = std::count(dp.lambda.begin(), dp.lambda.end(), 1);
      const long ones_bar = std::count(dp.lambda_bar.begin(), dp.lambda_bar.end(), 1);
      const auto d = parse_composition("1b," + std::to_string(n - 1));
      CHECK_MESSAGE(beta(dp, d) == Integer(ones - ones_bar), format_double_partition(dp));
    }
}

TEST_CASE("flip first pile operator eigenvalues") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& [dp, value] : operator_eigenvalues(riffle_operator(2, Sign::minus, Involution::tau_tilde, n))) {
      const Rational want = dp.lambda_bar.empty() ? rational_pow(2, static_cast<long>(dp.lambda.size())) : 0;
      CHECK(value == want);
    }
}

TEST_CASE("multiplicity generating function") {
  for (const auto& [dp, m] : multiplicity_genfun({1}, {}, 3)) {
    const bool all_ones = dp.lambda == std::vector<int>{1, 1, 1} && dp.lambda_bar.empty();
    CHECK(m == (all_ones ? 1 : 0));
  }
  // totals give the dimension of the degree-n part: (2N)^n words over N labels
  for (int N = 1; N <= 2; ++N)
    for (Involution f : {Involution::tau, Involution::tau_tilde}) {
      const auto [b, bb] = primitive_counts(N, 4, f);
      Integer total = 0;
      for (const auto& [dp, m] : multiplicity_genfun(b, bb, 4)) total += m;
      Integer want = 1;
      for (int i = 0; i < 4; ++i) want *= 2 * N;
      CHECK(total == want);
    }
}

TEST_CASE("riffle spectrum agrees with beta aggregation") {
  for (int a : {1, 2, 3})
    for (Sign s : {Sign::plus, Sign::minus})
      for (Involution f : {Involution::tau, Involution::tau_tilde}) {
        const int n = 3;
        const auto [b, bb] = primitive_counts(2, n, f);
        std::vector<SpectrumEntry> raw;
        const auto mult = multiplicity_genfun(b, bb, n);
        const auto vals = operator_eigenvalues(riffle_operator(a, s, f, n));
        std::map<DoublePartition, Rational> by_dp(vals.begin(), vals.end());
        for (const auto& [dp, m] : mult) raw.push_back({by_dp.at(dp), m});
        CHECK(aggregate_spectrum(raw) == riffle_spectrum(a, s, f, b, bb, n));
      }
}

TEST_CASE("type A Stirling numbers") {
  CHECK(stirling_c(3, 1) == 2);
  CHECK(stirling_c(3, 2) == 3);
  CHECK(stirling_c(3, 3) == 1);
  // left-to-right minima of permutations of 1..n
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::map<int, long> counts;
    do {
      int k = 0, lo = n + 1;
      for (int v : p)
        if (v < lo) lo = v, ++k;
      ++counts[k];
    } while (std::next_permutation(p.begin(), p.end()));
    for (int k = 1; k <= n; ++k) CHECK(stirling_c(n, k) == Integer(counts[k]));
  }
}

TEST_CASE("hyperoctahedral Stirling numbers") {
  CHECK(hyperoct_stirling(1, 1, 0) == 1);
  CHECK(hyperoct_stirling(1, 0, 1) == 1);
  CHECK(hyperoct_stirling(1, 0, 0) == 0);
  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    for (int k = 0; k <= n; ++k)
      for (int kb = 0; k + kb <= n; ++kb) {
        CHECK(hyperoct_stirling(n, k, kb) == hyperoct_stirling(n, kb, k));
        CHECK(hyperoct_stirling(n, k, kb) == hyperoct_stirling_recursive(n, k, kb));
        total += hyperoct_stirling(n, k, kb);
      }
    CHECK(total == (Integer(1) << n) * factorial(n));
  }
  // counts of signed permutations by invariant/negating Lyndon factors under the flip
  for (int n = 1; n <= 4; ++n) {
    std::map<std::pair<int, int>, long> counts;
    for (const auto& w : signed_permutations(n)) {
      const auto c = classify_factors(w, Involution::tau_tilde);
      ++counts[{static_cast<int>(c.invariant.size()), static_cast<int>(c.negating.size())}];
    }
    for (const auto& [kk, m] : counts) CHECK(hyperoct_stirling(n, kk.first, kk.second) == Integer(m));
  }
}

TEST_CASE("table multiplicities at n = 3") {
  auto mults = [](int a, Sign s) {
    std::map<Rational, Integer> out;
    for (const auto& e : shuffle_multiplicities(a, s, Involution::tau_tilde, 3)) out[e.eigenvalue] += e.multiplicity;
    return out;
  };
  const auto even = mults(2, Sign::plus);
  CHECK(even.at(1) == 1);
  CHECK(even.at(Rational(1, 2)) == 6);
  CHECK(even.at(Rational(1, 4)) == 8);
  CHECK(even.at(0) == 33);
  const auto odd_plus = mults(3, Sign::plus);
  CHECK(odd_plus.at(1) == 1);
  CHECK(odd_plus.at(Rational(1, 3)) == 9);
  CHECK(odd_plus.at(Rational(1, 9)) == 23);
  CHECK(odd_plus.at(Rational(1, 27)) == 15);
  const auto odd_minus = mults(3, Sign::minus);
  CHECK(odd_minus.at(1) == 1);
  CHECK(odd_minus.at(Rational(1, 3)) == 6);
  CHECK(odd_minus.at(Rational(1, 9)) == 11);
  CHECK(odd_minus.at(Rational(1, 27)) == 6);
  CHECK(odd_minus.at(Rational(-1, 3)) == 3);
  CHECK(odd_minus.at(Rational(-1, 9)) == 12);
  CHECK(odd_minus.at(Rational(-1, 27)) == 9);
}
