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

#include <random>

#include "hyperoct/kernels.hpp"
#include "hyperoct/lyndon.hpp"
#include "hyperoct/parallel.hpp"

using namespace hyperoct;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (auto& x : m.data) x = d(rng);
  return m;
}

}  // namespace

TEST_CASE("exact characteristic polynomial") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_matrix(rng, 1 + t % 7, -50, 50);
    CHECK(kernels::charpoly_exact(m) == charpoly_rational(m));
  }
  IntMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = 2;
  // (x - 2)^3
  CHECK(kernels::charpoly_exact(id) == IntPolynomial({-8, 12, -6, 1}));
}

TEST_CASE("CRT lift recovers signed values") {
  const auto primes = large_primes(3);
  const Integer v("-123456789012345678901234567890");
  std::vector<std::uint64_t> res;
  for (auto p : primes) {
    Integer r = v % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += Integer(static_cast<unsigned long>(p));
    res.push_back(r.get_ui());
  }
  CHECK(crt_lift(res, primes) == v);
}

TEST_CASE("ranks") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 10; ++t) {
    auto m = random_matrix(rng, 6, -3, 3);
    // force a dependent row
    for (int j = 0; j < 6; ++j) m(5, j) = m(0, j) - 2 * m(1, j);
    CHECK(rank_mod_p(m, large_primes(1)[0]) == rank_exact(m));
    CHECK(rank_exact(m) <= 5);
  }
}

TEST_CASE("parallel kernels agree with the serial twins") {
  set_threads(max_threads());
  const auto states = StateIndex::signed_permutations(3);
  for (Involution f : {Involution::tau, Involution::tau_tilde})
    for (Algebra alg : {Algebra::shuffle, Algebra::concat}) {
      const auto t = riffle_operator(3, Sign::minus, f, 3);
      CHECK(kernels::operator_matrix(t, states, alg) == kernels::serial::operator_matrix(t, states, alg));
    }
  const auto m = kernels::operator_matrix(riffle_operator(2, Sign::plus, Involution::tau, 3), states, Algebra::concat);
  const auto primes = large_primes(4);
  CHECK(kernels::charpolys_mod_primes(m, primes) == kernels::serial::charpolys_mod_primes(m, primes));

  std::vector<std::vector<std::int64_t>> vecs;
  std::vector<std::int64_t> mus;
  for (const auto& e : eigenbasis(3, 3, 2, Sign::plus, Involution::tau)) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(states.size()), 0);
    for (const auto& [w, c] : e.vector) v[static_cast<std::size_t>(states.find(w))] = c.get_num().get_si();
    vecs.push_back(v);
    mus.push_back(e.eigenvalue.get_num().get_si());
  }
  // one deliberately wrong eigenvalue
  mus.back() += 1;
  const auto par = kernels::eigen_equations_hold(m, vecs, mus);
  CHECK(par == kernels::serial::eigen_equations_hold(m, vecs, mus));
  CHECK_FALSE(par.back());
  for (std::size_t i = 0; i + 1 < par.size(); ++i) CHECK(par[i]);

  const ShuffleSpec spec(4, 3, Sign::minus, Involution::tau_tilde);
  const auto w0 = parse_word("4 3 2 1");
  const auto a = kernels::simulate_descents(spec, w0, 2, 2000, 99);
  const auto b = kernels::serial::simulate_descents(spec, w0, 2, 2000, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.trials == 2000);
}
