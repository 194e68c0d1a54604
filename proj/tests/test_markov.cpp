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

#include <cmath>
#include <map>

#include "hyperoct/error.hpp"
#include "hyperoct/markov.hpp"

using namespace hyperoct;

namespace {

std::vector<Rational> values_of(const TransitionMatrix& k, const EigenfunctionId& f) {
  std::vector<Rational> out;
  for (const auto& s : k.states) out.push_back(eigenfunction_value(f, s));
  return out;
}

std::vector<Rational> descents_of(const TransitionMatrix& k) {
  std::vector<Rational> out;
  for (const auto& s : k.states) out.push_back(des(s));
  return out;
}

}  // namespace

TEST_CASE("one card flip chain") {
  const auto k = transition_matrix(ShuffleSpec(1, 2, Sign::minus, Involution::tau_tilde));
  REQUIRE(k.states.size() == 2);
  const int one = StateIndex(k.states).find(parse_word("1"));
  const int bar = StateIndex(k.states).find(parse_word("-1"));
  CHECK(k.entry(one, one) == Rational(1, 2));
  CHECK(k.entry(one, bar) == Rational(1, 2));
}

TEST_CASE("rows are stochastic and the uniform law is stationary") {
  for (int n = 1; n <= 3; ++n)
    for (int a = 1; a <= 3; ++a)
      for (Sign s : {Sign::plus, Sign::minus})
        for (Involution f : {Involution::tau, Involution::tau_tilde}) {
          const ShuffleSpec spec(n, a, s, f);
          const auto k = transition_matrix(spec);
          for (int i = 0; i < k.counts.rows; ++i) {
            std::int64_t sum = 0;
            for (int j = 0; j < k.counts.cols; ++j) {
              CHECK(k.counts(i, j) >= 0);
              sum += k.counts(i, j);
            }
            CHECK(sum == k.denominator);
          }
          if (a == 1) {
            CHECK_THROWS_AS(stationary_distribution(spec), HypothesesNotMet);
            continue;
          }
          const auto pi = stationary_distribution(spec);
          Rational total = 0;
          for (const auto& p : pi) total += p;
          CHECK(total == 1);
          if (n == 2) CHECK(pi[0] == Rational(1, 8));
          CHECK(stationary_space_dimension(k) == 1);
        }
  CHECK_THROWS_AS(transition_matrix(ShuffleSpec(6, 2, Sign::plus, Involution::tau)), StateSpaceTooLarge);
}

TEST_CASE("descents") {
  CHECK(des(parse_word("4 3 5 -1 6 -7 -2")) == 3);
  CHECK(des(parse_word("1 2 3 4")) == 0);
  CHECK(des(parse_word("4 3 2 1")) == 3);
}

TEST_CASE("eigenfunction values") {
  const EigenfunctionId ft{EigenKind::f_tilde, 6, 7};
  CHECK(eigenfunction_value(ft, parse_word("1 6 -7 2")) == -1);
  CHECK(eigenfunction_value(EigenfunctionId{EigenKind::g, 2, 0}, parse_word("1 2 3")) == 0);
  CHECK_THROWS_AS(eigenfunction_value(EigenfunctionId{EigenKind::f_plus, 2, 1}, parse_word("1 2")), BadIndices);
  // ascents minus descents
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : signed_permutations(n)) {
      int sum = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) sum += eigenfunction_value(EigenfunctionId{EigenKind::f_tilde, i, j}, w);
      CHECK(sum == (n - 1) - 2 * des(w));
    }
}

TEST_CASE("subdominant eigenfunctions") {
  for (int n = 2; n <= 3; ++n)
    for (int a : {2, 3})
      for (Sign s : {Sign::plus, Sign::minus})
        for (Involution f : {Involution::tau, Involution::tau_tilde}) {
          const auto r = verify_subdominant(ShuffleSpec(n, a, s, f));
          CHECK_MESSAGE(r.ok(), ShuffleSpec(n, a, s, f).label());
        }
  const auto fams = subdominant_families(ShuffleSpec(3, 2, Sign::plus, Involution::tau_tilde));
  std::size_t tilde = 0;
  for (const auto& fam : fams)
    for (const auto& m : fam.members) tilde += m.kind == EigenKind::f_tilde;
  CHECK(tilde == 6);
}

TEST_CASE("expected descents") {
  const ShuffleSpec spec(3, 2, Sign::plus, Involution::tau_tilde);
  const auto w0 = parse_word("3 2 1");
  CHECK(expected_descents(spec, w0, 0) == 2);
  CHECK(expected_descents(spec, w0, 1) == Rational(3, 2));
  const auto k = transition_matrix(spec);
  for (int t = 0; t <= 4; ++t) CHECK(exact_expectation(k, descents_of(k), w0, t) == expected_descents(spec, w0, t));
  const StateIndex states(k.states);
  const EigenfunctionId f12{EigenKind::f_tilde, 1, 2};
  const auto fv = values_of(k, f12);
  CHECK(exact_expectation(k, fv, w0, 2) == expectation_via_eigenfunction(fv, states, Rational(1, 2), w0, 2));
  const std::vector<Rational> ones(k.states.size(), 1);
  CHECK(expectation_via_eigenfunction(ones, states, 1, w0, 5) == 1);
  CHECK_THROWS_AS(expected_descents(ShuffleSpec(3, 2, Sign::plus, Involution::tau), w0, 1), FlavorUnsupported);
}

TEST_CASE("sampled steps follow the transition matrix") {
  const ShuffleSpec spec(3, 2, Sign::minus, Involution::tau_tilde);
  const auto k = transition_matrix(spec);
  const StateIndex states(k.states);
  const auto x = parse_word("2 -3 1");
  const int row = states.find(x);
  Rng rng(20260101);
  const long trials = 100000;
  std::map<int, long> hits;
  for (long i = 0; i < trials; ++i) ++hits[states.find(sample_step(spec, x, rng))];
  double chi2 = 0;
  int cells = 0;
  for (int j = 0; j < states.size(); ++j) {
    const double p = k.entry(row, j).get_d();
    const double obs = static_cast<double>(hits[j]);
    if (p == 0) {
      CHECK(obs == 0);
      continue;
    }
    const double e = p * trials;
    // per entry within 4 sigma
    CHECK(std::abs(obs - e) <= 4 * std::sqrt(e * (1 - p)));
    chi2 += (obs - e) * (obs - e) / e;
    ++cells;
  }
  // loose upper tail for chi-square with cells-1 dof
  CHECK(chi2 < (cells - 1) + 6 * std::sqrt(2.0 * (cells - 1)));
  Rng r1(1);
  const ShuffleSpec still(3, 1, Sign::plus, Involution::tau);
  for (int i = 0; i < 20; ++i) CHECK(sample_step(still, x, r1) == x);
}
