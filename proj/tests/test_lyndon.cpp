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

#include "hyperoct/descent.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/lyndon.hpp"

using namespace hyperoct;

namespace {

AlgebraElement pm(int i, int s) {
  AlgebraElement x(SignedWord{i});
  x.add(SignedWord{-i}, s);
  return x;
}

AlgebraElement cat(std::initializer_list<AlgebraElement> xs) { return product(std::vector<AlgebraElement>(xs), Algebra::concat); }

// rotation-minimal check: w < every proper rotation
bool lyndon_by_rotations(const SignedWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    SignedWord r = w.slice(i, w.size() - i);
    r.append(w.slice(0, i));
    if (!(w < r)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Lyndon words") {
  CHECK(is_lyndon(parse_word("-1 6 -7 -2")));
  CHECK_FALSE(is_lyndon(parse_word("-5 3")));
  CHECK_FALSE(is_lyndon(parse_word("3 -5 3 -5")));
  CHECK_THROWS_AS(is_lyndon(SignedWord{}), EmptyWord);
  const auto f = lyndon_factorize(parse_word("-4 3 5 -1 6 -7 -2"));
  CHECK(f.factors == std::vector<SignedWord>{parse_word("-4"), parse_word("3 5"), parse_word("-1 6 -7 -2")});
  CHECK(standard_factorization(parse_word("-1 6 -7 -2")) == std::pair{parse_word("-1 6 -7"), parse_word("-2")});
  CHECK(standard_factorization(parse_word("-1 6 -7")) == std::pair{parse_word("-1"), parse_word("6 -7")});
  CHECK_THROWS_AS(standard_factorization(parse_word("3")), SingleLetter);
  CHECK_THROWS_AS(standard_factorization(parse_word("-5 3")), NotLyndon);
}

TEST_CASE("factorization properties on random words") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    SignedWord w;
    const int len = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) w.push_back(SignedLetter(1 + static_cast<int>(rng() % 3), rng() % 2 == 0));
    CHECK(is_lyndon(w) == lyndon_by_rotations(w));
    const auto f = lyndon_factorize(w);
    SignedWord joined;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(lyndon_by_rotations(f.factors[i]));
      if (i > 0) CHECK_FALSE(f.factors[i - 1] < f.factors[i]);
      joined.append(f.factors[i]);
    }
    CHECK(joined == w);
  }
}

TEST_CASE("standard bracketing") {
  CHECK(stdbrac(parse_word("-1")) == pm(1, -1));
  AlgebraElement want;
  for (const char* w : {"6 7", "-6 7", "-7 6", "-7 -6"}) want.add(parse_word(w), 1);
  for (const char* w : {"6 -7", "-6 -7", "7 6", "7 -6"}) want.add(parse_word(w), -1);
  CHECK(stdbrac(parse_word("6 -7")) == want);
  const auto big = stdbrac(parse_word("-1 6 -7 -2"));
  CHECK(big.size() == 128);
  CHECK(big.coeff(parse_word("1 6 7 2")) == 1);
  for (const auto& [w, c] : big) CHECK((c == 1 || c == -1));
  CHECK(is_primitive(big, Algebra::concat));
}

TEST_CASE("classification under each involution") {
  CHECK(classify_primitive(parse_word("3 5"), Involution::tau) == Parity::invariant);
  CHECK(classify_primitive(parse_word("-1 6 -7 -2"), Involution::tau) == Parity::negating);
  CHECK(classify_primitive(parse_word("-4"), Involution::tau_tilde) == Parity::negating);
  const auto rot = classify_factors(parse_word("-4 3 5 -1 6 -7 -2"), Involution::tau);
  CHECK(rot.invariant.size() == 1);
  CHECK(rot.negating.size() == 2);
  const auto flip = classify_factors(parse_word("-4 -3 5 -1 6 -7 -2"), Involution::tau_tilde);
  CHECK(flip.invariant.size() == 2);
  CHECK(flip.negating.size() == 1);
  for (int len = 1; len <= 4; ++len)
    for (const auto& u : lyndon_words(len, 2)) {
      const auto p = stdbrac(u);
      for (Involution f : {Involution::tau, Involution::tau_tilde}) {
        const int s = classify_primitive(u, f) == Parity::invariant ? 1 : -1;
        CHECK(apply_involution(p, f) == p * Rational(s));
      }
    }
}

TEST_CASE("symmetrized product of three letters") {
  const auto x = symmetrized_product({pm(1, 1), pm(2, 1), pm(3, 1)});
  CHECK(x.size() == 48);
  for (const auto& w : signed_permutations(3)) CHECK(x.coeff(w) == 1);
}

TEST_CASE("degree one eigenvectors") {
  const auto plus = build_eigenvector(parse_word("2"), 3, Sign::plus, Involution::tau);
  CHECK(plus.vector == pm(2, 1));
  const auto minus = build_eigenvector(parse_word("-2"), 3, Sign::plus, Involution::tau);
  // both placements of the single negating primitive contribute
  CHECK(minus.vector == pm(2, -1) * Rational(2));
  CHECK_THROWS_AS(build_eigenvector(SignedWord{}, 2, Sign::plus, Involution::tau), EmptyWord);
}

TEST_CASE("eigenbasis of size 8 at n = 2") {
  const auto evs = eigenbasis(2, 2, 2, Sign::plus, Involution::tau_tilde);
  CHECK(evs.size() == 8);
  const auto t = riffle_operator(2, Sign::plus, Involution::tau_tilde, 2);
  int nonzero = 0;
  for (const auto& e : evs) {
    CHECK((e.eigenvalue == 4 || e.eigenvalue == 2 || e.eigenvalue == 1 || e.eigenvalue == 0));
    CHECK(apply_operator(t, e.vector, Algebra::concat) == e.vector * e.eigenvalue);
    nonzero += e.eigenvalue != 0;
  }
  // x(x+2) at n = 2: 1 + 2 nonzero eigenvalues
  CHECK(nonzero == 3);
}

TEST_CASE("rotation worked example has eigenvalue 3" * doctest::timeout(300)) {
  const auto w = parse_word("-4 3 5 -1 6 -7 -2");
  const auto t = riffle_operator(3, Sign::plus, Involution::tau, 7);
  const auto ev = build_eigenvector(w, 3, Sign::plus, Involution::tau);
  CHECK(ev.eigenvalue == 3);
  CHECK(apply_operator(t, ev.vector, Algebra::concat) == ev.vector * Rational(3));
  // the ordering printed alongside the example is also an eigenvector
  const auto p1 = stdbrac(parse_word("3 5"));
  const auto q1 = stdbrac(parse_word("-4"));
  const auto q2 = stdbrac(parse_word("-1 6 -7 -2"));
  const auto printed = cat({q1, q2, p1}) + cat({q1, p1, q2}) + cat({q2, p1, q1}) + cat({p1, q2, q1});
  CHECK(apply_operator(t, printed, Algebra::concat) == printed * Rational(3));
}

TEST_CASE("flip worked example has eigenvalue -9" * doctest::timeout(300)) {
  const auto w = parse_word("-4 -3 5 -1 6 -7 -2");
  const auto ev = build_eigenvector(w, 3, Sign::minus, Involution::tau_tilde);
  // two invariant factors, one negating: (-1)^1 * 3^2
  CHECK(ev.eigenvalue == -9);
  const auto image = apply_operator(riffle_operator(3, Sign::minus, Involution::tau_tilde, 7), ev.vector, Algebra::concat);
  CHECK(image == ev.vector * Rational(-9));
  CHECK_FALSE(image == ev.vector * Rational(-3));
}
