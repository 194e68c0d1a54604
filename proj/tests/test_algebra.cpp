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

#include "hyperoct/algebra.hpp"
#include "hyperoct/error.hpp"

using namespace hyperoct;

namespace {

AlgebraElement sum_of(const std::vector<std::string>& words) {
  AlgebraElement x;
  for (const auto& w : words) x.add(parse_word(w), 1);
  return x;
}

// interleavings of two words by choosing positions with a bitmask
AlgebraElement shuffle_by_masks(const SignedWord& u, const SignedWord& v) {
  AlgebraElement out;
  const std::size_t n = u.size() + v.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) continue;
    SignedWord w;
    std::size_t i = 0, j = 0;
    for (std::size_t p = 0; p < n; ++p) w.push_back((mask >> p) & 1u ? u[i++] : v[j++]);
    out.add(w, 1);
  }
  return out;
}

SignedWord random_word(std::mt19937_64& rng, int len, int max_label) {
  std::uniform_int_distribution<int> lab(1, max_label);
  std::bernoulli_distribution bar(0.5);
  SignedWord w;
  for (int i = 0; i < len; ++i) w.push_back(SignedLetter(lab(rng), bar(rng)));
  return w;
}

}  // namespace

TEST_CASE("letters order barred before plain") {
  CHECK(SignedLetter::from_int(-1) < SignedLetter::from_int(1));
  CHECK(SignedLetter::from_int(1) < SignedLetter::from_int(-2));
  CHECK(parse_word("e").empty());
  CHECK(format_word(parse_word("3 -1 6")) == "3 -1 6");
  CHECK_THROWS_AS(parse_word("3 0"), ParseError);
}

TEST_CASE("shuffle of 1 5bar with 3bar and 2bar has twelve terms") {
  const auto x = shuffle_product({parse_word("1 -5"), parse_word("-3"), parse_word("-2")});
  const auto want = sum_of({"1 -5 -3 -2", "1 -5 -2 -3", "1 -2 -5 -3", "-2 1 -5 -3", "1 -3 -5 -2", "1 -3 -2 -5",
                            "1 -2 -3 -5", "-2 1 -3 -5", "-3 1 -5 -2", "-3 1 -2 -5", "-3 -2 1 -5", "-2 -3 1 -5"});
  CHECK(x == want);
  CHECK(x.size() == 12);
}

TEST_CASE("shuffle matches bitmask enumeration") {
  CHECK(shuffle_product({parse_word("1 2"), parse_word("3")}) == sum_of({"1 2 3", "1 3 2", "3 1 2"}));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const auto u = random_word(rng, 1 + t % 4, 3), v = random_word(rng, 1 + t % 3, 3);
    CHECK(shuffle_product({u, v}) == shuffle_by_masks(u, v));
    // commutative
    CHECK(shuffle_product({u, v}) == shuffle_product({v, u}));
  }
}

TEST_CASE("deconcatenation and deshuffle of 3 1bar 6") {
  CHECK(deconcatenate(parse_word("1 -5 -3 -2"), {2, 1, 1}) ==
        std::vector<SignedWord>{parse_word("1 -5"), parse_word("-3"), parse_word("-2")});
  const auto w = parse_word("3 -1 6");
  const TensorElement d = deshuffle(w, {1, 2});
  CHECK(d.size() == 3);
  CHECK(d.coeff({parse_word("3"), parse_word("-1 6")}) == 1);
  CHECK(d.coeff({parse_word("-1"), parse_word("3 6")}) == 1);
  CHECK(d.coeff({parse_word("6"), parse_word("3 -1")}) == 1);
  const TensorElement d3 = deshuffle(w, {1, 1, 1});
  CHECK(d3.size() == 6);
  CHECK_THROWS(deconcatenate(w, {1, 1}));
}

TEST_CASE("coproduct is multiplicative against the product") {
  // Δ(xy) = Δ(x)Δ(y) in the bidegree (1, n-1), both algebras
  std::mt19937_64 rng(11);
  for (Algebra alg : {Algebra::shuffle, Algebra::concat}) {
    for (int t = 0; t < 10; ++t) {
      const auto u = random_word(rng, 2, 3), v = random_word(rng, 2, 3);
      const auto xy = product(AlgebraElement(u), AlgebraElement(v), alg);
      for (int i = 0; i <= 4; ++i) {
        const TensorElement lhs = coproduct(xy, {i, 4 - i}, alg);
        TensorElement rhs;
        for (int j = 0; j <= std::min(i, 2); ++j) {
          if (i - j > 2) continue;
          const auto cu = coproduct(AlgebraElement(u), {j, 2 - j}, alg);
          const auto cv = coproduct(AlgebraElement(v), {i - j, 2 - i + j}, alg);
          for (const auto& [ku, a] : cu.terms())
            for (const auto& [kv, b] : cv.terms()) {
              const auto l = product(AlgebraElement(ku[0]), AlgebraElement(kv[0]), alg);
              const auto r = product(AlgebraElement(ku[1]), AlgebraElement(kv[1]), alg);
              for (const auto& [wl, cl] : l)
                for (const auto& [wr, cr] : r) rhs.add({wl, wr}, a * b * cl * cr);
            }
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("involutions") {
  const auto w = parse_word("3 -1 6");
  CHECK(tau(w) == parse_word("-3 1 -6"));
  CHECK(tau_tilde(w) == parse_word("-6 1 -3"));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto u = random_word(rng, 3, 4), v = random_word(rng, 2, 4);
    CHECK(tau(tau(u)) == u);
    CHECK(tau_tilde(tau_tilde(u)) == u);
    // τ is an algebra map for both products; τ̃ reverses concatenation
    CHECK(tau(shuffle_product({u, v})) == shuffle_product({tau(u), tau(v)}));
    CHECK(tau_tilde(shuffle_product({u, v})) == shuffle_product({tau_tilde(u), tau_tilde(v)}));
    SignedWord uv = u;
    uv.append(v);
    SignedWord vu = tau_tilde(v);
    vu.append(tau_tilde(u));
    CHECK(tau_tilde(uv) == vu);
  }
}

TEST_CASE("primitives and brackets") {
  AlgebraElement p(parse_word("1"));
  p.add(parse_word("-1"), -1);
  AlgebraElement q(parse_word("2"));
  q.add(parse_word("-2"), 1);
  CHECK(is_primitive(p, Algebra::concat));
  CHECK(is_primitive(lie_bracket(p, q), Algebra::concat));
  CHECK_FALSE(is_primitive(AlgebraElement(parse_word("1 2")), Algebra::concat));
  CHECK(project_invariant(AlgebraElement(parse_word("3 -1 6")), Involution::tau, Sign::plus).size() == 2);
}

TEST_CASE("degree of mixed element throws") {
  AlgebraElement x(parse_word("1"));
  x.add(parse_word("1 2"), 1);
  CHECK_FALSE(x.is_homogeneous());
  CHECK_THROWS_AS(x.degree(), NotHomogeneous);
}
