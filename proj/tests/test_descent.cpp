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
#include <set>

#include "hyperoct/descent.hpp"
#include "hyperoct/kernels.hpp"
#include "hyperoct/markov.hpp"
#include "hyperoct/spectral.hpp"

using namespace hyperoct;

namespace {

DescentOperator single(const std::string& text, Involution f) {
  const auto d = parse_composition(text);
  DescentOperator t(d.total(), f);
  t.add(d, 1);
  return t;
}

IntMatrix matrix_of(const DescentOperator& t, const StateIndex& s, Algebra alg) {
  return kernels::operator_matrix(t, s, alg);
}

std::string mat_key(const CompatibleMatrix& m) { return format_composition(wcomp(m)); }

}  // namespace

TEST_CASE("composition text round trip") {
  const auto d = parse_composition("2b,4,0,2b");
  CHECK(d.length() == 4);
  CHECK(d.total() == 8);
  CHECK(format_composition(d) == "2b,4,0,2b");
  CHECK(d.flavor() == Involution::tau);
  CHECK(parse_composition("2t,5").flavor() == Involution::tau_tilde);
  CHECK_FALSE(parse_composition("3,1").flavor().has_value());
  CHECK_THROWS(parse_composition("2b,1t"));
}

TEST_CASE("m of cut with tilde part on 3 1bar 6") {
  const auto x = apply_elementary(parse_composition("1,2t"), parse_word("3 -1 6"), Algebra::shuffle);
  AlgebraElement want;
  for (const char* w : {"3 -6 1", "-6 3 1", "-6 1 3"}) want.add(parse_word(w), 1);
  CHECK(x == want);
}

TEST_CASE("riffle operator shapes") {
  const auto id = riffle_operator(1, Sign::plus, Involution::tau, 4);
  CHECK(id.size() == 1);
  CHECK(id.coeff(parse_composition("4")) == 1);
  const auto flip_first = riffle_operator(2, Sign::minus, Involution::tau_tilde, 3);
  CHECK(flip_first.size() == 4);
  for (int i = 0; i <= 3; ++i) {
    const std::string text = std::to_string(i) + "t," + std::to_string(3 - i);
    CHECK(flip_first.coeff(parse_composition(text)) == 1);
  }
  const auto s = StateIndex::signed_permutations(3);
  const auto m = matrix_of(riffle_operator(2, Sign::plus, Involution::tau_tilde, 3), s, Algebra::concat);
  for (int i = 0; i < m.rows; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j < m.cols; ++j) sum += m(i, j);
    CHECK(sum == 8);
  }
}

TEST_CASE("compatible matrices of the worked example") {
  const auto mats = compatible_matrices(parse_composition("2b,4b,1"), parse_composition("2b,5"));
  std::set<std::string> got;
  for (const auto& m : mats) got.insert(mat_key(m));
  const std::set<std::string> want{"0,2b,1,3b,1b,0", "1,1b,0,4b,1b,0", "1,1b,1,3b,0b,1", "2,0b,0,4b,0b,1",
                                   "0,2b,2,2b,0b,1"};
  CHECK(got == want);
  CHECK(compatible_matrices(parse_composition("1,1"), parse_composition("1,1")).size() == 2);
  const CompatibleMatrix tm{3, 2, parse_composition("0,2t,1,3t,1t,0").parts()};
  CHECK(wcomp_tilde(parse_composition("2t,4t,1"), tm) == parse_composition("2t,0,3t,1,1t,0"));
}

TEST_CASE("compose law on 1bar,3 after 2,2bar at n = 4") {
  const auto s = StateIndex::signed_permutations(4);
  const auto d = parse_composition("1b,3"), dp = parse_composition("2,2b");
  const IntMatrix lhs = multiply(matrix_of(single("2,2b", Involution::tau), s, Algebra::shuffle),
                                 matrix_of(single("1b,3", Involution::tau), s, Algebra::shuffle));
  CHECK(lhs == matrix_of(compose_law(d, dp, Algebra::shuffle), s, Algebra::shuffle));
}

TEST_CASE("zero parts do not change the operator") {
  std::mt19937_64 rng(5);
  const auto words = signed_permutations(3);
  for (Involution f : {Involution::tau, Involution::tau_tilde}) {
    for (const auto& d : decorated_compositions(3, 3, f)) {
      std::vector<DecoratedPart> kept;
      for (const auto& p : d.parts())
        if (p.size > 0) kept.push_back(p);
      const DecoratedComposition stripped(kept);
      const auto& w = words[rng() % words.size()];
      for (Algebra alg : {Algebra::shuffle, Algebra::concat})
        CHECK(apply_elementary(d, w, alg) == apply_elementary(stripped, w, alg));
    }
  }
}

TEST_CASE("duality between the two algebras is transposition") {
  const auto s = StateIndex::signed_permutations(3);
  for (Involution f : {Involution::tau, Involution::tau_tilde})
    for (const auto& d : decorated_compositions(3, 2, f)) {
      DescentOperator t(3, f);
      t.add(d, 1);
      CHECK(matrix_of(t, s, Algebra::shuffle).transposed() == matrix_of(t, s, Algebra::concat));
    }
}

TEST_CASE("random flip operator eigenvalues at n = 3") {
  // every two-pile cut, each pile flipped or not
  DescentOperator t(3, Involution::tau_tilde);
  for (int i = 0; i <= 3; ++i)
    for (const char* l : {"", "t"})
      for (const char* r : {"", "t"})
        t.add(parse_composition(std::to_string(i) + l + "," + std::to_string(3 - i) + r), 1);
  for (const auto& [dp, value] : operator_eigenvalues(t)) {
    const int l = static_cast<int>(dp.lambda.size()), lb = static_cast<int>(dp.lambda_bar.size());
    Rational want = 0;
    if (lb == 0) want = rational_pow(2, l + 2);
    else if (lb % 2 == 0) want = rational_pow(2, l + lb + 1);
    CHECK_MESSAGE(value == want, format_double_partition(dp));
  }
}
