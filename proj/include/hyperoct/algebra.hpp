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
#ifndef HYPEROCT_ALGEBRA_HPP
#define HYPEROCT_ALGEBRA_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hyperoct/rational.hpp"
#include "hyperoct/word.hpp"

namespace hyperoct {

// Which product/coproduct pair acts on words.
//   shuffle: shuffle product, deconcatenation coproduct (commutative)
//   concat:  concatenation product, deshuffle coproduct (cocommutative)
enum class Algebra { shuffle, concat };
enum class Involution { tau, tau_tilde };
enum class Sign { plus, minus };

std::string to_string(Algebra a);
std::string to_string(Involution f);
std::string to_string(Sign s);

// Finite linear combination of words with nonzero rational coefficients,
// kept in canonical word order.
class AlgebraElement {
 public:
  using Map = std::map<SignedWord, Rational>;

  AlgebraElement() = default;
  explicit AlgebraElement(const SignedWord& w, const Rational& c = 1);

  void add(const SignedWord& w, const Rational& c);
  void add(const AlgebraElement& x, const Rational& c = 1);
  Rational coeff(const SignedWord& w) const;

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool is_homogeneous() const;
  // Common degree of all terms; 0 for the zero element. Throws NotHomogeneous.
  std::size_t degree() const;

  AlgebraElement& operator+=(const AlgebraElement& y);
  AlgebraElement& operator-=(const AlgebraElement& y);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(AlgebraElement x, const Rational& c) { return x *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement x) { return x *= c; }
  friend AlgebraElement operator-(AlgebraElement x) { return x *= -1; }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.terms_ == y.terms_; }

 private:
  Map terms_;
};

// Formal sum of word tuples, one word per tensor slot.
class TensorElement {
 public:
  using Key = std::vector<SignedWord>;
  using Map = std::map<Key, Rational>;

  void add(const Key& k, const Rational& c);
  Rational coeff(const Key& k) const;
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const TensorElement& x, const TensorElement& y) { return x.terms_ == y.terms_; }

 private:
  Map terms_;
};

// Calls f once per interleaving (with multiplicity).
void for_each_shuffle(const std::vector<SignedWord>& factors, const std::function<void(const SignedWord&)>& f);
// Calls f once per assignment of positions to slots of the given sizes.
void for_each_deshuffle(const SignedWord& w, const std::vector<int>& parts,
                        const std::function<void(const std::vector<SignedWord>&)>& f);

AlgebraElement shuffle_product(const std::vector<SignedWord>& factors);
AlgebraElement shuffle_product(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement concat_product(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y, Algebra alg);
AlgebraElement product(const std::vector<AlgebraElement>& factors, Algebra alg);

std::vector<SignedWord> deconcatenate(const SignedWord& w, const std::vector<int>& parts);
TensorElement deshuffle(const SignedWord& w, const std::vector<int>& parts);
// Refined coproduct Δ_parts extended linearly.
TensorElement coproduct(const AlgebraElement& x, const std::vector<int>& parts, Algebra alg);

SignedWord apply_involution(const SignedWord& w, Involution f);
AlgebraElement apply_involution(const AlgebraElement& x, Involution f);
AlgebraElement tau(const AlgebraElement& x);
AlgebraElement tau_tilde(const AlgebraElement& x);

// (x ± σx)/2
AlgebraElement project_invariant(const AlgebraElement& x, Involution which, Sign sign);
// xy − yx in the concatenation algebra.
AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y);
// Reduced coproduct vanishes in every bidegree.
bool is_primitive(const AlgebraElement& x, Algebra alg);

}  // namespace hyperoct

#endif
