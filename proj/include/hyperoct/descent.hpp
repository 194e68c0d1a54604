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
#ifndef HYPEROCT_DESCENT_HPP
#define HYPEROCT_DESCENT_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperoct/algebra.hpp"

namespace hyperoct {

enum class Decoration { plain, bar, tilde_bar };

Decoration decoration_for(Involution f);
std::string to_string(Decoration d);

struct DecoratedPart {
  int size = 0;
  Decoration dec = Decoration::plain;
  bool decorated() const { return dec != Decoration::plain; }
  friend bool operator==(const DecoratedPart&, const DecoratedPart&) = default;
  friend auto operator<=>(const DecoratedPart&, const DecoratedPart&) = default;
};

// Weak composition whose parts may carry bar or tilde-bar marks (never both kinds).
class DecoratedComposition {
 public:
  DecoratedComposition() = default;
  explicit DecoratedComposition(std::vector<DecoratedPart> parts);

  const std::vector<DecoratedPart>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  const DecoratedPart& operator[](std::size_t i) const { return parts_[i]; }
  int total() const;
  // D⁺: sizes only.
  std::vector<int> plus() const;
  // Involution of the decorated parts; nullopt when nothing is decorated.
  std::optional<Involution> flavor() const;

  friend bool operator==(const DecoratedComposition&, const DecoratedComposition&) = default;
  friend auto operator<=>(const DecoratedComposition& x, const DecoratedComposition& y) {
    return x.parts_ <=> y.parts_;
  }

 private:
  std::vector<DecoratedPart> parts_;
};

// "2b,4,0,2b" or "2t,5"
DecoratedComposition parse_composition(const std::string& text);
std::string format_composition(const DecoratedComposition& d);

// Linear combination of elementary operators m∘Δ_{D}.
class DescentOperator {
 public:
  using Map = std::map<DecoratedComposition, Rational>;

  DescentOperator(int degree, Involution flavor) : degree_(degree), flavor_(flavor) {}

  void add(const DecoratedComposition& d, const Rational& c);
  Rational coeff(const DecoratedComposition& d) const;
  const Map& terms() const { return terms_; }
  int degree() const { return degree_; }
  Involution flavor() const { return flavor_; }
  std::size_t size() const { return terms_.size(); }
  friend bool operator==(const DescentOperator& x, const DescentOperator& y) {
    return x.degree_ == y.degree_ && x.terms_ == y.terms_;
  }

 private:
  int degree_;
  Involution flavor_;
  Map terms_;
};

struct CompatibleMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<DecoratedPart> entries;  // row-major
  const DecoratedPart& at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
  friend bool operator==(const CompatibleMatrix&, const CompatibleMatrix&) = default;
};

std::vector<std::vector<int>> weak_compositions(int n, int parts);
// Every decorated weak composition of n with 1..max_length parts using the given involution's mark.
std::vector<DecoratedComposition> decorated_compositions(int n, int max_length, Involution flavor);

AlgebraElement apply_elementary(const DecoratedComposition& d, const SignedWord& w, Algebra alg);
AlgebraElement apply_elementary(const DecoratedComposition& d, const AlgebraElement& x, Algebra alg);
AlgebraElement apply_operator(const DescentOperator& t, const AlgebraElement& x, Algebra alg);
AlgebraElement apply_operator(const DescentOperator& t, const SignedWord& w, Algebra alg);

// Sum over a-part compositions; sign + marks even parts (1-based), sign − marks odd parts.
DescentOperator riffle_operator(int a, Sign sign, Involution flavor, int n);

// Mat(D, D'): rows follow D, columns follow D'. Lexicographic on flattened sizes.
std::vector<CompatibleMatrix> compatible_matrices(const DecoratedComposition& d, const DecoratedComposition& dp);
DecoratedComposition wcomp(const CompatibleMatrix& m);
// Row i read right to left when d_i is decorated.
DecoratedComposition wcomp_tilde(const DecoratedComposition& d, const CompatibleMatrix& m);
// Predicted expansion of (m∘Δ_D)∘(m∘Δ_D'), i.e. D' applied first.
DescentOperator compose_law(const DecoratedComposition& d, const DecoratedComposition& dp, Algebra alg);

}  // namespace hyperoct

#endif
