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
#ifndef HYPEROCT_LYNDON_HPP
#define HYPEROCT_LYNDON_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hyperoct/algebra.hpp"

namespace hyperoct {

struct LyndonFactorization {
  std::vector<SignedWord> factors;  // non-increasing
};

enum class Parity { invariant, negating };

struct ClassifiedPrimitives {
  std::vector<AlgebraElement> invariant;  // p_1..p_k
  std::vector<AlgebraElement> negating;   // p̄_1..p̄_k̄
  Involution flavor = Involution::tau;
};

bool is_lyndon(const SignedWord& w);
LyndonFactorization lyndon_factorize(const SignedWord& w);
// (left, right) with right the longest proper Lyndon suffix.
std::pair<SignedWord, SignedWord> standard_factorization(const SignedWord& u);
AlgebraElement stdbrac(const SignedWord& u);
Parity classify_primitive(const SignedWord& u, Involution flavor);
ClassifiedPrimitives classify_factors(const SignedWord& w, Involution flavor);

// Σ_σ p_σ(1)…p_σ(k) in the concatenation algebra.
AlgebraElement symmetrized_product(const std::vector<AlgebraElement>& ps);

// Lyndon words of the given length over labels 1..max_label, increasing.
std::vector<SignedWord> lyndon_words(int length, int max_label);
// (b, b̄): invariant/negating Lyndon primitive counts for degrees 1..n.
std::pair<std::vector<long>, std::vector<long>> primitive_counts(int max_label, int n, Involution flavor);

struct EigenOptions {
  // Flip, odd a, sign +: use S·p̄1…p̄k̄ instead of p̄1…p̄k̄·S.
  bool alternate_format = false;
  // Flip, odd a, sign −: use S·p̄1…p̄k̄ (unreversed) in the second summand. Not an eigenvector in general.
  bool unreversed_second_summand = false;
  std::optional<AlphabetSpec> alphabet;
};

struct Eigenvector {
  SignedWord word;
  AlgebraElement vector;
  Rational eigenvalue;
};

Eigenvector build_eigenvector(const SignedWord& w, int a, Sign sign, Involution flavor, const EigenOptions& opt = {});

// Eigenvectors indexed by degree-n words over labels <= max_label: distinct labels only,
// or every word when all_words is set. Flavor tau with even a skips words with negating factors.
std::vector<Eigenvector> eigenbasis(int n, int max_label, int a, Sign sign, Involution flavor, bool all_words = false,
                                    const EigenOptions& opt = {});

}  // namespace hyperoct

#endif
