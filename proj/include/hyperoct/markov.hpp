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
#ifndef HYPEROCT_MARKOV_HPP
#define HYPEROCT_MARKOV_HPP

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperoct/algebra.hpp"
#include "hyperoct/linalg.hpp"
#include "hyperoct/spectral.hpp"

namespace hyperoct {

// rotation ↔ τ, flip ↔ τ̃
struct ShuffleSpec {
  int n = 1;
  int a = 2;
  Sign sign = Sign::plus;
  Involution flavor = Involution::tau_tilde;

  ShuffleSpec() = default;
  ShuffleSpec(int n_, int a_, Sign s, Involution f);
  std::string label() const;
  std::int64_t scale() const;  // a^n
};

std::string flavor_name(Involution f);  // "rotation" / "flip"

// Words of a fixed list, with O(1) lookup.
class StateIndex {
 public:
  explicit StateIndex(std::vector<SignedWord> states);
  static StateIndex signed_permutations(int n);
  int size() const { return static_cast<int>(states_.size()); }
  const SignedWord& operator[](int i) const { return states_[static_cast<std::size_t>(i)]; }
  const std::vector<SignedWord>& states() const { return states_; }
  // -1 when absent
  int find(const SignedWord& w) const;

 private:
  std::vector<SignedWord> states_;
  std::unordered_map<SignedWord, int, SignedWordHash> index_;
};

// K = counts / a^n, exact.
struct TransitionMatrix {
  ShuffleSpec spec;
  std::vector<SignedWord> states;
  IntMatrix counts;
  std::int64_t denominator = 1;
  Rational entry(int i, int j) const;
};

constexpr int kDefaultMatrixCap = 5;

TransitionMatrix transition_matrix(const ShuffleSpec& spec, int max_n = kDefaultMatrixCap);

using Rng = std::mt19937_64;
SignedWord sample_step(const ShuffleSpec& spec, const SignedWord& x, Rng& rng);

// Uniform on signed permutations, checked exactly as a left fixed vector of K.
std::vector<Rational> stationary_distribution(const ShuffleSpec& spec, int max_n = kDefaultMatrixCap);
// Exact dimension of the fixed space of Kᵀ (certified through ranks mod large primes).
int stationary_space_dimension(const TransitionMatrix& k);

enum class EigenKind { f_plus, f_minus, f_tilde, g };

struct EigenfunctionId {
  EigenKind kind = EigenKind::g;
  int i = 1;
  int j = 0;
  std::string name() const;
};

int eigenfunction_value(const EigenfunctionId& f, const SignedWord& w);

struct SubdominantFamily {
  std::string name;
  Rational eigenvalue;
  std::vector<EigenfunctionId> members;
};

struct SubdominantCheck {
  Rational eigenvalue;
  std::vector<std::string> families;
  bool eigen_equations_hold = true;
  int span_dimension = 0;
  Integer expected_multiplicity = 0;
  std::string failure;
  bool ok() const { return eigen_equations_hold && Integer(span_dimension) == expected_multiplicity; }
};

struct SubdominantReport {
  ShuffleSpec spec;
  std::vector<SubdominantCheck> checks;
  bool ok() const;
};

std::vector<SubdominantFamily> subdominant_families(const ShuffleSpec& spec);
SubdominantReport verify_subdominant(const ShuffleSpec& spec, const TransitionMatrix& k);
SubdominantReport verify_subdominant(const ShuffleSpec& spec);

// Adjacent pairs with left > right as signed integers (k̄ = -k).
int des(const SignedWord& w);
Rational expected_descents(const ShuffleSpec& spec, const SignedWord& w0, int t);
Rational expectation_via_eigenfunction(const std::vector<Rational>& f_values, const StateIndex& states,
                                       const Rational& beta, const SignedWord& w0, int t);
// Σ_y K^t(w0, y) f(y) by repeated exact products.
Rational exact_expectation(const TransitionMatrix& k, const std::vector<Rational>& f, const SignedWord& w0, int t);

struct MonteCarloSummary {
  double mean = 0;
  double standard_error = 0;
  long trials = 0;
};

}  // namespace hyperoct

#endif
