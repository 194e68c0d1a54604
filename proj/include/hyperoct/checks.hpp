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
#ifndef HYPEROCT_CHECKS_HPP
#define HYPEROCT_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperoct/json_io.hpp"
#include "hyperoct/markov.hpp"

// Invariant checks shared by `hyperoct verify`, the acceptance binary and the tests.
namespace hyperoct::checks {

enum class Status { pass, fail, report_only };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  std::string scope;
  Status status = Status::pass;
  std::string detail;
  bool passed() const { return status != Status::fail; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::size_t count(Status s) const;
};

json to_json(const VerifyReport& r);

// ---- worked examples
std::vector<CheckResult> worked_examples();

// ---- algebra-core
CheckResult involutions_are_involutive(int max_degree, int max_label);
CheckResult involution_morphisms(int max_degree);
CheckResult bialgebra_compatibility(int max_degree, std::uint64_t seed);
CheckResult primitives_preserved(int max_degree);
CheckResult bracket_parity(int max_degree);

// ---- descent-ops
// Shuffle matrix equals the transpose of the concat matrix on signed permutations.
CheckResult duality(int n, int max_length, Involution flavor);
// (m∘Δ_D)∘(m∘Δ_D') against compose_law for every pair of length <= max_length.
CheckResult composition_exhaustive(int n, int max_length, Involution flavor, Algebra alg);
CheckResult composition_random(int n, int pairs, Involution flavor, Algebra alg, std::uint64_t seed);
// orif_a∘orif_b = orif_ab; report-only outside the three sufficient hypotheses.
std::vector<CheckResult> riffle_composition(int n, int max_ab);
bool riffle_composition_hypotheses(Algebra alg, Involution flavor, int a, int b);
// Sign of orif_ab equal to orif_a∘orif_b (b applied first), or nullopt outside the hypotheses.
std::optional<Sign> riffle_composition_sign(Algebra alg, Involution flavor, int a, int b, Sign sa, Sign sb);
CheckResult riffle_rows_stochastic(const ShuffleSpec& spec);

// ---- spectral
// det(xI - a^n K) = Π (x - a^n λ)^m with (λ, m) from shuffle_multiplicities.
CheckResult chain_spectrum(const ShuffleSpec& spec);
CheckResult table1_totals(int n_max);
// riffle_spectrum vs per-double-partition eigenvalues and vs the word-algebra charpoly.
CheckResult riffle_spectrum_consistency(int n, int max_label, int a, Sign sign, Involution flavor);
CheckResult beta_type_a_reduction(int n);
// PBW triangularity with β on the diagonal, concat algebra.
CheckResult triangularity(int max_degree, int max_label, Involution flavor);

// ---- stirling
CheckResult stirling_closed_vs_recursive(int n_max);
CheckResult stirling_lr_minima(int n_max);
CheckResult stirling_lyndon_classes(int n_max);

// ---- lyndon-eigen
struct EigenbasisSummary {
  std::size_t emitted = 0;
  std::size_t failures = 0;
  int rank = 0;
  bool counts_match = false;
};
CheckResult eigenbasis_suite(int n, int a, Sign sign, Involution flavor, EigenbasisSummary* summary = nullptr);
CheckResult one_negating_primitive_identities(int a, Involution flavor, int trials, std::uint64_t seed);
CheckResult stdbrac_parity(int max_length, int max_label);
CheckResult unreversed_flip_form(int n, int a);  // report-only

// ---- markov
CheckResult rows_sum_to_one(const TransitionMatrix& k);
CheckResult stationary_unique(const TransitionMatrix& k);
CheckResult subdominant(const TransitionMatrix& k);
CheckResult eigenbasis_duality(int n, int a, Sign sign, Involution flavor);
CheckResult descent_expectation_exact(const TransitionMatrix& k, int t_max);
CheckResult descent_expectation_monte_carlo(const ShuffleSpec& spec, int t, long trials, std::uint64_t seed);
CheckResult rotation_descent_formula(const TransitionMatrix& k, int t_max);  // report-only

// ---- suites
std::vector<std::string> suite_names();
// "all" runs every suite. Checks run concurrently up to `jobs`; results sorted by name.
VerifyReport run_suite(const std::string& suite, int n_max, int jobs, std::uint64_t seed);

}  // namespace hyperoct::checks

#endif
