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
#ifndef HYPEROCT_KERNELS_HPP
#define HYPEROCT_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "hyperoct/descent.hpp"
#include "hyperoct/linalg.hpp"
#include "hyperoct/markov.hpp"

// OpenMP kernels. Each has a straightforward single-threaded twin in
// kernels::serial used by the tests and the benchmark.
namespace hyperoct::kernels {

// M(x, y) = coefficient of y in T(x), rows and columns indexed by states.
IntMatrix operator_matrix(const DescentOperator& t, const StateIndex& states, Algebra alg);

std::vector<std::vector<std::uint64_t>> charpolys_mod_primes(const IntMatrix& a,
                                                             const std::vector<std::uint64_t>& primes);
// Exact det(xI - A): enough primes for the coefficient bound, then CRT.
IntPolynomial charpoly_exact(const IntMatrix& a);

// op(Σ v_x x) = μ Σ v_x x, where op has matrix m as above, i.e. mᵀv = μv.
std::vector<char> eigen_equations_hold(const IntMatrix& m, const std::vector<std::vector<std::int64_t>>& vectors,
                                       const std::vector<std::int64_t>& eigenvalues);

// Descents after `steps` shuffles from w0, one RNG stream per trajectory.
MonteCarloSummary simulate_descents(const ShuffleSpec& spec, const SignedWord& w0, int steps, long trials,
                                    std::uint64_t seed);

Rng trajectory_rng(std::uint64_t seed, std::uint64_t index);

namespace serial {

// Goes through apply_operator on AlgebraElement terms.
IntMatrix operator_matrix(const DescentOperator& t, const StateIndex& states, Algebra alg);
std::vector<std::vector<std::uint64_t>> charpolys_mod_primes(const IntMatrix& a,
                                                             const std::vector<std::uint64_t>& primes);
std::vector<char> eigen_equations_hold(const IntMatrix& m, const std::vector<std::vector<std::int64_t>>& vectors,
                                       const std::vector<std::int64_t>& eigenvalues);
MonteCarloSummary simulate_descents(const ShuffleSpec& spec, const SignedWord& w0, int steps, long trials,
                                    std::uint64_t seed);

}  // namespace serial
}  // namespace hyperoct::kernels

#endif
