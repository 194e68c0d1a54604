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

// Serial twins against the OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "hyperoct/kernels.hpp"
#include "hyperoct/lyndon.hpp"

using namespace hyperoct;

namespace {

const StateIndex& states4() {
  static const StateIndex s = StateIndex::signed_permutations(4);
  return s;
}

const IntMatrix& chain4() {
  static const IntMatrix m =
      kernels::operator_matrix(riffle_operator(3, Sign::minus, Involution::tau_tilde, 4), states4(), Algebra::shuffle);
  return m;
}

template <bool Parallel>
void BM_OperatorMatrix(benchmark::State& st) {
  const auto t = riffle_operator(static_cast<int>(st.range(0)), Sign::minus, Involution::tau_tilde, 4);
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::operator_matrix(t, states4(), Algebra::shuffle));
    else
      benchmark::DoNotOptimize(kernels::serial::operator_matrix(t, states4(), Algebra::shuffle));
  }
}

template <bool Parallel>
void BM_CharpolyModPrimes(benchmark::State& st) {
  const auto primes = large_primes(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::charpolys_mod_primes(chain4(), primes));
    else
      benchmark::DoNotOptimize(kernels::serial::charpolys_mod_primes(chain4(), primes));
  }
}

template <bool Parallel>
void BM_EigenEquations(benchmark::State& st) {
  const IntMatrix m =
      kernels::operator_matrix(riffle_operator(2, Sign::plus, Involution::tau_tilde, 4), states4(), Algebra::concat);
  std::vector<std::vector<std::int64_t>> vecs;
  std::vector<std::int64_t> mus;
  for (const auto& e : eigenbasis(4, 4, 2, Sign::plus, Involution::tau_tilde)) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(states4().size()), 0);
    for (const auto& [w, c] : e.vector) v[static_cast<std::size_t>(states4().find(w))] = c.get_num().get_si();
    vecs.push_back(std::move(v));
    mus.push_back(e.eigenvalue.get_num().get_si());
  }
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::eigen_equations_hold(m, vecs, mus));
    else
      benchmark::DoNotOptimize(kernels::serial::eigen_equations_hold(m, vecs, mus));
  }
}

template <bool Parallel>
void BM_SimulateDescents(benchmark::State& st) {
  const ShuffleSpec spec(4, 2, Sign::plus, Involution::tau_tilde);
  const auto w0 = parse_word("4 3 2 1");
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::simulate_descents(spec, w0, 4, st.range(0), 1));
    else
      benchmark::DoNotOptimize(kernels::serial::simulate_descents(spec, w0, 4, st.range(0), 1));
  }
}

}  // namespace

BENCHMARK(BM_OperatorMatrix<false>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OperatorMatrix<true>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharpolyModPrimes<false>)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharpolyModPrimes<true>)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EigenEquations<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EigenEquations<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateDescents<false>)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateDescents<true>)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
