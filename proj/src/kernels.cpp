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
#include "hyperoct/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperoct/error.hpp"
#include "hyperoct/parallel.hpp"

namespace hyperoct::kernels {

namespace {

std::vector<std::pair<DecoratedComposition, std::int64_t>> integral_terms(const DescentOperator& t) {
  std::vector<std::pair<DecoratedComposition, std::int64_t>> out;
  for (const auto& [d, c] : t.terms()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw std::invalid_argument("operator matrix kernel needs small integer coefficients");
    out.emplace_back(d, c.get_num().get_si());
  }
  return out;
}

void fill_row(const std::vector<std::pair<DecoratedComposition, std::int64_t>>& terms, const StateIndex& states,
              Algebra alg, int row, IntMatrix& m) {
  const SignedWord& w = states[row];
  auto hit = [&](const SignedWord& v, std::int64_t c) {
    const int j = states.find(v);
    if (j < 0) throw SizeMismatch("image " + format_word(v) + " leaves the state space");
    m(row, j) += c;
  };
  for (const auto& [d, c] : terms) {
    const Involution f = d.flavor().value_or(Involution::tau);
    if (alg == Algebra::shuffle) {
      auto pieces = deconcatenate(w, d.plus());
      for (std::size_t i = 0; i < pieces.size(); ++i)
        if (d[i].decorated()) pieces[i] = apply_involution(pieces[i], f);
      for_each_shuffle(pieces, [&](const SignedWord& v) { hit(v, c); });
    } else {
      for_each_deshuffle(w, d.plus(), [&](const std::vector<SignedWord>& slots) {
        SignedWord v;
        for (std::size_t i = 0; i < slots.size(); ++i)
          v.append(d[i].decorated() ? apply_involution(slots[i], f) : slots[i]);
        hit(v, c);
      });
    }
  }
}

bool eigen_holds(const IntMatrix& m, const std::vector<std::int64_t>& v, std::int64_t mu) {
  // (mᵀ v)_y = Σ_x v_x m(x, y)
  std::vector<std::int64_t> out(static_cast<std::size_t>(m.cols), 0);
  for (int x = 0; x < m.rows; ++x) {
    const std::int64_t vx = v[static_cast<std::size_t>(x)];
    if (vx == 0) continue;
    for (int y = 0; y < m.cols; ++y) {
      const std::int64_t e = m(x, y);
      if (e == 0) continue;
      std::int64_t prod = 0;
      if (__builtin_mul_overflow(vx, e, &prod) || __builtin_add_overflow(out[y], prod, &out[y]))
        throw std::overflow_error("int64 overflow in eigen check");
    }
  }
  for (int y = 0; y < m.cols; ++y) {
    std::int64_t rhs = 0;
    if (__builtin_mul_overflow(mu, v[static_cast<std::size_t>(y)], &rhs))
      throw std::overflow_error("int64 overflow in eigen check");
    if (out[static_cast<std::size_t>(y)] != rhs) return false;
  }
  return true;
}

MonteCarloSummary summarize(const std::vector<int>& values) {
  MonteCarloSummary s;
  s.trials = static_cast<long>(values.size());
  if (values.empty()) return s;
  double sum = 0, sq = 0;
  for (int v : values) {
    sum += v;
    sq += static_cast<double>(v) * v;
  }
  const double n = static_cast<double>(values.size());
  s.mean = sum / n;
  const double var = values.size() > 1 ? (sq - n * s.mean * s.mean) / (n - 1) : 0.0;
  s.standard_error = std::sqrt(std::max(var, 0.0) / n);
  return s;
}

int run_trajectory(const ShuffleSpec& spec, const SignedWord& w0, int steps, std::uint64_t seed, std::uint64_t i) {
  Rng rng = trajectory_rng(seed, i);
  SignedWord x = w0;
  for (int s = 0; s < steps; ++s) x = sample_step(spec, x, rng);
  return des(x);
}

}  // namespace

Rng trajectory_rng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return Rng(z);
}

IntMatrix operator_matrix(const DescentOperator& t, const StateIndex& states, Algebra alg) {
  const auto terms = integral_terms(t);
  IntMatrix m(states.size(), states.size());
  parallel_for(static_cast<std::size_t>(states.size()),
               [&](std::size_t row) { fill_row(terms, states, alg, static_cast<int>(row), m); });
  return m;
}

std::vector<std::vector<std::uint64_t>> charpolys_mod_primes(const IntMatrix& a,
                                                             const std::vector<std::uint64_t>& primes) {
  std::vector<std::vector<std::uint64_t>> out(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) { out[i] = charpoly_mod_p(a, primes[i]); });
  return out;
}

IntPolynomial charpoly_exact(const IntMatrix& a) {
  const std::size_t k = primes_needed(charpoly_coefficient_bound(a));
  const auto primes = large_primes(k);
  const auto residues = charpolys_mod_primes(a, primes);
  std::vector<Integer> coeffs(static_cast<std::size_t>(a.rows) + 1);
  std::vector<std::uint64_t> r(k);
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    for (std::size_t i = 0; i < k; ++i) r[i] = residues[i][c];
    coeffs[c] = crt_lift(r, primes);
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<char> eigen_equations_hold(const IntMatrix& m, const std::vector<std::vector<std::int64_t>>& vectors,
                                       const std::vector<std::int64_t>& eigenvalues) {
  std::vector<char> ok(vectors.size(), 0);
  parallel_for(vectors.size(), [&](std::size_t i) { ok[i] = eigen_holds(m, vectors[i], eigenvalues[i]) ? 1 : 0; });
  return ok;
}

MonteCarloSummary simulate_descents(const ShuffleSpec& spec, const SignedWord& w0, int steps, long trials,
                                    std::uint64_t seed) {
  std::vector<int> values(static_cast<std::size_t>(trials));
  parallel_for(values.size(), [&](std::size_t i) { values[i] = run_trajectory(spec, w0, steps, seed, i); });
  return summarize(values);
}

namespace serial {

IntMatrix operator_matrix(const DescentOperator& t, const StateIndex& states, Algebra alg) {
  IntMatrix m(states.size(), states.size());
  for (int row = 0; row < states.size(); ++row) {
    const AlgebraElement img = apply_operator(t, states[row], alg);
    for (const auto& [v, c] : img) {
      const int j = states.find(v);
      if (j < 0) throw SizeMismatch("image " + format_word(v) + " leaves the state space");
      if (c.get_den() != 1) throw std::invalid_argument("non-integral operator matrix");
      m(row, j) = c.get_num().get_si();
    }
  }
  return m;
}

std::vector<std::vector<std::uint64_t>> charpolys_mod_primes(const IntMatrix& a,
                                                             const std::vector<std::uint64_t>& primes) {
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(primes.size());
  for (auto p : primes) out.push_back(charpoly_mod_p(a, p));
  return out;
}

std::vector<char> eigen_equations_hold(const IntMatrix& m, const std::vector<std::vector<std::int64_t>>& vectors,
                                       const std::vector<std::int64_t>& eigenvalues) {
  std::vector<char> ok;
  ok.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) ok.push_back(eigen_holds(m, vectors[i], eigenvalues[i]) ? 1 : 0);
  return ok;
}

MonteCarloSummary simulate_descents(const ShuffleSpec& spec, const SignedWord& w0, int steps, long trials,
                                    std::uint64_t seed) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(trials));
  for (long i = 0; i < trials; ++i) values.push_back(run_trajectory(spec, w0, steps, seed, static_cast<std::uint64_t>(i)));
  return summarize(values);
}

}  // namespace serial
}  // namespace hyperoct::kernels
