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
#include "hyperoct/markov.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperoct/error.hpp"
#include "hyperoct/kernels.hpp"

namespace hyperoct {

ShuffleSpec::ShuffleSpec(int n_, int a_, Sign s, Involution f) : n(n_), a(a_), sign(s), flavor(f) {
  if (n < 1) throw SizeMismatch("deck size must be >= 1");
  if (a < 1) throw SizeMismatch("number of hands must be >= 1");
}

std::string flavor_name(Involution f) { return f == Involution::tau ? "rotation" : "flip"; }

std::string ShuffleSpec::label() const {
  return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " " + to_string(sign) + " " + flavor_name(flavor);
}

std::int64_t ShuffleSpec::scale() const {
  std::int64_t s = 1;
  for (int i = 0; i < n; ++i)
    if (__builtin_mul_overflow(s, static_cast<std::int64_t>(a), &s)) throw std::overflow_error("a^n overflows");
  return s;
}

StateIndex::StateIndex(std::vector<SignedWord> states) : states_(std::move(states)) {
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], static_cast<int>(i));
}

StateIndex StateIndex::signed_permutations(int n) { return StateIndex(hyperoct::signed_permutations(n)); }

int StateIndex::find(const SignedWord& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

Rational TransitionMatrix::entry(int i, int j) const {
  Rational q(Integer(static_cast<long>(counts(i, j))), Integer(static_cast<long>(denominator)));
  q.canonicalize();
  return q;
}

TransitionMatrix transition_matrix(const ShuffleSpec& spec, int max_n) {
  if (spec.n > max_n)
    throw StateSpaceTooLarge("n=" + std::to_string(spec.n) + " exceeds the cap n<=" + std::to_string(max_n) +
                             " (dense int64 matrix of (2^n n!)^2 entries)");
  const StateIndex states = StateIndex::signed_permutations(spec.n);
  TransitionMatrix k;
  k.spec = spec;
  k.states = states.states();
  k.denominator = spec.scale();
  k.counts = kernels::operator_matrix(riffle_operator(spec.a, spec.sign, spec.flavor, spec.n), states,
                                      Algebra::shuffle);
  return k;
}

SignedWord sample_step(const ShuffleSpec& spec, const SignedWord& x, Rng& rng) {
  const int n = static_cast<int>(x.size());
  const int a = spec.a;
  // 1. cut: n uniform pile labels give multinomial pile sizes
  std::vector<int> sizes(static_cast<std::size_t>(a), 0);
  std::uniform_int_distribution<int> pile(0, a - 1);
  for (int i = 0; i < n; ++i) ++sizes[static_cast<std::size_t>(pile(rng))];
  std::vector<SignedWord> piles = deconcatenate(x, sizes);
  // 2. rotate or flip the decorated piles
  for (int i = 0; i < a; ++i) {
    const bool even_index = (i + 1) % 2 == 0;
    const bool marked = spec.sign == Sign::plus ? even_index : !even_index;
    if (marked) piles[static_cast<std::size_t>(i)] = apply_involution(piles[static_cast<std::size_t>(i)], spec.flavor);
  }
  // 3. drop cards with probability proportional to pile size
  std::vector<std::size_t> next(static_cast<std::size_t>(a), 0);
  std::vector<SignedLetter> out;
  out.reserve(static_cast<std::size_t>(n));
  int remaining = n;
  while (remaining > 0) {
    int r = std::uniform_int_distribution<int>(0, remaining - 1)(rng);
    std::size_t i = 0;
    for (;; ++i) {
      const int left = static_cast<int>(piles[i].size() - next[i]);
      if (r < left) break;
      r -= left;
    }
    out.push_back(piles[i][next[i]++]);
    --remaining;
  }
  return SignedWord(std::move(out));
}

static bool columns_sum_to(const IntMatrix& m, std::int64_t s) {
  for (int j = 0; j < m.cols; ++j) {
    std::int64_t c = 0;
    for (int i = 0; i < m.rows; ++i) c += m(i, j);
    if (c != s) return false;
  }
  return true;
}

std::vector<Rational> stationary_distribution(const ShuffleSpec& spec, int max_n) {
  if (spec.a < 2) throw HypothesesNotMet("a = 1 gives the identity chain; every distribution is stationary");
  const TransitionMatrix k = transition_matrix(spec, max_n);
  if (!columns_sum_to(k.counts, k.denominator)) throw HypothesesNotMet("uniform is not a fixed vector of K");
  const Rational u(Integer(1), Integer(static_cast<unsigned long>(k.states.size())));
  return std::vector<Rational>(k.states.size(), u);
}

int stationary_space_dimension(const TransitionMatrix& k) {
  const IntMatrix a = shift_diagonal(k.counts.transposed(), k.denominator);
  const int n = a.rows;
  const bool uniform_fixed = columns_sum_to(k.counts, k.denominator);
  int best = 0;
  for (auto p : large_primes(3)) best = std::max(best, rank_mod_p(a, p));
  // rank mod p never exceeds the rational rank
  if (uniform_fixed && best == n - 1) return 1;
  return n - rank_exact(a);
}

std::string EigenfunctionId::name() const {
  switch (kind) {
    case EigenKind::f_plus: return "f+_" + std::to_string(i) + "," + std::to_string(j);
    case EigenKind::f_minus: return "f-_" + std::to_string(i) + "," + std::to_string(j);
    case EigenKind::f_tilde: return "ft_" + std::to_string(i) + "," + std::to_string(j);
    case EigenKind::g: return "g_" + std::to_string(i);
  }
  return "?";
}

int eigenfunction_value(const EigenfunctionId& f, const SignedWord& w) {
  const int i = f.i, j = f.j;
  switch (f.kind) {
    case EigenKind::f_plus:
    case EigenKind::f_minus:
      if (!(1 <= i && i < j)) throw BadIndices(f.name() + " needs 1 <= i < j");
      break;
    case EigenKind::f_tilde:
      if (i < 1 || j < 1 || i == j) throw BadIndices(f.name() + " needs distinct positive indices");
      break;
    case EigenKind::g:
      if (i < 1) throw BadIndices(f.name() + " needs i >= 1");
      break;
  }
  if (f.kind == EigenKind::g) {
    if (w.empty()) return 0;
    for (const SignedLetter& l : {w[0], w[w.size() - 1]})
      if (l.value == i) return l.barred ? -1 : 1;
    return 0;
  }
  const int I = i, J = j;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const int x = w[p].to_int(), y = w[p + 1].to_int();
    switch (f.kind) {
      case EigenKind::f_plus:
        if ((x == I && y == J) || (x == -I && y == -J)) return 1;
        if ((x == J && y == I) || (x == -J && y == -I)) return -1;
        break;
      case EigenKind::f_minus:
        if ((x == -I && y == J) || (x == I && y == -J)) return 1;
        if ((x == J && y == -I) || (x == -J && y == I)) return -1;
        break;
      case EigenKind::f_tilde:
        if ((x == I && y == J) || (x == -I && y == J) || (x == -J && y == I) || (x == -J && y == -I)) return 1;
        if ((x == J && y == I) || (x == J && y == -I) || (x == I && y == -J) || (x == -I && y == -J)) return -1;
        break;
      case EigenKind::g: break;
    }
  }
  return 0;
}

std::vector<SubdominantFamily> subdominant_families(const ShuffleSpec& spec) {
  const int n = spec.n;
  const Rational up(1, spec.a), down(-1, spec.a);
  auto pairs = [&](EigenKind k, bool ordered) {
    std::vector<EigenfunctionId> v;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (ordered ? i != j : i < j) v.push_back({k, i, j});
    return v;
  };
  std::vector<EigenfunctionId> gs;
  for (int i = 1; i <= n; ++i) gs.push_back({EigenKind::g, i, 0});
  const bool odd = spec.a % 2 == 1;
  std::vector<SubdominantFamily> out;
  if (spec.flavor == Involution::tau) {
    out.push_back({"f+", up, pairs(EigenKind::f_plus, false)});
    out.push_back({"f-", up, pairs(EigenKind::f_minus, false)});
  } else {
    out.push_back({"ft", up, pairs(EigenKind::f_tilde, true)});
  }
  if (odd) out.push_back({"g", spec.sign == Sign::plus ? up : down, gs});
  return out;
}

bool SubdominantReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubdominantCheck& c) { return c.ok(); });
}

SubdominantReport verify_subdominant(const ShuffleSpec& spec, const TransitionMatrix& k) {
  if (spec.a < 2) throw HypothesesNotMet("subdominant eigenvalues need a >= 2");
  SubdominantReport rep;
  rep.spec = spec;
  const auto table = shuffle_multiplicities(spec.a, spec.sign, spec.flavor, spec.n);
  const int N = static_cast<int>(k.states.size());
  std::vector<Rational> values;
  for (const auto& fam : subdominant_families(spec))
    if (std::find(values.begin(), values.end(), fam.eigenvalue) == values.end()) values.push_back(fam.eigenvalue);
  for (const auto& beta : values) {
    SubdominantCheck c;
    c.eigenvalue = beta;
    for (const auto& e : table)
      if (e.eigenvalue == beta) c.expected_multiplicity = e.multiplicity;
    // M f = a^n β f with a^n β = ±a^(n-1)
    const Rational scaled = beta * Rational(static_cast<long>(k.denominator));
    const std::int64_t mu = scaled.get_num().get_si();
    std::vector<std::vector<std::int64_t>> cols;
    for (const auto& fam : subdominant_families(spec)) {
      if (fam.eigenvalue != beta) continue;
      c.families.push_back(fam.name);
      for (const auto& f : fam.members) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(N));
        for (int x = 0; x < N; ++x) v[static_cast<std::size_t>(x)] = eigenfunction_value(f, k.states[static_cast<std::size_t>(x)]);
        // right eigenfunction: Σ_y M(x,y) f(y) = mu f(x)
        for (int x = 0; x < N && c.eigen_equations_hold; ++x) {
          std::int64_t s = 0;
          for (int y = 0; y < N; ++y) s += k.counts(x, y) * v[static_cast<std::size_t>(y)];
          if (s != mu * v[static_cast<std::size_t>(x)]) {
            c.eigen_equations_hold = false;
            c.failure = f.name() + " fails at " + format_word(k.states[static_cast<std::size_t>(x)]);
          }
        }
        cols.push_back(std::move(v));
      }
    }
    IntMatrix span(N, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int x = 0; x < N; ++x) span(x, static_cast<int>(j)) = cols[j][static_cast<std::size_t>(x)];
    c.span_dimension = cols.empty() ? 0 : rank_exact(span);
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

SubdominantReport verify_subdominant(const ShuffleSpec& spec) { return verify_subdominant(spec, transition_matrix(spec)); }

int des(const SignedWord& w) {
  int d = 0;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p].to_int() > w[p + 1].to_int()) ++d;
  return d;
}

Rational expected_descents(const ShuffleSpec& spec, const SignedWord& w0, int t) {
  if (spec.flavor != Involution::tau_tilde)
    throw FlavorUnsupported("the descent formula is only established for flip shuffles");
  if (t < 0) throw SizeMismatch("t must be >= 0");
  const Rational decay = rational_pow(spec.a, -t);
  return (1 - decay) * Rational(Integer(spec.n - 1), Integer(2)) + decay * des(w0);
}

Rational expectation_via_eigenfunction(const std::vector<Rational>& f_values, const StateIndex& states,
                                       const Rational& beta, const SignedWord& w0, int t) {
  const int i = states.find(w0);
  if (i < 0) throw SizeMismatch(format_word(w0) + " is not a state");
  Rational b = 1;
  for (int s = 0; s < t; ++s) b *= beta;
  return b * f_values[static_cast<std::size_t>(i)];
}

Rational exact_expectation(const TransitionMatrix& k, const std::vector<Rational>& f, const SignedWord& w0, int t) {
  const StateIndex states(k.states);
  const int i0 = states.find(w0);
  if (i0 < 0) throw SizeMismatch(format_word(w0) + " is not a state");
  const int N = k.counts.rows;
  std::vector<Rational> h = f;
  for (int s = 0; s < t; ++s) {
    std::vector<Rational> next(static_cast<std::size_t>(N));
    for (int x = 0; x < N; ++x) {
      Rational acc = 0;
      for (int y = 0; y < N; ++y)
        if (k.counts(x, y) != 0) acc += Rational(static_cast<long>(k.counts(x, y))) * h[static_cast<std::size_t>(y)];
      next[static_cast<std::size_t>(x)] = acc / Rational(static_cast<long>(k.denominator));
    }
    h = std::move(next);
  }
  return h[static_cast<std::size_t>(i0)];
}

}  // namespace hyperoct
