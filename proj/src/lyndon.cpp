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
#include "hyperoct/lyndon.hpp"

#include <algorithm>
#include <numeric>

#include "hyperoct/error.hpp"
#include "hyperoct/parallel.hpp"

namespace hyperoct {

LyndonFactorization lyndon_factorize(const SignedWord& w) {
  if (w.empty()) throw EmptyWord("cannot factorize the empty word");
  // Duval
  LyndonFactorization out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && !(w[j] < w[k])) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.factors.push_back(w.slice(i, j - k));
      i += j - k;
    }
  }
  return out;
}

bool is_lyndon(const SignedWord& w) {
  if (w.empty()) throw EmptyWord("is_lyndon needs a non-empty word");
  return lyndon_factorize(w).factors.size() == 1;
}

std::pair<SignedWord, SignedWord> standard_factorization(const SignedWord& u) {
  if (u.empty()) throw EmptyWord("standard factorization of the empty word");
  if (!is_lyndon(u)) throw NotLyndon(format_word(u));
  if (u.size() == 1) throw SingleLetter(format_word(u));
  for (std::size_t i = 1; i < u.size(); ++i) {
    SignedWord right = u.slice(i, u.size() - i);
    if (is_lyndon(right)) return {u.slice(0, i), right};
  }
  throw NotLyndon(format_word(u));  // unreachable: the last letter is Lyndon
}

AlgebraElement stdbrac(const SignedWord& u) {
  if (u.empty()) throw EmptyWord("stdbrac of the empty word");
  if (u.size() == 1) {
    const SignedLetter l = u[0];
    const SignedWord pos(std::vector<SignedLetter>{SignedLetter(l.value, false)});
    const SignedWord neg(std::vector<SignedLetter>{SignedLetter(l.value, true)});
    AlgebraElement x(pos);
    x.add(neg, l.barred ? -1 : 1);
    return x;
  }
  auto [left, right] = standard_factorization(u);
  return lie_bracket(stdbrac(left), stdbrac(right));
}

Parity classify_primitive(const SignedWord& u, Involution flavor) {
  if (u.empty() || !is_lyndon(u)) throw NotLyndon(format_word(u));
  int barred = 0;
  for (const auto& l : u) barred += l.barred ? 1 : 0;
  const int unbarred = static_cast<int>(u.size()) - barred;
  if (flavor == Involution::tau) return barred % 2 == 0 ? Parity::invariant : Parity::negating;
  return unbarred % 2 == 1 ? Parity::invariant : Parity::negating;
}

ClassifiedPrimitives classify_factors(const SignedWord& w, Involution flavor) {
  ClassifiedPrimitives cp;
  cp.flavor = flavor;
  for (const auto& u : lyndon_factorize(w).factors) {
    if (classify_primitive(u, flavor) == Parity::invariant) cp.invariant.push_back(stdbrac(u));
    else cp.negating.push_back(stdbrac(u));
  }
  return cp;
}

AlgebraElement symmetrized_product(const std::vector<AlgebraElement>& ps) {
  std::vector<std::size_t> idx(ps.size());
  std::iota(idx.begin(), idx.end(), 0);
  AlgebraElement out;
  do {
    AlgebraElement term(SignedWord{});
    for (std::size_t i : idx) term = concat_product(term, ps[i]);
    out += term;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<SignedWord> lyndon_words(int length, int max_label) {
  // Duval's generation over the 2N ordered letters
  const int base = 2 * max_label;
  auto letter = [](int d) { return SignedLetter(d / 2 + 1, d % 2 == 0); };
  std::vector<SignedWord> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == length) {
      std::vector<SignedLetter> ls;
      for (int d : w) ls.push_back(letter(d));
      out.emplace_back(std::move(ls));
    }
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == base - 1) w.pop_back();
  }
  return out;
}

std::pair<std::vector<long>, std::vector<long>> primitive_counts(int max_label, int n, Involution flavor) {
  std::vector<long> b(static_cast<std::size_t>(n), 0), bb(static_cast<std::size_t>(n), 0);
  for (int d = 1; d <= n; ++d)
    for (const auto& u : lyndon_words(d, max_label))
      ++(classify_primitive(u, flavor) == Parity::invariant ? b : bb)[static_cast<std::size_t>(d - 1)];
  return {b, bb};
}

static AlgebraElement ordered_product(const std::vector<AlgebraElement>& ps, const std::vector<std::size_t>& order) {
  AlgebraElement acc(SignedWord{});
  for (std::size_t i : order) acc = concat_product(acc, ps[i]);
  return acc;
}

static std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Eigenvector build_eigenvector(const SignedWord& w, int a, Sign sign, Involution flavor, const EigenOptions& opt) {
  if (a < 1) throw SizeMismatch("a must be >= 1");
  if (opt.alphabet && !opt.alphabet->contains(w))
    throw NotInAlphabet(format_word(w) + " uses labels above " + std::to_string(opt.alphabet->max_label));
  const ClassifiedPrimitives cp = classify_factors(w, flavor);
  const auto& p = cp.invariant;
  const auto& pb = cp.negating;
  const long k = static_cast<long>(p.size());
  const std::size_t kb = pb.size();
  const bool even = a % 2 == 0;
  const Rational ak = rational_pow(a, k);
  const Rational sgn = kb % 2 == 0 ? 1 : -1;

  Eigenvector ev{w, {}, 0};
  const AlgebraElement s = symmetrized_product(p);
  const AlgebraElement bars = ordered_product(pb, iota_vec(kb));

  if (flavor == Involution::tau_tilde) {
    if (even) {
      ev.vector = sign == Sign::plus ? concat_product(s, bars) : concat_product(bars, s);
      ev.eigenvalue = kb == 0 ? ak : Rational(0);
    } else if (sign == Sign::plus) {
      ev.vector = opt.alternate_format ? concat_product(s, bars) : concat_product(bars, s);
      ev.eigenvalue = ak;
    } else {
      std::vector<std::size_t> rev = iota_vec(kb);
      std::reverse(rev.begin(), rev.end());
      const AlgebraElement tail = opt.unreversed_second_summand ? bars : ordered_product(pb, rev);
      ev.vector = concat_product(bars, s) + concat_product(s, tail);
      ev.eigenvalue = sgn * ak;
    }
    return ev;
  }

  if (even) {
    if (kb > 0)
      throw OutsideBasis(format_word(w) + " has " + std::to_string(kb) +
                         " negating Lyndon factor(s); even-a rotation eigenvectors need none");
    ev.vector = s;
    ev.eigenvalue = ak;
    return ev;
  }
  for (unsigned mask = 0; mask < (1u << kb); ++mask) {
    std::vector<std::size_t> left, right;
    for (std::size_t i = 0; i < kb; ++i) ((mask >> i) & 1u ? left : right).push_back(i);
    std::reverse(left.begin(), left.end());
    ev.vector += concat_product(concat_product(ordered_product(pb, left), s), ordered_product(pb, right));
  }
  ev.eigenvalue = sign == Sign::plus ? ak : sgn * ak;
  return ev;
}

std::vector<Eigenvector> eigenbasis(int n, int max_label, int a, Sign sign, Involution flavor, bool all_words,
                                    const EigenOptions& opt) {
  std::vector<SignedWord> words = all_words ? hyperoct::all_words(n, max_label) : distinct_label_words(n, max_label);
  std::vector<char> keep(words.size(), 1);
  if (flavor == Involution::tau && a % 2 == 0) {
    for (std::size_t i = 0; i < words.size(); ++i)
      for (const auto& u : lyndon_factorize(words[i]).factors)
        if (classify_primitive(u, flavor) == Parity::negating) keep[i] = 0;
  }
  std::vector<SignedWord> kept;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (keep[i]) kept.push_back(words[i]);
  std::vector<Eigenvector> out(kept.size());
  parallel_for(kept.size(), [&](std::size_t i) { out[i] = build_eigenvector(kept[i], a, sign, flavor, opt); });
  return out;
}

}  // namespace hyperoct
