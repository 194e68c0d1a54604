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
#include "hyperoct/algebra.hpp"

#include <numeric>

#include "hyperoct/error.hpp"

namespace hyperoct {

std::string to_string(Algebra a) { return a == Algebra::shuffle ? "shuffle" : "concat"; }
std::string to_string(Involution f) { return f == Involution::tau ? "tau" : "tau_tilde"; }
std::string to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

AlgebraElement::AlgebraElement(const SignedWord& w, const Rational& c) { add(w, c); }

void AlgebraElement::add(const SignedWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AlgebraElement::add(const AlgebraElement& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, k] : x.terms_) add(w, k * c);
}

Rational AlgebraElement::coeff(const SignedWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::size_t d = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_)
    if (w.size() != d) return false;
  return true;
}

std::size_t AlgebraElement::degree() const {
  if (!is_homogeneous()) throw NotHomogeneous("element mixes degrees");
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  add(y, 1);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& y) {
  add(y, -1);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, k] : terms_) k *= c;
  return *this;
}

void TensorElement::add(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TensorElement::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void for_each_shuffle(const std::vector<SignedWord>& factors, const std::function<void(const SignedWord&)>& f) {
  std::size_t total = 0;
  for (const auto& w : factors) total += w.size();
  std::vector<std::size_t> pos(factors.size(), 0);
  std::vector<SignedLetter> cur;
  cur.reserve(total);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == total) {
      f(SignedWord(cur));
      return;
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (pos[i] == factors[i].size()) continue;
      cur.push_back(factors[i][pos[i]++]);
      self(self);
      --pos[i];
      cur.pop_back();
    }
  };
  rec(rec);
}

static void check_parts(std::size_t degree, const std::vector<int>& parts) {
  long s = 0;
  for (int p : parts) {
    if (p < 0) throw SizeMismatch("negative part");
    s += p;
  }
  if (s != static_cast<long>(degree))
    throw SizeMismatch("parts sum to " + std::to_string(s) + ", word has degree " + std::to_string(degree));
}

void for_each_deshuffle(const SignedWord& w, const std::vector<int>& parts,
                        const std::function<void(const std::vector<SignedWord>&)>& f) {
  check_parts(w.size(), parts);
  std::vector<std::vector<SignedLetter>> slots(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) slots[i].reserve(parts[i]);
  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == w.size()) {
      std::vector<SignedWord> out;
      out.reserve(slots.size());
      for (const auto& s : slots) out.emplace_back(s);
      f(out);
      return;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (static_cast<int>(slots[i].size()) == parts[i]) continue;
      slots[i].push_back(w[p]);
      self(self, p + 1);
      slots[i].pop_back();
    }
  };
  rec(rec, 0);
}

AlgebraElement shuffle_product(const std::vector<SignedWord>& factors) {
  AlgebraElement out;
  for_each_shuffle(factors, [&](const SignedWord& w) { out.add(w, 1); });
  return out;
}

AlgebraElement shuffle_product(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      const Rational c = cu * cv;
      for_each_shuffle({u, v}, [&](const SignedWord& w) { out.add(w, c); });
    }
  return out;
}

AlgebraElement concat_product(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add(concat_product({u, v}), cu * cv);
  return out;
}

AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y, Algebra alg) {
  return alg == Algebra::shuffle ? shuffle_product(x, y) : concat_product(x, y);
}

AlgebraElement product(const std::vector<AlgebraElement>& factors, Algebra alg) {
  AlgebraElement acc(SignedWord{});
  for (const auto& f : factors) acc = product(acc, f, alg);
  return acc;
}

std::vector<SignedWord> deconcatenate(const SignedWord& w, const std::vector<int>& parts) {
  check_parts(w.size(), parts);
  std::vector<SignedWord> out;
  out.reserve(parts.size());
  std::size_t at = 0;
  for (int p : parts) {
    out.push_back(w.slice(at, p));
    at += p;
  }
  return out;
}

TensorElement deshuffle(const SignedWord& w, const std::vector<int>& parts) {
  TensorElement out;
  for_each_deshuffle(w, parts, [&](const std::vector<SignedWord>& t) { out.add(t, 1); });
  return out;
}

TensorElement coproduct(const AlgebraElement& x, const std::vector<int>& parts, Algebra alg) {
  TensorElement out;
  for (const auto& [w, c] : x) {
    if (alg == Algebra::shuffle) {
      out.add(deconcatenate(w, parts), c);
    } else {
      for_each_deshuffle(w, parts, [&](const std::vector<SignedWord>& t) { out.add(t, c); });
    }
  }
  return out;
}

SignedWord apply_involution(const SignedWord& w, Involution f) {
  return f == Involution::tau ? tau(w) : tau_tilde(w);
}

AlgebraElement apply_involution(const AlgebraElement& x, Involution f) {
  AlgebraElement out;
  for (const auto& [w, c] : x) out.add(apply_involution(w, f), c);
  return out;
}

AlgebraElement tau(const AlgebraElement& x) { return apply_involution(x, Involution::tau); }
AlgebraElement tau_tilde(const AlgebraElement& x) { return apply_involution(x, Involution::tau_tilde); }

AlgebraElement project_invariant(const AlgebraElement& x, Involution which, Sign sign) {
  AlgebraElement out = x;
  out.add(apply_involution(x, which), sign == Sign::plus ? 1 : -1);
  out *= Rational(1, 2);
  return out;
}

AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y) {
  return concat_product(x, y) - concat_product(y, x);
}

bool is_primitive(const AlgebraElement& x, Algebra alg) {
  const std::size_t n = x.degree();
  if (x.is_zero()) return true;
  if (n == 0) return false;
  for (std::size_t i = 1; i < n; ++i) {
    if (!coproduct(x, {static_cast<int>(i), static_cast<int>(n - i)}, alg).is_zero()) return false;
  }
  return true;
}

}  // namespace hyperoct
