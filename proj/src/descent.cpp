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
#include "hyperoct/descent.hpp"

#include <algorithm>
#include <sstream>

#include "hyperoct/error.hpp"

namespace hyperoct {

Decoration decoration_for(Involution f) { return f == Involution::tau ? Decoration::bar : Decoration::tilde_bar; }

std::string to_string(Decoration d) {
  switch (d) {
    case Decoration::plain: return "plain";
    case Decoration::bar: return "bar";
    case Decoration::tilde_bar: return "tbar";
  }
  return "plain";
}

DecoratedComposition::DecoratedComposition(std::vector<DecoratedPart> parts) : parts_(std::move(parts)) {
  bool has_bar = false, has_tilde = false;
  for (const auto& p : parts_) {
    if (p.size < 0) throw SizeMismatch("negative part in composition");
    has_bar |= p.dec == Decoration::bar;
    has_tilde |= p.dec == Decoration::tilde_bar;
  }
  if (has_bar && has_tilde) throw FlavorMismatch("bar and tilde-bar parts in one composition");
}

int DecoratedComposition::total() const {
  int s = 0;
  for (const auto& p : parts_) s += p.size;
  return s;
}

std::vector<int> DecoratedComposition::plus() const {
  std::vector<int> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.size);
  return out;
}

std::optional<Involution> DecoratedComposition::flavor() const {
  for (const auto& p : parts_) {
    if (p.dec == Decoration::bar) return Involution::tau;
    if (p.dec == Decoration::tilde_bar) return Involution::tau_tilde;
  }
  return std::nullopt;
}

DecoratedComposition parse_composition(const std::string& text) {
  std::vector<DecoratedPart> parts;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw ParseError("empty part in '" + text + "'");
    DecoratedPart p;
    const char last = tok.back();
    if (last == 'b' || last == 't') {
      p.dec = last == 'b' ? Decoration::bar : Decoration::tilde_bar;
      tok.pop_back();
    }
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
      throw ParseError("bad part in '" + text + "'");
    p.size = std::stoi(tok);
    parts.push_back(p);
  }
  return DecoratedComposition(std::move(parts));
}

std::string format_composition(const DecoratedComposition& d) {
  std::string s;
  for (std::size_t i = 0; i < d.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i].size);
    if (d[i].dec == Decoration::bar) s += 'b';
    if (d[i].dec == Decoration::tilde_bar) s += 't';
  }
  return s;
}

void DescentOperator::add(const DecoratedComposition& d, const Rational& c) {
  if (d.total() != degree_)
    throw SizeMismatch("composition of " + std::to_string(d.total()) + " in operator of degree " +
                       std::to_string(degree_));
  if (auto f = d.flavor(); f && *f != flavor_) throw FlavorMismatch("operator flavor differs from composition");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational DescentOperator::coeff(const DecoratedComposition& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::vector<int>> weak_compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == parts - 1) {
      cur[i] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[i] = v;
      self(self, i + 1, rem - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<DecoratedComposition> decorated_compositions(int n, int max_length, Involution flavor) {
  std::vector<DecoratedComposition> out;
  const Decoration mark = decoration_for(flavor);
  for (int l = 1; l <= max_length; ++l) {
    for (const auto& sizes : weak_compositions(n, l)) {
      for (unsigned mask = 0; mask < (1u << l); ++mask) {
        std::vector<DecoratedPart> parts;
        for (int i = 0; i < l; ++i) parts.push_back({sizes[i], (mask >> i) & 1u ? mark : Decoration::plain});
        out.emplace_back(std::move(parts));
      }
    }
  }
  return out;
}

AlgebraElement apply_elementary(const DecoratedComposition& d, const SignedWord& w, Algebra alg) {
  if (d.total() != static_cast<int>(w.size()))
    throw SizeMismatch("composition of " + std::to_string(d.total()) + " applied to word of degree " +
                       std::to_string(w.size()));
  const std::vector<int> sizes = d.plus();
  const Involution f = d.flavor().value_or(Involution::tau);
  AlgebraElement out;
  if (alg == Algebra::shuffle) {
    auto pieces = deconcatenate(w, sizes);
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (d[i].decorated()) pieces[i] = apply_involution(pieces[i], f);
    for_each_shuffle(pieces, [&](const SignedWord& v) { out.add(v, 1); });
  } else {
    for_each_deshuffle(w, sizes, [&](const std::vector<SignedWord>& slots) {
      SignedWord v;
      for (std::size_t i = 0; i < slots.size(); ++i) v.append(d[i].decorated() ? apply_involution(slots[i], f) : slots[i]);
      out.add(v, 1);
    });
  }
  return out;
}

AlgebraElement apply_elementary(const DecoratedComposition& d, const AlgebraElement& x, Algebra alg) {
  AlgebraElement out;
  for (const auto& [w, c] : x) out.add(apply_elementary(d, w, alg), c);
  return out;
}

AlgebraElement apply_operator(const DescentOperator& t, const AlgebraElement& x, Algebra alg) {
  const std::size_t deg = x.degree();
  if (!x.is_zero() && static_cast<int>(deg) != t.degree())
    throw SizeMismatch("operator of degree " + std::to_string(t.degree()) + " applied to element of degree " +
                       std::to_string(deg));
  AlgebraElement out;
  for (const auto& [d, c] : t.terms()) out.add(apply_elementary(d, x, alg), c);
  return out;
}

AlgebraElement apply_operator(const DescentOperator& t, const SignedWord& w, Algebra alg) {
  return apply_operator(t, AlgebraElement(w), alg);
}

DescentOperator riffle_operator(int a, Sign sign, Involution flavor, int n) {
  if (a < 1) throw SizeMismatch("riffle operator needs a >= 1");
  DescentOperator op(n, flavor);
  const Decoration mark = decoration_for(flavor);
  for (const auto& sizes : weak_compositions(n, a)) {
    std::vector<DecoratedPart> parts;
    for (int i = 0; i < a; ++i) {
      const bool even_index = (i + 1) % 2 == 0;
      const bool marked = sign == Sign::plus ? even_index : !even_index;
      parts.push_back({sizes[i], marked ? mark : Decoration::plain});
    }
    op.add(DecoratedComposition(std::move(parts)), 1);
  }
  return op;
}

static Decoration common_mark(const DecoratedComposition& d, const DecoratedComposition& dp) {
  auto f = d.flavor();
  auto g = dp.flavor();
  if (f && g && *f != *g) throw FlavorMismatch("compositions carry different decoration kinds");
  return decoration_for(f ? *f : g.value_or(Involution::tau));
}

std::vector<CompatibleMatrix> compatible_matrices(const DecoratedComposition& d, const DecoratedComposition& dp) {
  if (d.total() != dp.total())
    throw SizeMismatch("totals " + std::to_string(d.total()) + " and " + std::to_string(dp.total()) + " differ");
  const Decoration mark = common_mark(d, dp);
  const int r = static_cast<int>(d.length());
  const int c = static_cast<int>(dp.length());
  std::vector<CompatibleMatrix> out;
  if (r == 0 || c == 0) {
    if (d.total() == 0) out.push_back({r, c, {}});
    return out;
  }
  std::vector<int> rowrem = d.plus();
  std::vector<int> colrem = dp.plus();
  std::vector<int> cells(static_cast<std::size_t>(r * c), 0);
  auto emit = [&]() {
    CompatibleMatrix m{r, c, {}};
    m.entries.reserve(cells.size());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        const bool marked = d[i].decorated() != dp[j].decorated();
        m.entries.push_back({cells[static_cast<std::size_t>(i * c + j)], marked ? mark : Decoration::plain});
      }
    out.push_back(std::move(m));
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == r * c) {
      emit();
      return;
    }
    const int i = k / c, j = k % c;
    const int cap = std::min(rowrem[i], colrem[j]);
    int lo = 0, hi = cap;
    if (j == c - 1) lo = hi = rowrem[i];
    if (i == r - 1) {
      if (j == c - 1 && rowrem[i] != colrem[j]) return;
      lo = hi = colrem[j];
    }
    if (hi > cap) return;
    for (int v = lo; v <= hi; ++v) {
      cells[static_cast<std::size_t>(k)] = v;
      rowrem[i] -= v;
      colrem[j] -= v;
      self(self, k + 1);
      rowrem[i] += v;
      colrem[j] += v;
    }
  };
  rec(rec, 0);
  return out;
}

DecoratedComposition wcomp(const CompatibleMatrix& m) { return DecoratedComposition(m.entries); }

DecoratedComposition wcomp_tilde(const DecoratedComposition& d, const CompatibleMatrix& m) {
  if (static_cast<int>(d.length()) != m.rows) throw SizeMismatch("row composition does not match matrix");
  std::vector<DecoratedPart> parts;
  parts.reserve(m.entries.size());
  for (int i = 0; i < m.rows; ++i) {
    if (d[i].decorated()) {
      for (int j = m.cols - 1; j >= 0; --j) parts.push_back(m.at(i, j));
    } else {
      for (int j = 0; j < m.cols; ++j) parts.push_back(m.at(i, j));
    }
  }
  return DecoratedComposition(std::move(parts));
}

DescentOperator compose_law(const DecoratedComposition& d, const DecoratedComposition& dp, Algebra alg) {
  const Decoration mark = common_mark(d, dp);
  const Involution flavor = mark == Decoration::bar ? Involution::tau : Involution::tau_tilde;
  DescentOperator out(d.total(), flavor);
  // commutative: rows follow D'; cocommutative: rows follow D
  const DecoratedComposition& rows = alg == Algebra::shuffle ? dp : d;
  const DecoratedComposition& cols = alg == Algebra::shuffle ? d : dp;
  for (const auto& m : compatible_matrices(rows, cols))
    out.add(flavor == Involution::tau_tilde ? wcomp_tilde(rows, m) : wcomp(m), 1);
  return out;
}

}  // namespace hyperoct
