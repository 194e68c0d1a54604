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
#include "hyperoct/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hyperoct/error.hpp"

namespace hyperoct {

SignedLetter::SignedLetter(int v, bool b) : value(v), barred(b) {
  if (v < 1) throw ParseError("letter value must be >= 1, got " + std::to_string(v));
}

SignedLetter SignedLetter::from_int(int k) {
  if (k == 0) throw ParseError("0 is not a signed letter");
  return SignedLetter(k < 0 ? -k : k, k < 0);
}

SignedWord::SignedWord(std::initializer_list<int> ints) {
  letters_.reserve(ints.size());
  for (int k : ints) letters_.push_back(SignedLetter::from_int(k));
}

SignedWord SignedWord::from_ints(const std::vector<int>& ints) {
  std::vector<SignedLetter> ls;
  ls.reserve(ints.size());
  for (int k : ints) ls.push_back(SignedLetter::from_int(k));
  return SignedWord(std::move(ls));
}

SignedWord SignedWord::slice(std::size_t from, std::size_t len) const {
  return SignedWord(std::vector<SignedLetter>(letters_.begin() + from, letters_.begin() + from + len));
}

std::vector<int> SignedWord::to_ints() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.to_int());
  return out;
}

int SignedWord::max_label() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.value);
  return m;
}

bool SignedWord::has_distinct_labels() const {
  std::vector<int> v;
  for (const auto& l : letters_) v.push_back(l.value);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::size_t SignedWordHash::operator()(const SignedWord& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& l : w) {
    h ^= static_cast<std::uint64_t>(l.key());
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

AlphabetSpec::AlphabetSpec(int n) : max_label(n) {
  if (n < 1) throw ParseError("alphabet size must be >= 1");
}

bool AlphabetSpec::contains(const SignedWord& w) const { return w.max_label() <= max_label; }

SignedWord parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> ints;
  while (in >> tok) {
    if (tok == "e") continue;
    std::size_t pos = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad letter '" + tok + "'");
    ints.push_back(k);
  }
  return SignedWord::from_ints(ints);
}

std::string format_word(const SignedWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i].to_int());
  }
  return s;
}

SignedWord tau(const SignedWord& w) {
  std::vector<SignedLetter> ls;
  ls.reserve(w.size());
  for (const auto& l : w) ls.push_back(l.flipped());
  return SignedWord(std::move(ls));
}

SignedWord tau_tilde(const SignedWord& w) {
  std::vector<SignedLetter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ls.push_back(it->flipped());
  return SignedWord(std::move(ls));
}

SignedWord concat_product(const std::vector<SignedWord>& factors) {
  SignedWord out;
  for (const auto& f : factors) out.append(f);
  return out;
}

std::vector<SignedWord> all_words(int length, int max_label) {
  std::vector<SignedWord> out;
  std::vector<int> digits(length, 0);  // index into the 2N ordered letters
  const int base = 2 * max_label;
  while (true) {
    std::vector<SignedLetter> ls;
    for (int d : digits) ls.emplace_back(d / 2 + 1, d % 2 == 0);
    out.emplace_back(std::move(ls));
    int i = length - 1;
    while (i >= 0 && digits[i] == base - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

std::vector<SignedWord> distinct_label_words(int length, int max_label) {
  std::vector<SignedWord> out;
  std::vector<int> labels(max_label);
  std::iota(labels.begin(), labels.end(), 1);
  // choose an ordered selection of labels, then sign patterns
  std::vector<bool> used(max_label + 1, false);
  std::vector<SignedLetter> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= max_label; ++v) {
      if (used[v]) continue;
      used[v] = true;
      for (bool b : {true, false}) {
        cur.emplace_back(v, b);
        self(self);
        cur.pop_back();
      }
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<SignedWord> signed_permutations(int n) { return distinct_label_words(n, n); }

}  // namespace hyperoct
