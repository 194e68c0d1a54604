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
#ifndef HYPEROCT_WORD_HPP
#define HYPEROCT_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperoct {

// A card label with an orientation bit. Ordered 1̄ < 1 < 2̄ < 2 < ...
struct SignedLetter {
  int value = 1;
  bool barred = false;

  SignedLetter() = default;
  SignedLetter(int v, bool b);

  // -k is k̄, +k is k.
  static SignedLetter from_int(int k);
  int to_int() const { return barred ? -value : value; }
  int key() const { return 2 * value - (barred ? 1 : 0); }
  SignedLetter flipped() const { return SignedLetter(value, !barred); }

  friend bool operator==(const SignedLetter& x, const SignedLetter& y) {
    return x.value == y.value && x.barred == y.barred;
  }
  friend std::strong_ordering operator<=>(const SignedLetter& x, const SignedLetter& y) {
    return x.key() <=> y.key();
  }
};

class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<SignedLetter> letters) : letters_(std::move(letters)) {}
  // Integer shorthand: {-4, 3, 5}.
  SignedWord(std::initializer_list<int> ints);
  static SignedWord from_ints(const std::vector<int>& ints);

  std::size_t size() const { return letters_.size(); }
  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const SignedLetter& operator[](std::size_t i) const { return letters_[i]; }
  SignedLetter& operator[](std::size_t i) { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<SignedLetter>& letters() const { return letters_; }
  void push_back(SignedLetter l) { letters_.push_back(l); }
  void append(const SignedWord& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }

  SignedWord slice(std::size_t from, std::size_t len) const;
  std::vector<int> to_ints() const;
  int max_label() const;
  bool has_distinct_labels() const;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
  friend std::strong_ordering operator<=>(const SignedWord& x, const SignedWord& y) {
    return x.letters_ <=> y.letters_;
  }

 private:
  std::vector<SignedLetter> letters_;
};

struct SignedWordHash {
  std::size_t operator()(const SignedWord& w) const noexcept;
};

struct AlphabetSpec {
  int max_label = 1;
  explicit AlphabetSpec(int n);
  bool contains(const SignedWord& w) const;
};

// "e" for the empty word, otherwise space separated nonzero ints.
SignedWord parse_word(const std::string& text);
std::string format_word(const SignedWord& w);

SignedWord tau(const SignedWord& w);
SignedWord tau_tilde(const SignedWord& w);
SignedWord concat_product(const std::vector<SignedWord>& factors);

// All words of the given length over labels 1..max_label.
std::vector<SignedWord> all_words(int length, int max_label);
// All signed permutations of 1..n in increasing word order.
std::vector<SignedWord> signed_permutations(int n);
// Words of the given length with distinct labels from 1..max_label.
std::vector<SignedWord> distinct_label_words(int length, int max_label);

}  // namespace hyperoct

#endif
