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
#ifndef HYPEROCT_SPECTRAL_HPP
#define HYPEROCT_SPECTRAL_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hyperoct/descent.hpp"
#include "hyperoct/polynomial.hpp"

namespace hyperoct {

// (λ, λ̄) with both parts sorted descending.
struct DoublePartition {
  std::vector<int> lambda;
  std::vector<int> lambda_bar;

  DoublePartition() = default;
  DoublePartition(std::vector<int> l, std::vector<int> lb);
  int size() const;
  friend bool operator==(const DoublePartition&, const DoublePartition&) = default;
  friend auto operator<=>(const DoublePartition&, const DoublePartition&) = default;
};

std::string format_double_partition(const DoublePartition& dp);
std::vector<std::vector<int>> partitions(int n);
std::vector<DoublePartition> double_partitions(int n);

// Index of λ_j (barred = false) or λ̄_j (barred = true), 1-based.
struct PartIndex {
  int index = 1;
  bool barred = false;
  friend bool operator==(const PartIndex&, const PartIndex&) = default;
  friend auto operator<=>(const PartIndex&, const PartIndex&) = default;
};

struct SetComposition {
  std::vector<std::vector<PartIndex>> blocks;
  friend bool operator==(const SetComposition&, const SetComposition&) = default;
  friend auto operator<=>(const SetComposition&, const SetComposition&) = default;
};

// Blocks separated by '|', entries as signed ints: "1 -2|-1 2|-3".
std::string format_set_composition(const SetComposition& b);

std::vector<SetComposition> compatible_set_compositions(const DoublePartition& dp, const std::vector<int>& dplus);
Integer beta(const DoublePartition& dp, const DecoratedComposition& d);
std::vector<std::pair<DoublePartition, Rational>> operator_eigenvalues(const DescentOperator& t);

// b[i-1], b_bar[i-1] count invariant/negating primitives of degree i.
std::vector<std::pair<DoublePartition, Integer>> multiplicity_genfun(const std::vector<long>& b,
                                                                     const std::vector<long>& b_bar, int n);

struct SpectrumEntry {
  Rational eigenvalue;
  Integer multiplicity;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Aggregated by value, sorted by decreasing eigenvalue, zero multiplicities dropped.
std::vector<SpectrumEntry> aggregate_spectrum(const std::vector<SpectrumEntry>& entries);

std::vector<SpectrumEntry> riffle_spectrum(int a, Sign sign, Involution flavor, const std::vector<long>& b,
                                           const std::vector<long>& b_bar, int n);

Integer stirling_c(int n, int k);
Integer hyperoct_stirling(int n, int k, int k_bar);
Integer hyperoct_stirling_recursive(int n, int k, int k_bar);

// Multiplicities of the eigenvalues of (1/a^n)·orif on signed permutations of n.
std::vector<SpectrumEntry> shuffle_multiplicities(int a, Sign sign, Involution flavor, int n);

}  // namespace hyperoct

#endif
