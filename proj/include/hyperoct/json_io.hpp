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
#ifndef HYPEROCT_JSON_IO_HPP
#define HYPEROCT_JSON_IO_HPP

#include <json.hpp>
#include <ostream>

#include "hyperoct/descent.hpp"
#include "hyperoct/lyndon.hpp"
#include "hyperoct/markov.hpp"
#include "hyperoct/spectral.hpp"

namespace hyperoct {

using json = nlohmann::json;

json to_json(const SignedWord& w);
json to_json(const AlgebraElement& x);
json to_json(const DescentOperator& t);
json to_json(const DoublePartition& dp);
json to_json(const Integer& z);  // number when it fits in int64, else string
json to_json(const Eigenvector& ev, bool full);
json to_json(const std::vector<SpectrumEntry>& spectrum);

AlgebraElement element_from_json(const json& j);
DescentOperator operator_from_json(const json& j, int degree, Involution flavor);

// Groups double partitions by eigenvalue; multiplicities (optional) are summed per group.
json eigenvalue_table(const std::vector<std::pair<DoublePartition, Rational>>& values,
                      const std::vector<std::pair<DoublePartition, Integer>>* multiplicities);

// Streams {"spec":…, "states":[…], "entries":["p/q",…]} without building a DOM.
void write_transition_json(std::ostream& out, const TransitionMatrix& k);
// Lossy float CSV, first column the state.
void write_transition_csv(std::ostream& out, const TransitionMatrix& k);

}  // namespace hyperoct

#endif
