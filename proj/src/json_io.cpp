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
#include "hyperoct/json_io.hpp"

#include <iomanip>
#include <map>

#include "hyperoct/error.hpp"

namespace hyperoct {

json to_json(const SignedWord& w) { return json(w.to_ints()); }

json to_json(const AlgebraElement& x) {
  json arr = json::array();
  for (const auto& [w, c] : x) arr.push_back({{"coeff", to_string(c)}, {"word", to_json(w)}});
  return arr;
}

json to_json(const DescentOperator& t) {
  json arr = json::array();
  for (const auto& [d, c] : t.terms()) {
    json comp = json::array();
    for (const auto& p : d.parts()) comp.push_back({p.size, to_string(p.dec)});
    arr.push_back({{"coeff", to_string(c)}, {"comp", comp}});
  }
  return arr;
}

json to_json(const DoublePartition& dp) { return json::array({dp.lambda, dp.lambda_bar}); }

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json to_json(const Eigenvector& ev, bool full) {
  json j = {{"word", to_json(ev.word)}, {"eigenvalue", to_string(ev.eigenvalue)}, {"terms", ev.vector.size()}};
  if (full) j["vector"] = to_json(ev.vector);
  return j;
}

json to_json(const std::vector<SpectrumEntry>& spectrum) {
  json arr = json::array();
  for (const auto& e : spectrum)
    arr.push_back({{"eigenvalue", to_string(e.eigenvalue)}, {"multiplicity", to_json(e.multiplicity)}});
  return arr;
}

AlgebraElement element_from_json(const json& j) {
  AlgebraElement x;
  for (const auto& t : j) x.add(SignedWord::from_ints(t.at("word").get<std::vector<int>>()), parse_rational(t.at("coeff").get<std::string>()));
  return x;
}

static Decoration decoration_from_string(const std::string& s) {
  if (s == "plain") return Decoration::plain;
  if (s == "bar") return Decoration::bar;
  if (s == "tbar") return Decoration::tilde_bar;
  throw ParseError("unknown decoration '" + s + "'");
}

DescentOperator operator_from_json(const json& j, int degree, Involution flavor) {
  DescentOperator t(degree, flavor);
  for (const auto& term : j) {
    std::vector<DecoratedPart> parts;
    for (const auto& p : term.at("comp")) parts.push_back({p.at(0).get<int>(), decoration_from_string(p.at(1).get<std::string>())});
    t.add(DecoratedComposition(std::move(parts)), parse_rational(term.at("coeff").get<std::string>()));
  }
  return t;
}

json eigenvalue_table(const std::vector<std::pair<DoublePartition, Rational>>& values,
                      const std::vector<std::pair<DoublePartition, Integer>>* multiplicities) {
  std::map<Rational, std::pair<std::vector<DoublePartition>, Integer>, std::greater<>> groups;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto& g = groups[values[i].second];
    g.first.push_back(values[i].first);
    if (multiplicities) g.second += (*multiplicities)[i].second;
  }
  json arr = json::array();
  for (const auto& [v, g] : groups) {
    json e = {{"eigenvalue", to_string(v)}};
    if (multiplicities) e["multiplicity"] = to_json(g.second);
    json dps = json::array();
    for (const auto& dp : g.first) dps.push_back(to_json(dp));
    e["double_partitions"] = dps;
    arr.push_back(e);
  }
  return arr;
}

void write_transition_json(std::ostream& out, const TransitionMatrix& k) {
  const json spec = {{"n", k.spec.n}, {"a", k.spec.a}, {"sign", to_string(k.spec.sign)}, {"flavor", flavor_name(k.spec.flavor)}};
  out << "{\"spec\":" << spec.dump() << ",\"states\":[";
  for (std::size_t i = 0; i < k.states.size(); ++i) out << (i ? "," : "") << to_json(k.states[i]).dump();
  out << "],\"entries\":[";
  const int N = k.counts.rows;
  bool first = true;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      out << (first ? "" : ",") << '"' << to_string(k.entry(i, j)) << '"';
      first = false;
    }
  out << "]}\n";
}

void write_transition_csv(std::ostream& out, const TransitionMatrix& k) {
  out << "# lossy float rendering; exact values are in the JSON output\n";
  out << "state";
  for (const auto& s : k.states) out << ",\"" << format_word(s) << '"';
  out << '\n';
  out << std::setprecision(17);
  const int N = k.counts.rows;
  for (int i = 0; i < N; ++i) {
    out << '"' << format_word(k.states[static_cast<std::size_t>(i)]) << '"';
    for (int j = 0; j < N; ++j) out << ',' << static_cast<double>(k.counts(i, j)) / static_cast<double>(k.denominator);
    out << '\n';
  }
}

}  // namespace hyperoct
