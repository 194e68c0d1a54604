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

// Prints one PASS/FAIL line per acceptance criterion. Exit status 1 when any fails.
// Usage: hyperoct_acceptance [n_max=4] [seed]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hyperoct/checks.hpp"
#include "hyperoct/parallel.hpp"

using namespace hyperoct;
using checks::CheckResult;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<CheckResult>()> run;
};

const std::vector<Sign> kSigns{Sign::plus, Sign::minus};
const std::vector<Involution> kFlavors{Involution::tau, Involution::tau_tilde};

std::map<std::string, TransitionMatrix> g_chains;

const TransitionMatrix& chain(const ShuffleSpec& spec) {
  auto it = g_chains.find(spec.label());
  if (it == g_chains.end()) it = g_chains.emplace(spec.label(), transition_matrix(spec)).first;
  return it->second;
}

std::vector<ShuffleSpec> specs(int n_lo, int n_hi) {
  std::vector<ShuffleSpec> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int a : {2, 3})
      for (Sign s : kSigns)
        for (Involution f : kFlavors) out.emplace_back(n, a, s, f);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const int n_max = argc > 1 ? std::atoi(argv[1]) : 4;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20260101ULL;
  set_threads(max_threads());

  std::vector<Criterion> criteria;
  criteria.push_back({1, "worked examples reproduced exactly", [] { return checks::worked_examples(); }});
  criteria.push_back({2, "chain characteristic polynomials match the multiplicity table", [&] {
                        std::vector<CheckResult> out;
                        for (const auto& spec : specs(2, n_max)) out.push_back(checks::chain_spectrum(spec));
                        return out;
                      }});
  criteria.push_back({3, "composition law and riffle composition", [&] {
                        std::vector<CheckResult> out;
                        for (Involution f : kFlavors)
                          for (Algebra alg : {Algebra::shuffle, Algebra::concat}) {
                            for (int n = 1; n <= std::min(n_max, 3); ++n)
                              out.push_back(checks::composition_exhaustive(n, 3, f, alg));
                            if (n_max >= 4) out.push_back(checks::composition_random(4, 50, f, alg, seed));
                          }
                        for (int n = 1; n <= std::min(n_max, 3); ++n)
                          for (auto& r : checks::riffle_composition(n, 3)) out.push_back(std::move(r));
                        return out;
                      }});
  criteria.push_back({4, "eigenbasis vectors satisfy their eigen-equations and are independent", [&] {
                        std::vector<CheckResult> out;
                        for (int n = 1; n <= n_max; ++n)
                          for (int a : {2, 3})
                            for (Sign s : kSigns)
                              for (Involution f : kFlavors) out.push_back(checks::eigenbasis_suite(n, a, s, f));
                        return out;
                      }});
  criteria.push_back({5, "stochastic rows, unique uniform stationary law, subdominant eigenfunctions", [&] {
                        std::vector<CheckResult> out;
                        for (const auto& spec : specs(1, n_max)) {
                          const auto& k = chain(spec);
                          out.push_back(checks::rows_sum_to_one(k));
                          out.push_back(checks::stationary_unique(k));
                          if (spec.n >= 2) out.push_back(checks::subdominant(k));
                        }
                        return out;
                      }});
  criteria.push_back({6, "descent expectations, exact and Monte Carlo", [&] {
                        std::vector<CheckResult> out;
                        for (const auto& spec : specs(1, n_max)) {
                          if (spec.flavor != Involution::tau_tilde) continue;
                          out.push_back(checks::descent_expectation_exact(chain(spec), 4));
                          if (spec.n < 3) continue;
                          for (int t : {1, 2, 4})
                            out.push_back(checks::descent_expectation_monte_carlo(spec, t, 100000, seed));
                        }
                        return out;
                      }});
  criteria.push_back({7, "Stirling cross-checks", [] {
                        return std::vector<CheckResult>{checks::stirling_closed_vs_recursive(8),
                                                        checks::table1_totals(8), checks::stirling_lr_minima(7)};
                      }});

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty();
    std::size_t report_only = 0;
    for (const auto& r : results) {
      ok = ok && r.passed();
      report_only += r.status == checks::Status::report_only;
      if (!r.passed()) std::cout << "    fail: " << r.name << " [" << r.scope << "] " << r.detail << "\n";
      if (r.status == checks::Status::report_only)
        std::cout << "    note: " << r.name << " [" << r.scope << "] " << r.detail << "\n";
    }
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    failed += !ok;
    char line[256];
    std::snprintf(line, sizeof line, "%s criterion %d: %s (%zu checks, %zu report-only, %.1fs)", ok ? "PASS" : "FAIL",
                  c.id, c.title.c_str(), results.size(), report_only, secs);
    std::cout << line << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
