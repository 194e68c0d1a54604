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
// hyperoct: command-line front end.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>

#include "hyperoct/checks.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/json_io.hpp"
#include "hyperoct/kernels.hpp"
#include "hyperoct/lyndon.hpp"
#include "hyperoct/parallel.hpp"

using namespace hyperoct;

namespace {

constexpr std::uint64_t kFallbackSeed = 20260101;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("HYPEROCT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ParseError(std::string("HYPEROCT_SEED is not an unsigned integer: ") + s);
    }
  }
  return kFallbackSeed;
}

const std::map<std::string, Sign> kSigns = {{"plus", Sign::plus}, {"minus", Sign::minus}};
const std::map<std::string, Involution> kFlavors = {{"rotation", Involution::tau}, {"flip", Involution::tau_tilde}};
const std::map<std::string, Algebra> kAlgebras = {{"commutative", Algebra::shuffle},
                                                  {"cocommutative", Algebra::concat}};

struct Chain {
  int n = 3;
  int a = 2;
  Sign sign = Sign::plus;
  Involution flavor = Involution::tau_tilde;
};

void add_chain(CLI::App* app, Chain& c, bool with_n = true) {
  if (with_n) app->add_option("--n", c.n, "deck size / degree")->check(CLI::PositiveNumber);
  app->add_option("--a", c.a, "number of piles")->check(CLI::PositiveNumber);
  app->add_option("--sign", c.sign, "plus | minus")->transform(CLI::CheckedTransformer(kSigns));
  app->add_option("--flavor", c.flavor, "rotation | flip")->transform(CLI::CheckedTransformer(kFlavors));
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << '\n';
}

json chain_json(const Chain& c) {
  return {{"n", c.n}, {"a", c.a}, {"sign", to_string(c.sign)}, {"flavor", flavor_name(c.flavor)}};
}

// "1b,2" or "1b,2 + 2,1b"; a leading "k*" sets a coefficient.
DescentOperator parse_operator(const std::string& text, Involution fallback) {
  std::vector<std::pair<Rational, DecoratedComposition>> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = text.find('+', start);
    std::string piece = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    Rational c = 1;
    if (const auto star = piece.find('*'); star != std::string::npos) {
      c = parse_rational(piece.substr(0, star));
      piece = piece.substr(star + 1);
    }
    terms.emplace_back(c, parse_composition(piece));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  Involution flavor = fallback;
  for (const auto& [c, d] : terms)
    if (auto f = d.flavor()) flavor = *f;
  DescentOperator t(terms.front().second.total(), flavor);
  for (const auto& [c, d] : terms) t.add(d, c);
  return t;
}

AlgebraElement apply_riffle(const Eigenvector& ev, const Chain& c) {
  return apply_operator(riffle_operator(c.a, c.sign, c.flavor, static_cast<int>(ev.word.size())), ev.vector,
                        Algebra::concat);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperoctahedral descent operators and riffle-shuffle chains"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");

  // spectrum
  Chain sc;
  std::string sc_op, sc_out;
  int sc_alphabet = 0;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
  add_chain(spectrum, sc);
  spectrum->add_option("--op", sc_op, "descent operator, e.g. \"1b,2\" or \"2*1t,2 + 3\"");
  spectrum->add_option("--alphabet", sc_alphabet, "with --op: multiplicities on words over labels 1..N");
  spectrum->add_option("--out", sc_out, "write JSON here");

  // eigenvector
  Chain ec;
  std::string ec_word, ec_out;
  int ec_alphabet = 0;
  bool ec_verify = false, ec_full = false, ec_alt = false, ec_unrev = false;
  auto* eigvec = app.add_subcommand("eigenvector", "eigenvector attached to one word");
  add_chain(eigvec, ec, false);
  eigvec->add_option("--word", ec_word, "signed word, e.g. \"-4 3 5\"")->required();
  eigvec->add_option("--alphabet", ec_alphabet, "reject words using labels above N");
  eigvec->add_flag("--verify", ec_verify, "apply the riffle operator and check the eigen-equation");
  eigvec->add_flag("--full", ec_full, "include the full vector");
  eigvec->add_flag("--alternate-format", ec_alt, "flip, odd a, plus: put the negating product on the right");
  eigvec->add_flag("--unreversed", ec_unrev, "flip, odd a, minus: unreversed second summand (not an eigenvector)");
  eigvec->add_option("--out", ec_out, "write JSON here");

  // eigenbasis
  Chain bc;
  std::string bc_out;
  int bc_alphabet = 0;
  bool bc_all = false, bc_verify = false, bc_full = false;
  auto* eigbasis = app.add_subcommand("eigenbasis", "eigenvectors indexed by words of degree n");
  add_chain(eigbasis, bc);
  eigbasis->add_option("--alphabet", bc_alphabet, "labels 1..N (default n)");
  eigbasis->add_flag("--all-words", bc_all, "index by every word, not only distinct-label words");
  eigbasis->add_flag("--verify", bc_verify, "check every eigen-equation");
  eigbasis->add_flag("--full", bc_full, "include full vectors");
  eigbasis->add_option("--out", bc_out, "write JSON here");

  // matrix
  Chain mc;
  std::string mc_out, mc_csv;
  int mc_cap = kDefaultMatrixCap;
  auto* matrix = app.add_subcommand("matrix", "exact transition matrix on signed permutations");
  add_chain(matrix, mc);
  matrix->add_option("--out", mc_out, "JSON file (stdout when omitted)");
  matrix->add_option("--csv", mc_csv, "also write lossy float CSV");
  matrix->add_option("--max-n", mc_cap,
                     "size cap; n=5 is 3840 states, ~118 MB dense int64, n=6 would be ~17 GB");

  // simulate
  Chain mcs;
  int steps = 1;
  long trials = 100000;
  std::uint64_t seed = 0;
  std::string stat = "descents", start, sim_out;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo shuffles");
  add_chain(simulate, mcs);
  simulate->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "default: $HYPEROCT_SEED");
  simulate->add_option("--stat", stat, "descents")->check(CLI::IsMember({"descents"}));
  simulate->add_option("--start", start, "starting signed permutation (default identity)");
  simulate->add_option("--out", sim_out, "write JSON here");

  // compose
  std::string cd, cdp, c_out;
  Algebra c_alg = Algebra::shuffle;
  bool c_verify = false;
  auto* compose = app.add_subcommand("compose", "expand (m∘Δ_D)∘(m∘Δ_D') with D' applied first");
  compose->add_option("--d", cd, "outer composition")->required();
  compose->add_option("--dp", cdp, "inner composition")->required();
  compose->add_option("--algebra", c_alg, "commutative | cocommutative")
      ->transform(CLI::CheckedTransformer(kAlgebras));
  compose->add_flag("--verify", c_verify, "compare against matrix composition on signed permutations");
  compose->add_option("--out", c_out, "write JSON here");

  // stationary
  Chain stc;
  std::string st_out;
  auto* stationary = app.add_subcommand("stationary", "stationary distribution and fixed-space dimension");
  add_chain(stationary, stc);
  stationary->add_option("--out", st_out, "write JSON here");

  // verify
  std::string suite = "all", v_out;
  int n_max = 3, jobs = 1;
  std::uint64_t v_seed = 0;
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember(checks::suite_names()));
  verify->add_option("--n-max", n_max, "largest deck size for chain checks (4 runs the exact n=4 spectra)")
      ->check(CLI::Range(1, 8));
  verify->add_option("--jobs", jobs, "concurrent checks")->check(CLI::PositiveNumber);
  verify->add_option("--seed", v_seed, "default: $HYPEROCT_SEED");
  verify->add_option("--out", v_out, "write the report here");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_threads(threads);

  try {
    if (*spectrum) {
      if (sc_op.empty()) {
        const auto table = shuffle_multiplicities(sc.a, sc.sign, sc.flavor, sc.n);
        emit({{"chain", chain_json(sc)}, {"spectrum", to_json(table)}}, sc_out);
      } else {
        const DescentOperator t = parse_operator(sc_op, sc.flavor);
        const auto values = operator_eigenvalues(t);
        json j = {{"operator", to_json(t)}, {"degree", t.degree()}, {"flavor", to_string(t.flavor())}};
        if (sc_alphabet > 0) {
          const auto [b, bb] = primitive_counts(sc_alphabet, t.degree(), t.flavor());
          const auto mult = multiplicity_genfun(b, bb, t.degree());
          j["alphabet"] = sc_alphabet;
          j["eigenvalues"] = eigenvalue_table(values, &mult);
        } else {
          j["eigenvalues"] = eigenvalue_table(values, nullptr);
        }
        emit(j, sc_out);
      }
    } else if (*eigvec) {
      EigenOptions opt;
      opt.alternate_format = ec_alt;
      opt.unreversed_second_summand = ec_unrev;
      if (ec_alphabet > 0) opt.alphabet = AlphabetSpec(ec_alphabet);
      const Eigenvector ev = build_eigenvector(parse_word(ec_word), ec.a, ec.sign, ec.flavor, opt);
      json j = to_json(ev, ec_full);
      if (ec_verify) j["verified"] = apply_riffle(ev, ec) == ev.vector * ev.eigenvalue;
      emit(j, ec_out);
      if (ec_verify && !j["verified"].get<bool>()) return 1;
    } else if (*eigbasis) {
      const auto evs = eigenbasis(bc.n, bc_alphabet > 0 ? bc_alphabet : bc.n, bc.a, bc.sign, bc.flavor, bc_all);
      std::vector<char> ok(evs.size(), 1);
      if (bc_verify) parallel_for(evs.size(), [&](std::size_t i) { ok[i] = apply_riffle(evs[i], bc) == evs[i].vector * evs[i].eigenvalue; });
      json arr = json::array();
      for (std::size_t i = 0; i < evs.size(); ++i) {
        json e = to_json(evs[i], bc_full);
        if (bc_verify) e["verified"] = ok[i] != 0;
        arr.push_back(e);
      }
      emit({{"chain", chain_json(bc)}, {"count", evs.size()}, {"eigenvectors", arr}}, bc_out);
      if (std::find(ok.begin(), ok.end(), 0) != ok.end()) return 1;
    } else if (*matrix) {
      const TransitionMatrix k = transition_matrix(ShuffleSpec(mc.n, mc.a, mc.sign, mc.flavor), mc_cap);
      if (mc_out.empty()) {
        write_transition_json(std::cout, k);
      } else {
        std::ofstream f(mc_out);
        if (!f) throw std::runtime_error("cannot write " + mc_out);
        write_transition_json(f, k);
      }
      if (!mc_csv.empty()) {
        std::ofstream f(mc_csv);
        if (!f) throw std::runtime_error("cannot write " + mc_csv);
        write_transition_csv(f, k);
      }
    } else if (*simulate) {
      const ShuffleSpec spec(mcs.n, mcs.a, mcs.sign, mcs.flavor);
      if (simulate->count("--seed") == 0) seed = default_seed();
      SignedWord w0;
      if (start.empty()) {
        std::vector<int> id(static_cast<std::size_t>(mcs.n));
        std::iota(id.begin(), id.end(), 1);
        w0 = SignedWord::from_ints(id);
      } else {
        w0 = parse_word(start);
      }
      const auto s = kernels::simulate_descents(spec, w0, steps, trials, seed);
      json j = {{"chain", chain_json(mcs)}, {"start", to_json(w0)},  {"steps", steps},
                {"trials", s.trials},       {"seed", seed},          {"stat", stat},
                {"mean", s.mean},           {"standard_error", s.standard_error}};
      if (mcs.flavor == Involution::tau_tilde) {
        const Rational e = expected_descents(spec, w0, steps);
        j["expected"] = to_string(e);
        j["z"] = s.standard_error > 0 ? (s.mean - e.get_d()) / s.standard_error : 0.0;
      }
      emit(j, sim_out);
    } else if (*compose) {
      const DecoratedComposition d = parse_composition(cd), dp = parse_composition(cdp);
      const DescentOperator t = compose_law(d, dp, c_alg);
      json j = {{"d", format_composition(d)}, {"dp", format_composition(dp)}, {"algebra", to_string(c_alg)},
                {"terms", t.size()},          {"operator", to_json(t)}};
      if (c_verify) {
        const Involution f = d.flavor().value_or(dp.flavor().value_or(Involution::tau));
        const StateIndex states = StateIndex::signed_permutations(d.total());
        auto single = [&](const DecoratedComposition& x) {
          DescentOperator o(x.total(), f);
          o.add(x, 1);
          return kernels::operator_matrix(o, states, c_alg);
        };
        j["verified"] = multiply(single(dp), single(d)) == kernels::operator_matrix(t, states, c_alg);
      }
      emit(j, c_out);
      if (c_verify && !j["verified"].get<bool>()) return 1;
    } else if (*stationary) {
      const ShuffleSpec spec(stc.n, stc.a, stc.sign, stc.flavor);
      const auto pi = stationary_distribution(spec);
      const TransitionMatrix k = transition_matrix(spec);
      json probs = json::array();
      for (const auto& p : pi) probs.push_back(to_string(p));
      emit({{"chain", chain_json(stc)},
            {"fixed_space_dimension", stationary_space_dimension(k)},
            {"states", k.states.size()},
            {"distribution", probs}},
           st_out);
    } else if (*verify) {
      if (verify->count("--seed") == 0) v_seed = default_seed();
      const auto r = checks::run_suite(suite, n_max, jobs, v_seed);
      for (const auto& c : r.checks)
        std::cerr << checks::to_string(c.status) << "  " << c.name << " [" << c.scope << "] " << c.detail << '\n';
      json j = checks::to_json(r);
      j["suite"] = suite;
      j["n_max"] = n_max;
      j["seed"] = v_seed;
      emit(j, v_out);
      return r.ok() ? 0 : 1;
    }
  } catch (const OutsideBasis& e) {
    std::cerr << e.what() << "\n(no eigenvector of this operator is attached to that word; see `eigenbasis` for "
                             "the words that index the basis)\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
