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
#include "hyperoct/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hyperoct/error.hpp"
#include "hyperoct/kernels.hpp"
#include "hyperoct/lyndon.hpp"
#include "hyperoct/parallel.hpp"

namespace hyperoct::checks {

using hyperoct::to_string;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report_only: return "report-only";
  }
  return "?";
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::size_t VerifyReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

json to_json(const VerifyReport& r) {
  json arr = json::array();
  for (const auto& c : r.checks)
    arr.push_back({{"name", c.name}, {"scope", c.scope}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"ok", r.ok()},
          {"pass", r.count(Status::pass)},
          {"fail", r.count(Status::fail)},
          {"report_only", r.count(Status::report_only)},
          {"checks", arr}};
}

namespace {

CheckResult make(std::string name, std::string scope, bool ok, std::string detail = {}) {
  return {std::move(name), std::move(scope), ok ? Status::pass : Status::fail, std::move(detail)};
}

CheckResult report(std::string name, std::string scope, std::string detail) {
  return {std::move(name), std::move(scope), Status::report_only, std::move(detail)};
}

std::string chain_scope(const ShuffleSpec& s) { return s.label(); }

std::string scope_of(int n, int a, Sign sign, Involution f) {
  return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " " + to_string(sign) + " " + flavor_name(f);
}

AlgebraElement words(std::initializer_list<std::pair<int, std::vector<int>>> terms) {
  AlgebraElement x;
  for (const auto& [c, w] : terms) x.add(SignedWord::from_ints(w), c);
  return x;
}

// Failure collector: keeps the first message.
struct Tally {
  long cases = 0;
  long failures = 0;
  std::string first;
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what();
  }
  std::string detail() const {
    std::string d = std::to_string(cases) + " cases";
    if (failures) d += ", " + std::to_string(failures) + " failed; first: " + first;
    return d;
  }
  bool ok() const { return failures == 0; }
};

DecoratedComposition strip_zeros(const DecoratedComposition& d) {
  std::vector<DecoratedPart> parts;
  for (const auto& p : d.parts())
    if (p.size > 0) parts.push_back(p);
  if (parts.empty()) parts.push_back({0, Decoration::plain});
  return DecoratedComposition(std::move(parts));
}

DescentOperator single(const DecoratedComposition& d, Involution flavor) {
  DescentOperator t(d.total(), flavor);
  t.add(d, 1);
  return t;
}

// Elementary matrices on signed permutations, memoized after dropping zero parts.
class ElementaryCache {
 public:
  ElementaryCache(int n, Involution flavor, Algebra alg)
      : states_(StateIndex::signed_permutations(n)), flavor_(flavor), alg_(alg) {}
  const StateIndex& states() const { return states_; }
  const IntMatrix& get(const DecoratedComposition& d) {
    const DecoratedComposition key = strip_zeros(d);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, kernels::operator_matrix(single(key, flavor_), states_, alg_)).first;
    return it->second;
  }
  IntMatrix combination(const DescentOperator& t) {
    IntMatrix out(states_.size(), states_.size());
    for (const auto& [d, c] : t.terms()) {
      const IntMatrix& m = get(d);
      const std::int64_t k = c.get_num().get_si();
      for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += k * m.data[i];
    }
    return out;
  }

 private:
  StateIndex states_;
  Involution flavor_;
  Algebra alg_;
  std::map<DecoratedComposition, IntMatrix> cache_;
};

std::vector<std::int64_t> to_coordinates(const AlgebraElement& v, const StateIndex& states) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(states.size()), 0);
  for (const auto& [w, c] : v) {
    const int i = states.find(w);
    if (i < 0) throw SizeMismatch(format_word(w) + " is not a state");
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw SizeMismatch("non-integral coordinate");
    out[static_cast<std::size_t>(i)] = c.get_num().get_si();
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- examples

std::vector<CheckResult> worked_examples() {
  std::vector<CheckResult> out;
  const std::string scope = "worked examples";
  auto add = [&](const std::string& name, bool ok, std::string detail = {}) {
    out.push_back(make("examples." + name, scope, ok, std::move(detail)));
  };

  {
    const AlgebraElement got = shuffle_product({SignedWord{1, -5}, SignedWord{-3}, SignedWord{-2}});
    const AlgebraElement want = words({{1, {1, -5, -3, -2}},
                                       {1, {1, -5, -2, -3}},
                                       {1, {1, -2, -5, -3}},
                                       {1, {-2, 1, -5, -3}},
                                       {1, {1, -3, -5, -2}},
                                       {1, {1, -3, -2, -5}},
                                       {1, {1, -2, -3, -5}},
                                       {1, {-2, 1, -3, -5}},
                                       {1, {-3, 1, -5, -2}},
                                       {1, {-3, 1, -2, -5}},
                                       {1, {-3, -2, 1, -5}},
                                       {1, {-2, -3, 1, -5}}});
    add("shuffle_12_terms", got == want && got.size() == 12, std::to_string(got.size()) + " terms");
  }
  {
    const SignedWord w{1, -5, -3, -2};
    const auto parts = deconcatenate(w, {2, 1, 1});
    const bool refined = parts == std::vector<SignedWord>{SignedWord{1, -5}, SignedWord{-3}, SignedWord{-2}};
    std::size_t threefold = 0;
    for (const auto& c : weak_compositions(4, 3)) {
      (void)c;
      ++threefold;
    }
    add("deconcatenation_refined", refined && threefold == 15, std::to_string(threefold) + " threefold cuts");
  }
  {
    const SignedWord w{3, -1, 6};
    TensorElement got;
    for (int i = 0; i <= 3; ++i) {
      const TensorElement part = deshuffle(w, {i, 3 - i});
      for (const auto& [k, c] : part.terms()) got.add(k, c);
    }
    TensorElement want;
    for (const char* pair : {"e|3 -1 6", "3|-1 6", "-1|3 6", "6|3 -1", "3 -1|6", "3 6|-1", "-1 6|3", "3 -1 6|e"}) {
      const std::string t(pair);
      const auto bar = t.find('|');
      want.add(std::vector<SignedWord>{parse_word(t.substr(0, bar)), parse_word(t.substr(bar + 1))}, 1);
    }
    add("deshuffle_3_1bar_6", got == want, std::to_string(got.size()) + " terms");

    TensorElement cut;
    for (int i = 0; i <= 3; ++i) cut.add(deconcatenate(w, {i, 3 - i}), 1);
    TensorElement cut_want;
    for (const char* pair : {"e|3 -1 6", "3|-1 6", "3 -1|6", "3 -1 6|e"}) {
      const std::string t(pair);
      const auto bar = t.find('|');
      cut_want.add(std::vector<SignedWord>{parse_word(t.substr(0, bar)), parse_word(t.substr(bar + 1))}, 1);
    }
    add("deconcatenation_3_1bar_6", cut == cut_want);

    add("tau_images", tau(w) == SignedWord{-3, 1, -6} && tau_tilde(w) == SignedWord{-6, 1, -3},
        format_word(tau(w)) + " / " + format_word(tau_tilde(w)));

    const AlgebraElement img = apply_elementary(parse_composition("1,2t"), w, Algebra::shuffle);
    add("m_delta_1_2tbar", img == words({{1, {3, -6, 1}}, {1, {-6, 3, 1}}, {1, {-6, 1, 3}}}),
        std::to_string(img.size()) + " terms");
  }
  {
    const auto mats = compatible_matrices(parse_composition("2b,4b,1"), parse_composition("2b,5"));
    std::set<std::vector<DecoratedPart>> got;
    for (const auto& m : mats) got.insert(m.entries);
    std::set<std::vector<DecoratedPart>> want;
    for (const char* s : {"0,2b,1,3b,1b,0", "1,1b,0,4b,1b,0", "1,1b,1,3b,0b,1", "2,0b,0,4b,0b,1", "0,2b,2,2b,0b,1"})
      want.insert(parse_composition(s).parts());
    add("mat_five_matrices", mats.size() == 5 && got == want, std::to_string(mats.size()) + " matrices");

    const CompatibleMatrix first{3, 2, parse_composition("0,2b,1,3b,1b,0").parts()};
    add("wcomp_readout", wcomp(first) == parse_composition("0,2b,1,3b,1b,0"), format_composition(wcomp(first)));
    const DecoratedComposition dt = parse_composition("2t,4t,1");
    const CompatibleMatrix tm{3, 2, parse_composition("0,2t,1,3t,1t,0").parts()};
    const auto tmats = compatible_matrices(dt, parse_composition("2t,5"));
    const bool member = std::find(tmats.begin(), tmats.end(), tm) != tmats.end();
    add("wcomp_tilde_readout", member && wcomp_tilde(dt, tm) == parse_composition("2t,0,3t,1,1t,0"),
        format_composition(wcomp_tilde(dt, tm)));
  }
  {
    const Integer b = beta(DoublePartition({4, 2}, {2, 1, 1}), parse_composition("5b,4,1"));
    add("beta_zero", b == 0, "beta=" + b.get_str());
  }
  {
    const AlgebraElement sb = stdbrac(SignedWord{-1, 6, -7, -2});
    bool unit = true;
    for (const auto& [w, c] : sb) unit = unit && (c == 1 || c == -1);
    const std::vector<std::pair<int, std::vector<int>>> printed = {
        {1, {1, 6, 7, 2}},     {-1, {1, 6, -7, 2}},    {1, {1, -6, 7, 2}},    {-1, {1, -6, -7, 2}},
        {-1, {1, 7, 6, 2}},    {-1, {1, 7, -6, 2}},    {1, {1, -7, 6, 2}},    {1, {1, -7, -6, 2}},
        {-1, {-1, 6, 7, 2}},   {1, {-1, 6, -7, 2}},    {-1, {-1, -6, 7, 2}},  {1, {-1, -6, -7, 2}},
        {1, {-1, 7, 6, 2}},    {1, {-1, 7, -6, 2}},    {-1, {-1, -7, 6, 2}},  {-1, {-1, -7, -6, 2}},
        {-1, {6, 7, 1, 2}},    {1, {6, -7, 1, 2}},     {-1, {-6, 7, 1, 2}},   {1, {-6, -7, 1, 2}},
        {1, {7, 6, 1, 2}},     {1, {7, -6, 1, 2}},     {-1, {-7, 6, 1, 2}},   {-1, {-7, -6, 1, 2}},
        {1, {6, 7, -1, 2}},    {-1, {6, -7, -1, 2}},   {1, {-6, 7, -1, 2}},   {-1, {-6, -7, -1, 2}},
        {-1, {7, 6, -1, 2}},   {-1, {7, -6, -1, 2}},   {1, {-7, 6, -1, 2}},   {1, {-7, -6, -1, 2}},
        {-1, {1, 6, 7, -2}},   {1, {1, 6, -7, -2}},    {-1, {1, -6, 7, -2}},  {1, {1, -6, -7, -2}},
        {-1, {2, 1, 6, 7}},    {1, {2, 1, 6, -7}},     {-1, {2, 1, -6, 7}},   {1, {2, 1, -6, -7}},
        {1, {-2, 1, 6, 7}},    {-1, {-2, 1, 6, -7}},   {1, {-2, 1, -6, 7}},   {-1, {-2, 1, -6, -7}}};
    std::size_t matched = 0;
    for (const auto& [c, w] : printed)
      if (sb.coeff(SignedWord::from_ints(w)) == c) ++matched;
    add("stdbrac_128_terms", sb.size() == 128 && unit && matched == printed.size(),
        std::to_string(sb.size()) + " terms, " + std::to_string(matched) + "/" + std::to_string(printed.size()) +
            " printed terms match");
  }
  {
    const auto f = lyndon_factorize(SignedWord{-4, 3, 5, -1, 6, -7, -2});
    const bool ok = f.factors == std::vector<SignedWord>{SignedWord{-4}, SignedWord{3, 5}, SignedWord{-1, 6, -7, -2}};
    add("lyndon_factorization", ok);
    const auto rot = classify_factors(SignedWord{-4, 3, 5, -1, 6, -7, -2}, Involution::tau);
    const auto flip = classify_factors(SignedWord{-4, -3, 5, -1, 6, -7, -2}, Involution::tau_tilde);
    add("factor_classification",
        rot.invariant.size() == 1 && rot.negating.size() == 2 && flip.invariant.size() == 2 &&
            flip.negating.size() == 1);
  }
  add("descents", des(SignedWord{4, 3, 5, -1, 6, -7, -2}) == 3);
  return out;
}

// ---------------------------------------------------------------- algebra-core

CheckResult involutions_are_involutive(int max_degree, int max_label) {
  Tally t;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& w : all_words(d, max_label))
      for (Involution f : {Involution::tau, Involution::tau_tilde}) {
        const SignedWord v = apply_involution(w, f);
        t.check(v.size() == w.size() && apply_involution(v, f) == w, [&] { return format_word(w); });
      }
  return make("algebra.involutive", "degree<=" + std::to_string(max_degree) + " N<=" + std::to_string(max_label),
              t.ok(), t.detail());
}

CheckResult involution_morphisms(int max_degree) {
  Tally t;
  const int N = 2;
  for (int du = 0; du <= max_degree; ++du)
    for (int dv = 0; du + dv <= max_degree; ++dv)
      for (const auto& u : all_words(du, N))
        for (const auto& v : all_words(dv, N)) {
          const AlgebraElement sh = shuffle_product({u, v});
          auto what = [&] { return format_word(u) + " | " + format_word(v); };
          t.check(tau(sh) == shuffle_product({tau(u), tau(v)}), what);
          t.check(tau_tilde(sh) == shuffle_product({tau_tilde(u), tau_tilde(v)}), what);
          t.check(tau(concat_product({u, v})) == concat_product({tau(u), tau(v)}), what);
          t.check(tau_tilde(concat_product({u, v})) == concat_product({tau_tilde(v), tau_tilde(u)}), what);
        }
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& w : all_words(d, N))
      for (int parts = 1; parts <= 3; ++parts)
        for (const auto& c : weak_compositions(d, parts)) {
          auto what = [&] { return format_word(w); };
          auto cut = deconcatenate(w, c);
          auto cut_tau = deconcatenate(tau(w), c);
          for (auto& p : cut) p = tau(p);
          t.check(cut == cut_tau, what);
          // Δ_D(τ̃w) is the slot-reversed τ̃-image of Δ_{rev D}(w)
          std::vector<int> rc(c.rbegin(), c.rend());
          auto cut_rev = deconcatenate(w, rc);
          std::vector<SignedWord> expect;
          for (auto it = cut_rev.rbegin(); it != cut_rev.rend(); ++it) expect.push_back(tau_tilde(*it));
          t.check(deconcatenate(tau_tilde(w), c) == expect, what);
          for (Involution f : {Involution::tau, Involution::tau_tilde}) {
            TensorElement mapped;
            const TensorElement ds = deshuffle(w, c);
            for (const auto& [k, coef] : ds.terms()) {
              std::vector<SignedWord> key;
              for (const auto& s : k) key.push_back(apply_involution(s, f));
              mapped.add(key, coef);
            }
            t.check(deshuffle(apply_involution(w, f), c) == mapped, what);
          }
        }
  return make("algebra.morphisms", "degree<=" + std::to_string(max_degree) + " N=2", t.ok(), t.detail());
}

CheckResult bialgebra_compatibility(int max_degree, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  const int N = 2;
  for (int trial = 0; trial < 200; ++trial) {
    const int total = std::uniform_int_distribution<int>(0, max_degree)(rng);
    const int du = std::uniform_int_distribution<int>(0, total)(rng);
    const auto us = all_words(du, N);
    const auto vs = all_words(total - du, N);
    const SignedWord u = us[std::uniform_int_distribution<std::size_t>(0, us.size() - 1)(rng)];
    const SignedWord v = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
    const int parts = std::uniform_int_distribution<int>(1, 3)(rng);
    const auto comps = weak_compositions(total, parts);
    const auto d = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];

    const TensorElement lhs = deshuffle(concat_product({u, v}), d);
    TensorElement rhs;
    for (const auto& d1 : weak_compositions(du, parts)) {
      std::vector<int> d2(d.size());
      bool fits = true;
      for (std::size_t i = 0; i < d.size(); ++i) {
        d2[i] = d[i] - d1[i];
        fits = fits && d2[i] >= 0;
      }
      if (!fits) continue;
      const TensorElement x = deshuffle(u, d1), y = deshuffle(v, d2);
      for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
          std::vector<SignedWord> key;
          for (std::size_t i = 0; i < kx.size(); ++i) key.push_back(concat_product({kx[i], ky[i]}));
          rhs.add(key, cx * cy);
        }
    }
    t.check(lhs == rhs, [&] { return format_word(u) + " | " + format_word(v); });
  }
  return make("algebra.bialgebra", "200 random pairs, degree<=" + std::to_string(max_degree), t.ok(), t.detail());
}

CheckResult primitives_preserved(int max_degree) {
  Tally t;
  std::vector<AlgebraElement> prims;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& u : lyndon_words(d, 2)) prims.push_back(stdbrac(u));
  // generic primitives: brackets and sums
  const std::size_t base = prims.size();
  for (std::size_t i = 0; i + 1 < base; i += 3) {
    const AlgebraElement b = lie_bracket(prims[i], prims[i + 1]);
    if (!b.is_zero() && b.degree() <= static_cast<std::size_t>(max_degree)) prims.push_back(b);
    if (prims[i].degree() == prims[i + 1].degree()) prims.push_back(prims[i] + 2 * prims[i + 1]);
  }
  for (const auto& p : prims) {
    auto what = [&] { return std::to_string(p.size()) + "-term element"; };
    t.check(is_primitive(p, Algebra::concat), what);
    t.check(is_primitive(tau(p), Algebra::concat), what);
    t.check(is_primitive(tau_tilde(p), Algebra::concat), what);
  }
  return make("algebra.primitives_preserved", "degree<=" + std::to_string(max_degree) + " N=2", t.ok(), t.detail());
}

CheckResult bracket_parity(int max_degree) {
  Tally t;
  struct Prim {
    AlgebraElement x;
    SignedWord u;
  };
  std::vector<Prim> prims;
  for (int d = 1; d < max_degree; ++d)
    for (const auto& u : lyndon_words(d, 2)) prims.push_back({stdbrac(u), u});
  for (Involution f : {Involution::tau, Involution::tau_tilde})
    for (const auto& x : prims)
      for (const auto& y : prims) {
        if (x.u.size() + y.u.size() > static_cast<std::size_t>(max_degree)) continue;
        const bool xi = classify_primitive(x.u, f) == Parity::invariant;
        const bool yi = classify_primitive(y.u, f) == Parity::invariant;
        bool inv;
        if (f == Involution::tau)
          inv = xi == yi;
        else
          inv = xi != yi;  // only [inv,neg] lands in the invariant part
        const AlgebraElement b = lie_bracket(x.x, y.x);
        const AlgebraElement img = apply_involution(b, f);
        t.check(img == (inv ? b : -b), [&] { return format_word(x.u) + " , " + format_word(y.u); });
      }
  return make("algebra.bracket_parity", "degree<=" + std::to_string(max_degree) + " N=2", t.ok(), t.detail());
}

// ---------------------------------------------------------------- descent-ops

CheckResult duality(int n, int max_length, Involution flavor) {
  Tally t;
  ElementaryCache sh(n, flavor, Algebra::shuffle), co(n, flavor, Algebra::concat);
  for (const auto& d : decorated_compositions(n, max_length, flavor))
    t.check(sh.get(d) == co.get(d).transposed(), [&] { return format_composition(d); });
  return make("duality.transpose",
              "n=" + std::to_string(n) + " length<=" + std::to_string(max_length) + " " + flavor_name(flavor), t.ok(),
              t.detail());
}

namespace {

bool composition_pair_holds(ElementaryCache& cache, const DecoratedComposition& d, const DecoratedComposition& dp,
                            Algebra alg) {
  // D' acts first: composite matrix is M_{D'}·M_D
  const IntMatrix lhs = multiply(cache.get(dp), cache.get(d));
  return lhs == cache.combination(compose_law(d, dp, alg));
}

std::string alg_name(Algebra a) { return a == Algebra::shuffle ? "commutative" : "cocommutative"; }

}  // namespace

CheckResult composition_exhaustive(int n, int max_length, Involution flavor, Algebra alg) {
  Tally t;
  ElementaryCache cache(n, flavor, alg);
  const auto all = decorated_compositions(n, max_length, flavor);
  for (const auto& d : all)
    for (const auto& dp : all)
      t.check(composition_pair_holds(cache, d, dp, alg),
              [&] { return format_composition(d) + " after " + format_composition(dp); });
  return make("composition.exhaustive",
              "n=" + std::to_string(n) + " length<=" + std::to_string(max_length) + " " + flavor_name(flavor) + " " +
                  alg_name(alg),
              t.ok(), t.detail());
}

CheckResult composition_random(int n, int pairs, Involution flavor, Algebra alg, std::uint64_t seed) {
  Tally t;
  ElementaryCache cache(n, flavor, alg);
  const auto all = decorated_compositions(n, n, flavor);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < pairs; ++i) {
    const auto& d = all[pick(rng)];
    const auto& dp = all[pick(rng)];
    t.check(composition_pair_holds(cache, d, dp, alg),
            [&] { return format_composition(d) + " after " + format_composition(dp); });
  }
  return make("composition.random",
              "n=" + std::to_string(n) + " " + std::to_string(pairs) + " pairs " + flavor_name(flavor) + " " +
                  alg_name(alg),
              t.ok(), t.detail());
}

bool riffle_composition_hypotheses(Algebra alg, Involution flavor, int a, int b) {
  if (flavor == Involution::tau_tilde) return true;
  if (alg == Algebra::shuffle) return a % 2 == 1;
  return b % 2 == 1;
}

std::optional<Sign> riffle_composition_sign(Algebra alg, Involution flavor, int a, int b, Sign sa, Sign sb) {
  if (!riffle_composition_hypotheses(alg, flavor, a, b)) return std::nullopt;
  const Sign product = sa == sb ? Sign::plus : Sign::minus;
  if (flavor == Involution::tau) return product;
  // flip: an even number of outer (commutative) or inner (cocommutative) piles
  // absorbs the other operator's sign
  if (alg == Algebra::shuffle) return a % 2 == 1 ? product : sa;
  return b % 2 == 1 ? product : sb;
}

std::vector<CheckResult> riffle_composition(int n, int max_ab) {
  std::vector<CheckResult> out;
  const StateIndex states = StateIndex::signed_permutations(n);
  long outside = 0, outside_fail = 0, product_fail = 0;
  std::string outside_example, product_example;
  for (Algebra alg : {Algebra::shuffle, Algebra::concat})
    for (Involution f : {Involution::tau, Involution::tau_tilde}) {
      std::map<std::pair<int, Sign>, IntMatrix> mats;
      auto get = [&](int a, Sign s) -> const IntMatrix& {
        auto it = mats.find({a, s});
        if (it == mats.end())
          it = mats.emplace(std::make_pair(a, s), kernels::operator_matrix(riffle_operator(a, s, f, n), states, alg))
                   .first;
        return it->second;
      };
      Tally t;
      for (int a = 1; a <= max_ab; ++a)
        for (int b = 1; b <= max_ab; ++b)
          for (Sign sa : {Sign::plus, Sign::minus})
            for (Sign sb : {Sign::plus, Sign::minus}) {
              const Sign product = sa == sb ? Sign::plus : Sign::minus;
              const IntMatrix composite = multiply(get(b, sb), get(a, sa));
              auto what = [&] {
                return alg_name(alg) + " " + flavor_name(f) + " a=" + std::to_string(a) + to_string(sa) +
                       " b=" + std::to_string(b) + to_string(sb);
              };
              if (const auto sign = riffle_composition_sign(alg, f, a, b, sa, sb)) {
                t.check(composite == get(a * b, *sign), what);
                if (composite != get(a * b, product) && product_fail++ == 0) product_example = what();
              } else {
                ++outside;
                if (composite != get(a * b, product) && outside_fail++ == 0) outside_example = what();
              }
            }
      out.push_back(make("composition.riffle",
                         "n=" + std::to_string(n) + " a,b<=" + std::to_string(max_ab) + " " + flavor_name(f) + " " +
                             alg_name(alg),
                         t.ok(), t.detail()));
    }
  std::string detail = std::to_string(outside) + " combinations outside the hypotheses, " +
                       std::to_string(outside_fail) + " of them fail";
  if (outside_fail) detail += " (e.g. " + outside_example + ")";
  out.push_back(report("composition.riffle_outside_hypotheses", "n=" + std::to_string(n), detail));
  out.push_back(report("composition.riffle_product_sign", "n=" + std::to_string(n),
                       "sign = product of signs fails in " + std::to_string(product_fail) +
                           " combinations inside the hypotheses" +
                           (product_fail ? " (e.g. " + product_example + ")" : std::string())));
  return out;
}

CheckResult riffle_rows_stochastic(const ShuffleSpec& spec) { return rows_sum_to_one(transition_matrix(spec)); }

// ---------------------------------------------------------------- spectral

namespace {

IntPolynomial predicted_charpoly(const std::vector<SpectrumEntry>& spectrum, const Rational& scale) {
  IntPolynomial p = IntPolynomial::monomial(0);
  for (const auto& e : spectrum) {
    const Rational mu = e.eigenvalue * scale;
    if (mu.get_den() != 1) throw SizeMismatch("non-integral scaled eigenvalue " + to_string(mu));
    const IntPolynomial f = IntPolynomial::linear(-mu.get_num());
    for (Integer m = 0; m < e.multiplicity; ++m) p = p * f;
  }
  return p;
}

std::string spectrum_str(const std::vector<SpectrumEntry>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? ", " : "") + to_string(s[i].eigenvalue) + ":" + s[i].multiplicity.get_str();
  return out + "}";
}

}  // namespace

CheckResult chain_spectrum(const ShuffleSpec& spec) {
  const TransitionMatrix k = transition_matrix(spec);
  const auto table = shuffle_multiplicities(spec.a, spec.sign, spec.flavor, spec.n);
  const IntPolynomial want = predicted_charpoly(table, Rational(Integer(k.denominator)));
  const IntPolynomial got = kernels::charpoly_exact(k.counts);
  return make("spectral.chain_charpoly", chain_scope(spec), got == want,
              std::to_string(k.counts.rows) + " states, roots " + spectrum_str(table));
}

CheckResult table1_totals(int n_max) {
  Tally t;
  for (int n = 1; n <= n_max; ++n)
    for (int a : {1, 2, 3, 4, 5})
      for (Sign s : {Sign::plus, Sign::minus})
        for (Involution f : {Involution::tau, Involution::tau_tilde}) {
          Integer total = 0;
          bool nonneg = true;
          for (const auto& e : shuffle_multiplicities(a, s, f, n)) {
            total += e.multiplicity;
            nonneg = nonneg && e.multiplicity >= 0;
          }
          t.check(nonneg && total == (Integer(1) << n) * factorial(n), [&] { return scope_of(n, a, s, f); });
        }
  return make("spectral.table_totals", "n<=" + std::to_string(n_max) + " a<=5", t.ok(), t.detail());
}

CheckResult riffle_spectrum_consistency(int n, int max_label, int a, Sign sign, Involution flavor) {
  const auto [b, bb] = primitive_counts(max_label, n, flavor);
  const auto formula = riffle_spectrum(a, sign, flavor, b, bb, n);

  const DescentOperator op = riffle_operator(a, sign, flavor, n);
  const auto values = operator_eigenvalues(op);
  const auto mults = multiplicity_genfun(b, bb, n);
  std::map<DoublePartition, Integer> by_dp(mults.begin(), mults.end());
  std::vector<SpectrumEntry> per_dp;
  for (const auto& [dp, v] : values) per_dp.push_back({v, by_dp[dp]});
  const bool agree = aggregate_spectrum(per_dp) == formula;

  const StateIndex states(all_words(n, max_label));
  const IntPolynomial got = kernels::charpoly_exact(kernels::operator_matrix(op, states, Algebra::concat));
  const bool charpoly = got == predicted_charpoly(formula, 1);
  return make("spectral.riffle_spectrum",
              scope_of(n, a, sign, flavor) + " N=" + std::to_string(max_label), agree && charpoly,
              spectrum_str(formula) + (agree ? "" : " (disagrees with per-partition eigenvalues)") +
                  (charpoly ? "" : " (charpoly mismatch)"));
}

CheckResult beta_type_a_reduction(int n) {
  Tally t;
  for (const auto& dp : double_partitions(n))
    for (int len = 1; len <= n; ++len)
      for (const auto& c : weak_compositions(n, len)) {
        std::vector<DecoratedPart> parts;
        for (int s : c) parts.push_back({s, Decoration::plain});
        const DecoratedComposition d(parts);
        const Integer b = beta(dp, d);
        t.check(b == Integer(static_cast<long>(compatible_set_compositions(dp, c).size())),
                [&] { return format_double_partition(dp) + " " + format_composition(d); });
      }
  return make("spectral.beta_type_a", "n=" + std::to_string(n), t.ok(), t.detail());
}

namespace {

// Gauss-Jordan inverse over Q; columns of `cols` are the basis vectors.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw SizeMismatch("singular PBW change of basis");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

CheckResult triangularity(int max_degree, int max_label, Involution flavor) {
  Tally t;
  for (int d = 1; d <= max_degree; ++d) {
    const auto ws = all_words(d, max_label);
    const StateIndex idx(ws);
    const std::size_t N = ws.size();
    std::vector<AlgebraElement> mono(N);
    std::vector<DoublePartition> dps(N);
    std::vector<std::size_t> length(N);
    std::vector<std::vector<Rational>> basis(N, std::vector<Rational>(N, 0));  // basis[word][monomial]
    for (std::size_t i = 0; i < N; ++i) {
      const auto cp = classify_factors(ws[i], flavor);
      std::vector<AlgebraElement> factors(cp.invariant);
      factors.insert(factors.end(), cp.negating.begin(), cp.negating.end());
      mono[i] = product(factors, Algebra::concat);
      std::vector<int> l, lb;
      for (const auto& p : cp.invariant) l.push_back(static_cast<int>(p.degree()));
      for (const auto& p : cp.negating) lb.push_back(static_cast<int>(p.degree()));
      dps[i] = DoublePartition(l, lb);
      length[i] = factors.size();
      for (const auto& [w, c] : mono[i]) basis[static_cast<std::size_t>(idx.find(w))][i] = c;
    }
    const auto inv = invert(basis);
    for (const auto& D : decorated_compositions(d, 3, flavor))
      for (std::size_t i = 0; i < N; ++i) {
        const AlgebraElement img = apply_elementary(D, mono[i], Algebra::concat);
        std::vector<Rational> x(N, 0);
        for (const auto& [w, c] : img) {
          const std::size_t r = static_cast<std::size_t>(idx.find(w));
          for (std::size_t j = 0; j < N; ++j)
            if (inv[j][r] != 0) x[j] += inv[j][r] * c;
        }
        bool ok = x[i] == Rational(beta(dps[i], D));
        for (std::size_t j = 0; j < N && ok; ++j)
          if (j != i && length[j] >= length[i]) ok = x[j] == 0;
        t.check(ok, [&] { return format_composition(D) + " on " + format_word(ws[i]); });
      }
  }
  return make("triangularity.pbw",
              "degree<=" + std::to_string(max_degree) + " N=" + std::to_string(max_label) + " " + flavor_name(flavor),
              t.ok(), t.detail());
}

// ---------------------------------------------------------------- stirling

CheckResult stirling_closed_vs_recursive(int n_max) {
  Tally t;
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      for (int kb = 0; k + kb <= n; ++kb)
        t.check(hyperoct_stirling(n, k, kb) == hyperoct_stirling_recursive(n, k, kb), [&] {
          return "C(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(kb) + ")";
        });
  return make("stirling.closed_vs_recursive", "n<=" + std::to_string(n_max), t.ok(), t.detail());
}

CheckResult stirling_lr_minima(int n_max) {
  Tally t;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      int minima = 0, low = n + 1;
      for (int v : p)
        if (v < low) {
          low = v;
          ++minima;
        }
      ++counts[static_cast<std::size_t>(minima)];
    } while (std::next_permutation(p.begin(), p.end()));
    for (int k = 0; k <= n; ++k)
      t.check(stirling_c(n, k) == Integer(counts[static_cast<std::size_t>(k)]),
              [&] { return "c(" + std::to_string(n) + "," + std::to_string(k) + ")"; });
  }
  return make("stirling.lr_minima", "n<=" + std::to_string(n_max), t.ok(), t.detail());
}

CheckResult stirling_lyndon_classes(int n_max) {
  Tally t;
  for (int n = 1; n <= n_max; ++n) {
    std::map<std::pair<int, int>, long> counts;
    for (const auto& w : signed_permutations(n)) {
      int k = 0, kb = 0;
      for (const auto& u : lyndon_factorize(w).factors) {
        int pos = 0;
        for (const auto& l : u) pos += l.barred ? 0 : 1;
        (pos % 2 == 1 ? k : kb) += 1;
      }
      ++counts[{k, kb}];
    }
    for (int k = 0; k <= n; ++k)
      for (int kb = 0; k + kb <= n; ++kb)
        t.check(hyperoct_stirling(n, k, kb) == Integer(counts[{k, kb}]), [&] {
          return "C(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(kb) + ")";
        });
  }
  return make("stirling.lyndon_classes", "n<=" + std::to_string(n_max), t.ok(), t.detail());
}

// ---------------------------------------------------------------- lyndon-eigen

CheckResult eigenbasis_suite(int n, int a, Sign sign, Involution flavor, EigenbasisSummary* summary) {
  const auto evs = eigenbasis(n, n, a, sign, flavor);
  const StateIndex states = StateIndex::signed_permutations(n);
  const IntMatrix m = kernels::operator_matrix(riffle_operator(a, sign, flavor, n), states, Algebra::concat);
  std::vector<std::vector<std::int64_t>> vecs;
  std::vector<std::int64_t> mus;
  std::vector<SpectrumEntry> tally;
  const Rational scale = rational_pow(a, n);
  for (const auto& ev : evs) {
    vecs.push_back(to_coordinates(ev.vector, states));
    mus.push_back(ev.eigenvalue.get_num().get_si());
    tally.push_back({ev.eigenvalue / scale, 1});
  }
  const auto ok = kernels::eigen_equations_hold(m, vecs, mus);
  const std::size_t failures = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));

  IntMatrix rows(static_cast<int>(vecs.size()), states.size());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    std::copy(vecs[i].begin(), vecs[i].end(), rows.data.begin() + static_cast<std::ptrdiff_t>(i) * states.size());
  // rank mod p never exceeds the rational rank
  int rank = 0;
  for (auto p : large_primes(3)) {
    rank = std::max(rank, rank_mod_p(rows, p));
    if (rank == rows.rows) break;
  }
  if (rank < rows.rows) rank = rank_exact(rows);

  tally.push_back({0, Integer(states.size()) - Integer(static_cast<long>(evs.size()))});
  const auto emitted = aggregate_spectrum(tally);
  const auto table = shuffle_multiplicities(a, sign, flavor, n);
  const bool counts_match = emitted == table;
  if (summary) *summary = {evs.size(), failures, rank, counts_match};

  std::string detail = std::to_string(evs.size()) + " vectors, " + std::to_string(failures) +
                       " eigen-equation failures, rank " + std::to_string(rank) + ", counts " + spectrum_str(emitted);
  if (!counts_match) detail += " vs table " + spectrum_str(table);
  return make("eigen.basis", scope_of(n, a, sign, flavor),
              failures == 0 && rank == static_cast<int>(evs.size()) && counts_match, detail);
}

CheckResult one_negating_primitive_identities(int a, Involution flavor, int trials, std::uint64_t seed) {
  const std::string scope = "a=" + std::to_string(a) + " " + flavor_name(flavor) + " degree<=4";
  if (flavor == Involution::tau && a % 2 == 0)
    return report("eigen.one_negating_primitive", scope, "no identity is claimed for even a under rotation");
  Tally t;
  std::mt19937_64 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_primitive = [&](int len) {
    const auto ls = lyndon_words(len, 3);
    const auto& u = ls[static_cast<std::size_t>(uni(0, static_cast<int>(ls.size()) - 1))];
    const auto& v = ls[static_cast<std::size_t>(uni(0, static_cast<int>(ls.size()) - 1))];
    return stdbrac(u) + Rational(uni(0, 2)) * stdbrac(v);
  };
  for (int trial = 0; trial < trials; ++trial) {
    const int i = uni(1, 3);
    const AlgebraElement pb = AlgebraElement(SignedWord{i}) - AlgebraElement(SignedWord{-i});
    const int degree = uni(0, 3);
    std::vector<AlgebraElement> factors;
    int left = degree;
    while (left > 0) {
      const int len = uni(1, left);
      factors.push_back(random_primitive(len));
      left -= len;
    }
    const AlgebraElement s = factors.empty() ? AlgebraElement(SignedWord{}) : product(factors, Algebra::concat);
    if (s.is_zero()) continue;
    const AlgebraElement pbs = concat_product(pb, s), spb = concat_product(s, pb);
    auto what = [&] { return "p=" + std::to_string(i) + " deg s=" + std::to_string(degree); };
    for (Sign sign : {Sign::plus, Sign::minus}) {
      const DescentOperator big = riffle_operator(a, sign, flavor, degree + 1);
      const AlgebraElement os = apply_operator(riffle_operator(a, sign, flavor, degree), s, Algebra::concat);
      const bool plus = sign == Sign::plus;
      if (flavor == Involution::tau_tilde) {
        const AlgebraElement l = apply_operator(big, pbs, Algebra::concat);
        const AlgebraElement r = apply_operator(big, spb, Algebra::concat);
        if (a % 2 == 1) {
          t.check(l == (plus ? concat_product(pb, os) : -concat_product(os, pb)), what);
          t.check(r == (plus ? concat_product(os, pb) : -concat_product(pb, os)), what);
        } else {
          t.check(plus ? r.is_zero() : l.is_zero(), what);
        }
      } else {
        const AlgebraElement l = apply_operator(big, pbs + spb, Algebra::concat);
        const AlgebraElement rhs = concat_product(pb, os) + concat_product(os, pb);
        t.check(l == (plus ? rhs : -rhs), what);
      }
    }
  }
  return make("eigen.one_negating_primitive", scope, t.ok(), t.detail());
}

CheckResult stdbrac_parity(int max_length, int max_label) {
  Tally t;
  for (int len = 1; len <= max_length; ++len)
    for (const auto& u : lyndon_words(len, max_label)) {
      const AlgebraElement x = stdbrac(u);
      int neg = 0;
      for (const auto& l : u) neg += l.barred ? 1 : 0;
      const int pos = static_cast<int>(u.size()) - neg;
      auto what = [&] { return format_word(u); };
      t.check(is_primitive(x, Algebra::concat), what);
      t.check(tau(x) == (neg % 2 == 0 ? x : -x), what);
      t.check(tau_tilde(x) == (pos % 2 == 1 ? x : -x), what);
      t.check((classify_primitive(u, Involution::tau) == Parity::invariant) == (neg % 2 == 0), what);
      t.check((classify_primitive(u, Involution::tau_tilde) == Parity::invariant) == (pos % 2 == 1), what);
    }
  return make("eigen.stdbrac_parity", "length<=" + std::to_string(max_length) + " N=" + std::to_string(max_label),
              t.ok(), t.detail());
}

CheckResult unreversed_flip_form(int n, int a) {
  const StateIndex states = StateIndex::signed_permutations(n);
  const IntMatrix m =
      kernels::operator_matrix(riffle_operator(a, Sign::minus, Involution::tau_tilde, n), states, Algebra::concat);
  EigenOptions opt;
  opt.unreversed_second_summand = true;
  long multi = 0, failing = 0;
  for (const auto& w : states.states()) {
    const auto ev = build_eigenvector(w, a, Sign::minus, Involution::tau_tilde, opt);
    if (classify_factors(w, Involution::tau_tilde).negating.size() < 2) continue;
    ++multi;
    const auto ok = kernels::serial::eigen_equations_hold(m, {to_coordinates(ev.vector, states)},
                                                          {ev.eigenvalue.get_num().get_si()});
    failing += ok[0] ? 0 : 1;
  }
  return report("eigen.unreversed_flip_form", "n=" + std::to_string(n) + " a=" + std::to_string(a) + " minus flip",
                std::to_string(multi) + " words with >=2 negating factors; unreversed second summand fails for " +
                    std::to_string(failing));
}

// ---------------------------------------------------------------- markov

CheckResult rows_sum_to_one(const TransitionMatrix& k) {
  Tally t;
  for (int i = 0; i < k.counts.rows; ++i) {
    std::int64_t sum = 0;
    bool nonneg = true;
    for (int j = 0; j < k.counts.cols; ++j) {
      sum += k.counts(i, j);
      nonneg = nonneg && k.counts(i, j) >= 0;
    }
    t.check(nonneg && sum == k.denominator, [&] { return format_word(k.states[static_cast<std::size_t>(i)]); });
  }
  return make("markov.stochastic", chain_scope(k.spec), t.ok(), t.detail());
}

CheckResult stationary_unique(const TransitionMatrix& k) {
  bool uniform = true;
  for (int j = 0; j < k.counts.cols && uniform; ++j) {
    std::int64_t sum = 0;
    for (int i = 0; i < k.counts.rows; ++i) sum += k.counts(i, j);
    uniform = sum == k.denominator;
  }
  const int dim = stationary_space_dimension(k);
  return make("markov.stationary", chain_scope(k.spec), uniform && dim == 1,
              std::string(uniform ? "uniform is fixed" : "uniform is not fixed") + ", fixed space dimension " +
                  std::to_string(dim));
}

CheckResult subdominant(const TransitionMatrix& k) {
  const auto r = verify_subdominant(k.spec, k);
  std::string detail;
  for (const auto& c : r.checks) {
    if (!detail.empty()) detail += "; ";
    std::string fam;
    for (const auto& f : c.families) fam += (fam.empty() ? "" : "+") + f;
    detail += to_string(c.eigenvalue) + " " + fam + " span " + std::to_string(c.span_dimension) + "/" +
              c.expected_multiplicity.get_str() + (c.eigen_equations_hold ? "" : " eigen-equation fails");
    if (!c.failure.empty()) detail += " (" + c.failure + ")";
  }
  return make("markov.subdominant", chain_scope(k.spec), r.ok(), detail);
}

CheckResult eigenbasis_duality(int n, int a, Sign sign, Involution flavor) {
  const TransitionMatrix k = transition_matrix(ShuffleSpec(n, a, sign, flavor));
  const StateIndex states(k.states);
  Tally t;
  for (const auto& ev : eigenbasis(n, n, a, sign, flavor)) {
    const auto v = to_coordinates(ev.vector, states);
    const std::int64_t mu = ev.eigenvalue.get_num().get_si();
    bool ok = true;
    for (int x = 0; x < k.counts.rows && ok; ++x) {
      std::int64_t s = 0;
      for (int y = 0; y < k.counts.cols; ++y) s += k.counts(x, y) * v[static_cast<std::size_t>(y)];
      ok = s == mu * v[static_cast<std::size_t>(x)];
    }
    t.check(ok, [&] { return format_word(ev.word); });
  }
  return make("duality.right_eigenfunctions", scope_of(n, a, sign, flavor), t.ok(), t.detail());
}

namespace {

// g_t = counts^t · des, so that E[des after t steps | x] = g_t(x) / a^{nt}.
std::vector<std::vector<Integer>> descent_powers(const TransitionMatrix& k, int t_max) {
  const int N = k.counts.rows;
  std::vector<std::vector<Integer>> g(static_cast<std::size_t>(t_max) + 1, std::vector<Integer>(N));
  for (int x = 0; x < N; ++x) g[0][x] = des(k.states[static_cast<std::size_t>(x)]);
  for (int t = 1; t <= t_max; ++t)
    for (int x = 0; x < N; ++x) {
      Integer s = 0;
      for (int y = 0; y < N; ++y)
        if (k.counts(x, y)) s += Integer(static_cast<long>(k.counts(x, y))) * g[t - 1][y];
      g[t][x] = s;
    }
  return g;
}

Rational descent_formula(const ShuffleSpec& spec, const SignedWord& w0, int t) {
  const Rational decay = rational_pow(spec.a, -t);
  return (1 - decay) * (Rational(spec.n - 1) / 2) + decay * des(w0);
}

}  // namespace

CheckResult descent_expectation_exact(const TransitionMatrix& k, int t_max) {
  const auto g = descent_powers(k, t_max);
  Tally t;
  for (int s = 0; s <= t_max; ++s) {
    const Rational denom = rational_pow(k.denominator, s);
    for (int x = 0; x < k.counts.rows; ++x) {
      const SignedWord& w0 = k.states[static_cast<std::size_t>(x)];
      t.check(Rational(g[s][x]) / denom == expected_descents(k.spec, w0, s),
              [&] { return format_word(w0) + " t=" + std::to_string(s); });
    }
  }
  return make("expectation.exact", chain_scope(k.spec) + " t<=" + std::to_string(t_max), t.ok(), t.detail());
}

CheckResult descent_expectation_monte_carlo(const ShuffleSpec& spec, int t, long trials, std::uint64_t seed) {
  std::vector<int> rev(static_cast<std::size_t>(spec.n));
  std::iota(rev.rbegin(), rev.rend(), 1);
  const SignedWord w0 = SignedWord::from_ints(rev);
  const auto mc = kernels::simulate_descents(spec, w0, t, trials, seed);
  const double want = expected_descents(spec, w0, t).get_d();
  const double z = mc.standard_error > 0 ? std::abs(mc.mean - want) / mc.standard_error : (mc.mean == want ? 0 : 1e9);
  std::ostringstream d;
  d << "mean " << mc.mean << " vs " << want << ", se " << mc.standard_error << ", |z| " << z;
  return make("expectation.monte_carlo",
              chain_scope(spec) + " t=" + std::to_string(t) + " trials=" + std::to_string(trials), z <= 4.0, d.str());
}

CheckResult rotation_descent_formula(const TransitionMatrix& k, int t_max) {
  const auto g = descent_powers(k, t_max);
  long cases = 0, off = 0;
  for (int s = 0; s <= t_max; ++s) {
    const Rational denom = rational_pow(k.denominator, s);
    for (int x = 0; x < k.counts.rows; ++x, ++cases)
      if (Rational(g[s][x]) / denom != descent_formula(k.spec, k.states[static_cast<std::size_t>(x)], s)) ++off;
  }
  return report("expectation.rotation_formula", chain_scope(k.spec) + " t<=" + std::to_string(t_max),
                "flip formula " + std::string(off ? "differs" : "agrees") + " on " + std::to_string(off ? off : cases) +
                    " of " + std::to_string(cases) + " (state, t) pairs");
}

// ---------------------------------------------------------------- suites

namespace {

struct Task {
  std::string suite;
  std::function<std::vector<CheckResult>()> run;
};

template <class F>
Task one(std::string suite, F f) {
  return {std::move(suite), [f] { return std::vector<CheckResult>{f()}; }};
}

const std::vector<std::pair<Sign, Involution>> kChains = {{Sign::plus, Involution::tau},
                                                          {Sign::minus, Involution::tau},
                                                          {Sign::plus, Involution::tau_tilde},
                                                          {Sign::minus, Involution::tau_tilde}};

std::vector<Task> tasks(int n_max, std::uint64_t seed) {
  std::vector<Task> out;
  const int chain_max = std::min(n_max, 4);
  out.push_back({"examples", [] { return worked_examples(); }});

  out.push_back(one("algebra", [] { return involutions_are_involutive(6, 3); }));
  out.push_back(one("algebra", [] { return involution_morphisms(5); }));
  out.push_back(one("algebra", [seed] { return bialgebra_compatibility(5, seed); }));
  out.push_back(one("algebra", [] { return primitives_preserved(4); }));
  out.push_back(one("algebra", [] { return bracket_parity(4); }));

  for (Involution f : {Involution::tau, Involution::tau_tilde})
    for (Algebra alg : {Algebra::shuffle, Algebra::concat}) {
      for (int n = 1; n <= std::min(n_max, 3); ++n)
        out.push_back(one("composition", [=] { return composition_exhaustive(n, 3, f, alg); }));
      if (n_max >= 4) out.push_back(one("composition", [=] { return composition_random(4, 50, f, alg, seed); }));
    }
  for (int n = 1; n <= std::min(n_max, 3); ++n)
    out.push_back({"composition", [n] { return riffle_composition(n, 3); }});

  for (Involution f : {Involution::tau, Involution::tau_tilde})
    for (int n = 1; n <= chain_max; ++n)
      out.push_back(one("duality", [=] { return duality(n, n <= 3 ? 3 : 2, f); }));
  for (int n = 1; n <= std::min(n_max, 3); ++n)
    for (int a : {2, 3})
      for (auto [s, f] : kChains) out.push_back(one("duality", [=] { return eigenbasis_duality(n, a, s, f); }));

  for (int n = 1; n <= chain_max; ++n)
    for (int a : {2, 3})
      for (auto [s, f] : kChains) out.push_back(one("spectral", [=] { return chain_spectrum(ShuffleSpec(n, a, s, f)); }));
  out.push_back(one("spectral", [n_max] { return table1_totals(std::max(n_max, 8)); }));
  for (auto [s, f] : kChains)
    for (int a : {2, 3}) {
      for (int n = 1; n <= 4; ++n) out.push_back(one("spectral", [=] { return riffle_spectrum_consistency(n, 1, a, s, f); }));
      for (int n = 1; n <= 3; ++n) out.push_back(one("spectral", [=] { return riffle_spectrum_consistency(n, 2, a, s, f); }));
    }
  for (int n = 1; n <= chain_max; ++n) out.push_back(one("spectral", [n] { return beta_type_a_reduction(n); }));

  for (Involution f : {Involution::tau, Involution::tau_tilde}) {
    out.push_back(one("triangularity", [f] { return triangularity(4, 1, f); }));
    out.push_back(one("triangularity", [f] { return triangularity(3, 2, f); }));
  }

  out.push_back(one("stirling", [n_max] { return stirling_closed_vs_recursive(std::max(n_max, 8)); }));
  out.push_back(one("stirling", [n_max] { return stirling_lr_minima(std::min(std::max(n_max, 7), 8)); }));
  out.push_back(one("stirling", [] { return stirling_lyndon_classes(5); }));
  out.push_back(one("stirling", [n_max] { return table1_totals(std::max(n_max, 8)); }));

  for (int n = 1; n <= chain_max; ++n)
    for (int a : {2, 3})
      for (auto [s, f] : kChains) out.push_back(one("eigen", [=] { return eigenbasis_suite(n, a, s, f); }));
  for (int a : {2, 3})
    for (Involution f : {Involution::tau, Involution::tau_tilde})
      out.push_back(one("eigen", [=] { return one_negating_primitive_identities(a, f, 40, seed + a); }));
  out.push_back(one("eigen", [] { return stdbrac_parity(5, 2); }));
  out.push_back(one("eigen", [chain_max] { return unreversed_flip_form(std::max(chain_max, 2), 3); }));

  for (int n = 1; n <= chain_max; ++n)
    for (int a : {2, 3})
      for (auto [s, f] : kChains)
        out.push_back({"markov", [=] {
                         const TransitionMatrix k = transition_matrix(ShuffleSpec(n, a, s, f));
                         return std::vector<CheckResult>{rows_sum_to_one(k), stationary_unique(k), subdominant(k)};
                       }});

  for (int n = 1; n <= chain_max; ++n)
    for (int a : {2, 3})
      for (auto [s, f] : kChains)
        out.push_back({"expectation", [=] {
                         const TransitionMatrix k = transition_matrix(ShuffleSpec(n, a, s, f));
                         if (f == Involution::tau_tilde) return std::vector<CheckResult>{descent_expectation_exact(k, 4)};
                         return std::vector<CheckResult>{rotation_descent_formula(k, 4)};
                       }});
  for (int n = 3; n <= chain_max; ++n)
    for (int a : {2, 3})
      for (Sign s : {Sign::plus, Sign::minus})
        for (int t : {1, 2, 4})
          out.push_back(one("expectation", [=] {
            return descent_expectation_monte_carlo(ShuffleSpec(n, a, s, Involution::tau_tilde), t, 100000,
                                                   seed + 1000 * n + 100 * a + 10 * t + (s == Sign::plus ? 0 : 1));
          }));
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"all", "examples", "algebra", "composition", "duality", "spectral", "triangularity",
          "stirling", "eigen", "markov", "expectation"};
}

VerifyReport run_suite(const std::string& suite, int n_max, int jobs, std::uint64_t seed) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw ParseError("unknown suite '" + suite + "'");
  std::vector<Task> selected;
  for (auto& t : tasks(n_max, seed))
    if (suite == "all" || t.suite == suite) selected.push_back(std::move(t));
  // biggest jobs are the n_max chains, listed last; start them first
  std::reverse(selected.begin(), selected.end());
  std::vector<std::vector<CheckResult>> results(selected.size());
  const int before = max_threads();
  set_threads(std::max(1, jobs));
  try {
    parallel_for(selected.size(), [&](std::size_t i) {
      try {
        results[i] = selected[i].run();
      } catch (const std::exception& e) {
        results[i] = {make(selected[i].suite + ".exception", "", false, e.what())};
      }
    });
  } catch (...) {
    set_threads(before);
    throw;
  }
  set_threads(before);
  VerifyReport r;
  for (auto& v : results)
    for (auto& c : v) r.checks.push_back(std::move(c));
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const CheckResult& x, const CheckResult& y) {
    return std::tie(x.name, x.scope) < std::tie(y.name, y.scope);
  });
  return r;
}

}  // namespace hyperoct::checks
