#include "core/primality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "core/charform.hpp"
#include "core/grammar.hpp"
#include "core/sampler.hpp"
#include "core/satisfy.hpp"

namespace sk {

namespace {

// decompose/verdict tie-break order: depth, then node count, then text
bool pivot_less(CP a, CP b) {
  if (a == b) return false;
  if (a->depth != b->depth) return a->depth < b->depth;
  int sa = canon_size(a), sb = canon_size(b);
  if (sa != sb) return sa < sb;
  return a->text < b->text;
}

std::string clip(const std::string& s) {
  return s.size() <= 120 ? s : s.substr(0, 117) + "...";
}

}  // namespace

std::vector<CP> minimal_models(Ctx& cx, Sem s, FId f, const Universe& u) {
  Bits sat = sat_set(cx, f, u);
  std::vector<CP> models;
  for (size_t i = 0; i < u.members.size(); ++i)
    if (sat.get(i)) models.push_back(u.members[i]);

  std::vector<CP> mins;
  for (CP m : models) {
    bool minimal = true;
    for (CP o : models) {
      if (o != m && preorder(cx, s, o, m) && !preorder(cx, s, m, o)) {
        minimal = false;
        break;
      }
    }
    if (minimal) mins.push_back(m);
  }
  std::sort(mins.begin(), mins.end(), pivot_less);

  std::vector<CP> rep;
  for (CP m : mins) {
    bool seen = false;
    for (CP r : rep) {
      if (preorder(cx, s, r, m) && preorder(cx, s, m, r)) {
        seen = true;
        break;
      }
    }
    if (!seen) rep.push_back(m);
  }
  return rep;
}

Verdict verdict(Ctx& cx, Sem s, FId f, const Universe& u) {
  if (!grammar_check(cx, s, f))
    throw ParseError("formula is outside the sub-logic of " +
                     std::string(sem_name(s)) + ": " +
                     grammar_explain(cx, s, f));
  Verdict v{Verdict::Kind::Inconsistent};
  v.reps = minimal_models(cx, s, f, u);
  if (v.reps.empty()) return v;

  if (v.reps.size() == 1) {
    v.pivot = v.reps.front();
    Bits sat = sat_set(cx, f, u);
    for (size_t i = 0; i < u.members.size(); ++i)
      if (sat.get(i) != preorder(cx, s, v.pivot, u.members[i]))
        throw std::logic_error(
            "sat set with a single minimal model is not its upward closure");
    v.kind = Verdict::Kind::Characteristic;
    v.chi_f = chi(cx, s, v.pivot);
    return v;
  }

  v.kind = Verdict::Kind::NonPrime;
  v.w1 = chi(cx, s, v.reps.front());
  std::vector<FId> rest;
  for (size_t i = 1; i < v.reps.size(); ++i)
    rest.push_back(chi(cx, s, v.reps[i]));
  v.w2 = cx.forms.mor(std::move(rest));
  return v;
}

CrossCheckReport cross_check_theorem(Ctx& cx, Sem s, int samples,
                                     uint64_t seed, int pool_size) {
  CrossCheckReport rep;
  Rng rng(seed);

  std::vector<FId> pool;
  pool.reserve(pool_size);
  for (int i = 0; i < pool_size; ++i)
    pool.push_back(sample_formula(cx, s, rng));
  // pool sat sets, computed lazily per universe depth actually used
  std::map<int, std::vector<Bits>> pool_sat;

  for (int n = 0; n < samples; ++n) {
    FId f = sample_formula(cx, s, rng);
    const Universe& u = cx.universe(cx.forms.node(f).modal_depth);
    Bits sat = sat_set(cx, f, u);
    Verdict v = verdict(cx, s, f, u);
    ++rep.samples;

    if (v.kind == Verdict::Kind::Inconsistent) {
      ++rep.inconsistent;
      ++rep.checks;
      if (sat.any())
        rep.violations.push_back("inconsistent verdict with a model: " +
                                 clip(print_formula(cx, f)));
      continue;
    }

    if (v.kind == Verdict::Kind::Characteristic) {
      ++rep.characteristic;
      // the defining biconditional, through both f and its chi
      for (size_t i = 0; i < u.members.size(); ++i) {
        ++rep.checks;
        bool above = preorder(cx, s, v.pivot, u.members[i]);
        if (sat.get(i) != above ||
            satisfies(cx, u.members[i], v.chi_f) != above) {
          rep.violations.push_back("characteristic verdict fails for '" +
                                   u.members[i]->text + "' on " +
                                   clip(print_formula(cx, f)));
          break;
        }
      }
      // cover-refutation attack from the random pool
      auto& psat = pool_sat[u.max_depth];
      if (psat.empty())
        for (FId g : pool) psat.push_back(sat_set(cx, g, u));
      std::vector<char> covers(pool.size());
      for (size_t i = 0; i < pool.size(); ++i)
        covers[i] = sat.subset_of(psat[i]) ? 1 : 0;
      bool refuted = false;
      for (size_t i = 0; i < pool.size() && !refuted; ++i) {
        if (covers[i]) continue;
        for (size_t j = i + 1; j < pool.size(); ++j) {
          if (covers[j]) continue;
          ++rep.checks;
          Bits both = psat[i];
          both |= psat[j];
          if (sat.subset_of(both)) {
            refuted = true;
            break;
          }
        }
      }
      if (refuted)
        rep.violations.push_back("two-formula cover refutes primality of " +
                                 clip(print_formula(cx, f)));
      continue;
    }

    ++rep.nonprime;
    Bits s1 = sat_set(cx, v.w1, u);
    Bits s2 = sat_set(cx, v.w2, u);
    Bits both = s1;
    both |= s2;
    ++rep.checks;
    if (!sat.subset_of(both))
      rep.violations.push_back("witness pair is not a cover for " +
                               clip(print_formula(cx, f)));
    if (sat.subset_of(s1) || sat.subset_of(s2))
      rep.violations.push_back("one witness alone already covers " +
                               clip(print_formula(cx, f)));
  }

  // chi of a random process must come back Characteristic at that process
  const Universe& u2 = cx.universe(2);
  for (int n = 0; n < samples / 4 + 1; ++n) {
    CP p = u2.members[rng() % u2.members.size()];
    Verdict v = verdict(cx, s, chi(cx, s, p), u2);
    ++rep.samples;
    ++rep.checks;
    if (v.kind != Verdict::Kind::Characteristic ||
        !preorder(cx, s, p, v.pivot) || !preorder(cx, s, v.pivot, p))
      rep.violations.push_back("chi of '" + p->text +
                               "' did not verdict as its own class");
  }
  return rep;
}

}  // namespace sk
