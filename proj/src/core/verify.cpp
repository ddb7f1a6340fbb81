#include "core/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>

#include "core/branching.hpp"
#include "core/charform.hpp"
#include "core/grammar.hpp"
#include "core/primality.hpp"
#include "core/sampler.hpp"
#include "core/satisfy.hpp"
#include "core/verify.hpp"

namespace sk {

namespace {

constexpr size_t kMaxViolations = 25;

struct Run {
  SuiteReport rep;
  SuiteOptions opt;

  bool want(Sem s) const { return !opt.only || *opt.only == s; }

  void fail(const std::string& msg) {
    if (rep.violations.size() < kMaxViolations) rep.violations.push_back(msg);
  }

  // one assertion; returns ok so callers can break early on dense failures
  bool check(bool ok, const std::string& msg) {
    ++rep.checks;
    if (!ok) fail(msg);
    return ok;
  }
};

// Ctx is self-referential (the canon table points at the alphabet member),
// so it lives behind a pointer.
std::unique_ptr<Ctx> make_ctx(const SuiteOptions& opt,
                              const std::string& alphabet = "") {
  auto cx = std::make_unique<Ctx>(
      Alphabet::from_csv(alphabet.empty() ? opt.alphabet : alphabet));
  cx->class_cap = opt.class_cap;
  return cx;
}

CP pick_member(const Universe& u, Rng& rng) {
  return u.members[rng() % u.members.size()];
}

std::string pair_tag(Sem s, CP p, CP q) {
  return std::string(sem_name(s)) + ": p='" + p->text + "' q='" + q->text + "'";
}

// ---------------------------------------------------------------- suites

void chi_biconditional(Run& r) {
  long n = r.opt.samples > 0 ? r.opt.samples : 5000;
  auto cxp = make_ctx(r.opt);
  Ctx& cx = *cxp;
  const Universe& u = cx.universe(2);
  Rng rng(r.opt.seed);
  const Sem broad[] = {Sem::S,  Sem::CS, Sem::RS, Sem::TS, Sem::TwoS,
                       Sem::BS, Sem::T,  Sem::CT, Sem::F,  Sem::FT,
                       Sem::R,  Sem::RT, Sem::PF, Sem::PS};
  for (Sem s : broad) {
    if (!r.want(s)) continue;
    for (long i = 0; i < n; ++i) {
      CP p = pick_member(u, rng), q = pick_member(u, rng);
      bool lhs = satisfies(cx, q, chi(cx, s, p));
      bool rhs = preorder(cx, s, p, q);
      r.check(lhs == rhs, "chi biconditional fails on " + pair_tag(s, p, q));
    }
  }
  // the complement-hungry families, exhaustively on the one-action universe
  auto cap = make_ctx(r.opt, "a");
  Ctx& ca = *cap;
  const Universe& ua = ca.universe(2);
  const Sem tight[] = {Sem::IF, Sem::IFT, Sem::IS, Sem::IST, Sem::PFT, Sem::PST};
  for (Sem s : tight) {
    if (!r.want(s)) continue;
    for (CP p : ua.members)
      for (CP q : ua.members) {
        bool lhs = satisfies(ca, q, chi(ca, s, p));
        bool rhs = preorder(ca, s, p, q);
        r.check(lhs == rhs, "chi biconditional fails on " + pair_tag(s, p, q));
      }
  }
}

void barchi_lemmas(Run& r) {
  long sampled = r.opt.samples > 0 ? r.opt.samples : 50;
  auto cxp = make_ctx(r.opt);
  Ctx& cx = *cxp;
  const Universe& u = cx.universe(2);

  auto lemma = [&r](Ctx& c, Sem s, CP p, const std::vector<CP>& range) {
    FId f = bar_chi(c, s, p);
    r.check(!satisfies(c, p, f),
            std::string(sem_name(s)) + ": '" + p->text +
                "' satisfies its own anti-characteristic formula");
    for (CP q : range) {
      if (preorder(c, s, q, p)) continue;
      if (!r.check(satisfies(c, q, f),
                   std::string(sem_name(s)) + ": '" + q->text +
                       "' is not below '" + p->text +
                       "' yet misses the anti-characteristic formula"))
        return;
    }
  };

  const Sem branching[] = {Sem::S,  Sem::CS, Sem::RS,
                           Sem::TS, Sem::TwoS, Sem::BS};
  for (Sem s : branching) {
    if (!r.want(s)) continue;
    for (CP p : u.members) lemma(cx, s, p, u.members);
  }

  // every linear family is feasible on the one-action universe
  auto cap = make_ctx(r.opt, "a");
  Ctx& ca = *cap;
  const Universe& ua = ca.universe(2);
  for (int i = 0; i < kSemCount; ++i) {
    Sem s = static_cast<Sem>(i);
    if (sem_is_branching(s) || s == Sem::CONF || !r.want(s)) continue;
    for (CP p : ua.members) lemma(ca, s, p, ua.members);
  }

  // sampled two-action processes for the enumerable families
  const Sem enumerable[] = {Sem::T, Sem::CT, Sem::F,  Sem::FT,
                            Sem::R, Sem::RT, Sem::PF, Sem::PS};
  Rng rng(r.opt.seed);
  for (long i = 0; i < sampled; ++i) {
    CP p = sample_process(cx, rng, 2);
    for (Sem s : enumerable)
      if (r.want(s)) lemma(cx, s, p, u.members);
  }
}

void decomposition(Run& r) {
  long n = r.opt.samples > 0 ? r.opt.samples : 100;
  auto cxp = make_ctx(r.opt);
  Ctx& cx = *cxp;
  Rng rng(r.opt.seed);
  for (Sem s : decompose_supported()) {
    if (!r.want(s)) continue;
    long done = 0, attempts = 0;
    while (done < n && attempts < n * 60) {
      ++attempts;
      FId f = sample_formula(cx, s, rng);
      const Universe& u = cx.universe(cx.forms.node(f).modal_depth);
      Bits sat = sat_set(cx, f, u);
      if (!sat.any()) continue;  // the identity is about consistent formulae
      ++done;
      DecomposeResult d = decompose(cx, s, f, u);
      std::string tag = std::string(sem_name(s)) + " on " + print_formula(cx, f);
      if (!r.check(d.status != DecomposeStatus::Inconsistent,
                   "consistent formula decomposed as inconsistent: " + tag))
        continue;
      Bits sc = sat_set(cx, d.chi_f, u);
      if (d.status == DecomposeStatus::AlreadyCharacteristic) {
        r.check(sc == sat, "characteristic sat set mismatch: " + tag);
        continue;
      }
      Bits sr = sat_set(cx, d.remainder, u);
      Bits uni = sc;
      uni |= sr;
      r.check(uni == sat, "decomposition union differs from sat set: " + tag);
      int pos = u.pos(d.pivot);
      r.check(pos >= 0 && !sr.get(size_t(pos)),
              "pivot satisfies the remainder: " + tag);
      r.check(pos >= 0 && sc.get(size_t(pos)),
              "pivot misses its own characteristic formula: " + tag);
    }
    if (done < n)
      r.fail(std::string(sem_name(s)) +
             ": sampler starved of consistent formulae");
  }
}

void primality(Run& r) {
  long n = r.opt.samples > 0 ? r.opt.samples : 100;
  auto cxp = make_ctx(r.opt);
  Ctx& cx = *cxp;
  for (Sem s : decompose_supported()) {
    if (!r.want(s)) continue;
    CrossCheckReport c = cross_check_theorem(cx, s, int(n), r.opt.seed);
    r.rep.checks += c.checks;
    for (const std::string& v : c.violations)
      r.fail(std::string(sem_name(s)) + ": " + v);
  }
}

void linear_oracle(Run& r) {
  long n = r.opt.samples > 0 ? r.opt.samples : 1000;
  auto cxp = make_ctx(r.opt);
  Ctx& cx = *cxp;
  const Universe& u = cx.universe(2);
  Rng rng(r.opt.seed);
  std::map<std::pair<int, CP>, std::vector<Obs>> cache;
  auto xfin = [&](Ctx& c, Sem s, CP p, const ObsBudget& b) -> const std::vector<Obs>& {
    auto key = std::make_pair(int(s), p);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, xfin_enumerate(c, s, p, b)).first;
    return it->second;
  };

  const Sem exact[] = {Sem::T, Sem::CT, Sem::F,  Sem::R,
                       Sem::FT, Sem::RT, Sem::PF, Sem::PS};
  ObsBudget unlimited;
  for (Sem s : exact) {
    if (!r.want(s)) continue;
    for (long i = 0; i < n; ++i) {
      CP p = pick_member(u, rng), q = pick_member(u, rng);
      bool lhs = linear_pre(cx, s, p, q);
      bool rhs = true;
      for (const Obs& x : xfin(cx, s, p, unlimited))
        if (!obs_member(cx, q, x)) {
          rhs = false;
          break;
        }
      r.check(lhs == rhs,
              "decider disagrees with the enumerated observation sets on " +
                  pair_tag(s, p, q));
    }
  }

  // capped enumeration is only a necessary condition for these families;
  // class sets get a tighter cap because even two-element subsets of the
  // depth-3 complement universe multiply past the observation budget
  auto cap = make_ctx(r.opt, "a");
  Ctx& ca = *cap;
  const Universe& ua = ca.universe(2);
  const Sem budgeted[] = {Sem::IF, Sem::IFT, Sem::IS, Sem::IST};
  for (Sem s : budgeted) {
    if (!r.want(s)) continue;
    ObsBudget capped;
    capped.set_card_cap = sem_datum(s) == Datum::Classes ? 1 : 2;
    for (CP p : ua.members)
      for (CP q : ua.members) {
        if (!linear_pre(ca, s, p, q)) continue;
        for (const Obs& x : xfin(ca, s, p, capped))
          if (!r.check(obs_member(ca, q, x),
                       "budgeted oracle contradicts the decider on " +
                           pair_tag(s, p, q)))
            break;
      }
  }
}

void spectrum_lattice(Run& r) {
  long n = r.opt.samples > 0 ? r.opt.samples : 2000;
  auto cxp = make_ctx(r.opt);
  Ctx& cx = *cxp;
  const Universe& u = cx.universe(2);
  Rng rng(r.opt.seed);
  const auto& arrows = spectrum_arrows();
  for (long i = 0; i < n; ++i) {
    CP p = pick_member(u, rng), q = pick_member(u, rng);
    bool holds[kSemCount];
    for (int k = 0; k < kSemCount; ++k)
      holds[k] = preorder(cx, static_cast<Sem>(k), p, q);
    for (const SemArrow& a : arrows)
      r.check(!holds[int(a.finer)] || holds[int(a.coarser)],
              std::string(sem_name(a.finer)) + " holds but " +
                  std::string(sem_name(a.coarser)) + " fails on " +
                  pair_tag(a.finer, p, q));
  }
}

void conformance_chain(Run& r) {
  auto cxp = make_ctx(r.opt);
  Ctx& cx = *cxp;
  if (cx.al.size() < 2)
    throw ParseError("the conformance chain needs two actions");
  // p_k = sum_{i=1..k} a^i.b.0
  auto chain = [&cx](int k) {
    PP acc = nullptr;
    for (int i = 1; i <= k; ++i) {
      PP t = Proc::prefix(1, Proc::nil());
      for (int j = 0; j < i; ++j) t = Proc::prefix(0, std::move(t));
      acc = acc ? Proc::sum(std::move(acc), std::move(t)) : std::move(t);
    }
    return cx.procs.canonicalize(acc);
  };
  for (int k = 1; k <= 4; ++k) {
    CP lo = chain(k), hi = chain(k + 1);
    r.check(preorder(cx, Sem::CONF, hi, lo),
            "longer chain stopped conforming to the shorter at k=" +
                std::to_string(k));
    r.check(!preorder(cx, Sem::CONF, lo, hi),
            "shorter chain conforms to the longer at k=" + std::to_string(k));
  }
}

void word_normalization(Run& r) {
  long n = r.opt.samples > 0 ? r.opt.samples : 500;
  auto cxp = make_ctx(r.opt);
  Ctx& cx = *cxp;
  Rng rng(r.opt.seed);
  const Sem word[] = {Sem::FT,  Sem::RT,  Sem::IFT,
                      Sem::PFT, Sem::IST, Sem::PST};
  for (long i = 0; i < n; ++i) {
    Sem s = word[i % 6];
    if (!r.want(s)) continue;
    CP p = sample_process(cx, rng, 2);
    Obs x = sample_word_obs(cx, s, rng);
    Obs y = normalize_word(cx, x);
    bool before = obs_member(cx, p, x);
    r.check(before == obs_member(cx, p, y),
            "membership changed under set merging: " + obs_to_string(cx, x) +
                " vs " + obs_to_string(cx, y) + " on '" + p->text + "'");
    if (before && sem_is_refusal(s)) {
      // dropping any one set element must keep membership
      Obs weaker = x;
      for (size_t j = 0; j < weaker.items.size(); ++j)
        if (weaker.items[j].k != ObsItem::Act) {
          weaker.items.erase(weaker.items.begin() + j);
          break;
        }
      if (weaker.items.size() < x.items.size())
        r.check(obs_member(cx, p, weaker),
                "dropping a set element lost membership: " +
                    obs_to_string(cx, x) + " on '" + p->text + "'");
    }
  }

  // canonical words stay within the alternation bound
  auto bound_check = [&r](Ctx& c, Sem s, CP p) {
    for (const Obs& x : canonical_obs(c, s, p))
      r.check(x.items.size() <= size_t(2 * p->depth + 1),
              std::string(sem_name(s)) + ": canonical word longer than 2d+1 on '" +
                  p->text + "'");
  };
  const Universe& u = cx.universe(2);
  for (Sem s : {Sem::FT, Sem::RT, Sem::IFT, Sem::PFT, Sem::PST}) {
    if (!r.want(s)) continue;
    for (CP p : u.members) bound_check(cx, s, p);
  }
  auto cap = make_ctx(r.opt, "a");
  Ctx& ca = *cap;
  if (r.want(Sem::IST))
    for (CP p : ca.universe(2).members) bound_check(ca, Sem::IST, p);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "chi-biconditional", "barchi-lemmas",     "decomposition",
      "primality",         "linear-oracle",     "spectrum-lattice",
      "conformance-chain", "word-normalization"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  Run r;
  r.rep.suite = name;
  r.opt = opt;
  auto t0 = std::chrono::steady_clock::now();
  if (name == "chi-biconditional") chi_biconditional(r);
  else if (name == "barchi-lemmas") barchi_lemmas(r);
  else if (name == "decomposition") decomposition(r);
  else if (name == "primality") primality(r);
  else if (name == "linear-oracle") linear_oracle(r);
  else if (name == "spectrum-lattice") spectrum_lattice(r);
  else if (name == "conformance-chain") conformance_chain(r);
  else if (name == "word-normalization") word_normalization(r);
  else throw ParseError("unknown suite '" + name + "'");
  r.rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r.rep;
}

}  // namespace sk
