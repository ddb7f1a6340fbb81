#include "doctest.h"

#include "core/charform.hpp"
#include "core/ctx.hpp"
#include "core/linear.hpp"
#include "core/primality.hpp"
#include "core/sampler.hpp"
#include "core/satisfy.hpp"

using namespace sk;

namespace {

CP C(Ctx& cx, const std::string& t) {
  return cx.procs.canonicalize(parse_process(t, cx.al));
}

FId P(Ctx& cx, const std::string& t) { return parse_formula(cx, t); }

bool equiv(Ctx& cx, Sem s, CP p, CP q) {
  return preorder(cx, s, p, q) && preorder(cx, s, q, p);
}

}  // namespace

TEST_CASE("verdicts on the canonical simulation examples") {
  Ctx cx(Alphabet::from_csv("a,b"));
  const Universe& u = cx.universe(1);

  auto v0 = verdict(cx, Sem::S, P(cx, "ff"), u);
  CHECK(v0.kind == Verdict::Kind::Inconsistent);

  auto v1 = verdict(cx, Sem::S, P(cx, "<a>tt"), u);
  REQUIRE(v1.kind == Verdict::Kind::Characteristic);
  CHECK(v1.pivot == C(cx, "a.0"));
  CHECK(v1.chi_f == chi(cx, Sem::S, v1.pivot));
  REQUIRE(v1.reps.size() == 1);
  CHECK(v1.reps[0] == v1.pivot);

  auto v2 = verdict(cx, Sem::S, P(cx, "<a>tt \\/ <b>tt"), u);
  REQUIRE(v2.kind == Verdict::Kind::NonPrime);
  CHECK(v2.reps.size() == 2);
  // the witness pair is a strict cover of the sat set
  Bits sf = sat_set(cx, P(cx, "<a>tt \\/ <b>tt"), u);
  Bits s1 = sat_set(cx, v2.w1, u);
  Bits s2 = sat_set(cx, v2.w2, u);
  Bits un = s1;
  un |= s2;
  CHECK(sf.subset_of(un));
  CHECK(!sf.subset_of(s1));
  CHECK(!sf.subset_of(s2));
}

TEST_CASE("chi always earns a characteristic verdict") {
  Ctx cx(Alphabet::from_csv("a,b"));
  const Universe& u = cx.universe(2);
  CP p = C(cx, "a.b.0");
  auto v = verdict(cx, Sem::T, chi(cx, Sem::T, p), u);
  REQUIRE(v.kind == Verdict::Kind::Characteristic);
  CHECK(equiv(cx, Sem::T, v.pivot, p));

  Rng rng(73);
  for (int i = 0; i < 25; ++i) {
    Sem s = static_cast<Sem>(i % kSemCount);
    if (s == Sem::CONF) continue;
    if (s == Sem::IF || s == Sem::IFT || s == Sem::IS || s == Sem::IST)
      continue;  // depth-3 complement universes blow the default budget here
    CP q = sample_process(cx, rng, 2);
    auto w = verdict(cx, s, chi(cx, s, q), u);
    CAPTURE(sem_name(s));
    CAPTURE(q->text);
    REQUIRE(w.kind == Verdict::Kind::Characteristic);
    CHECK(equiv(cx, s, w.pivot, q));
  }
}

TEST_CASE("anti-characteristic formulae are never characteristic for p") {
  Ctx cx(Alphabet::from_csv("a,b"));
  const Universe& u = cx.universe(1);
  CP p = C(cx, "a.0");
  auto v = verdict(cx, Sem::RS, bar_chi(cx, Sem::RS, p), u);
  REQUIRE(v.kind == Verdict::Kind::NonPrime);
  CHECK(v.reps.size() == 3);  // 0, b.0 and a.0+b.0 are pairwise incomparable
}

TEST_CASE("representations are minimal, incomparable and covering") {
  Ctx cx(Alphabet::from_csv("a,b"));
  const Universe& u = cx.universe(1);
  Rng rng(79);
  for (int i = 0; i < 60; ++i) {
    Sem s = static_cast<Sem>(i % kSemCount);
    if (s == Sem::CONF) continue;
    FId f = sample_formula(cx, s, rng);
    auto reps = minimal_models(cx, s, f, u);
    for (size_t a = 0; a < reps.size(); ++a)
      for (size_t b = 0; b < reps.size(); ++b)
        if (a != b) CHECK(!preorder(cx, s, reps[a], reps[b]));
    Bits sf = sat_set(cx, f, u);
    for (CP m : u.members) {
      bool covered = false;
      for (CP r : reps) covered = covered || preorder(cx, s, r, m);
      bool sat = sf.get(static_cast<size_t>(u.pos(m)));
      // upward closure of the minimal models is exactly the sat set
      CAPTURE(sem_name(s));
      CAPTURE(print_formula(cx, f));
      CAPTURE(m->text);
      CHECK(covered == sat);
    }
  }
}

TEST_CASE("randomized coherence harness stays silent") {
  Ctx cx(Alphabet::from_csv("a,b"));
  for (Sem s : {Sem::RS, Sem::T, Sem::S, Sem::F}) {
    auto rep = cross_check_theorem(cx, s, 30, 7);
    CAPTURE(sem_name(s));
    CHECK(rep.violations.empty());
    // 30 formula verdicts plus the chi-of-random-process round
    CHECK(rep.samples > 30);
    CHECK(rep.characteristic + rep.nonprime + rep.inconsistent == 30);
    CHECK(rep.checks > rep.samples);
  }
}
