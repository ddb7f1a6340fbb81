#include "doctest.h"

#include "core/ctx.hpp"
#include "core/formula.hpp"
#include "core/sampler.hpp"
#include "core/satisfy.hpp"
#include "oracle.hpp"

using namespace sk;

namespace {

FId P(Ctx& cx, const std::string& t) { return parse_formula(cx, t); }

}  // namespace

TEST_CASE("formula parsing, printing and round trips") {
  Ctx cx(Alphabet::from_csv("a,b"));
  const char* samples[] = {
      "tt", "ff", "<a>tt", "[b]ff", "0f", "ready{}", "ready{a,b}",
      "traces{-}", "traces{-,a,ab}", "<<a>>tt",
      "<a>tt /\\ [b]ff", "<a>(tt \\/ <b>0f)", "~<a>tt",
      "<a><b>tt \\/ ready{a}",
  };
  for (const char* s : samples) {
    FId f = P(cx, s);
    CHECK(P(cx, print_formula(cx, f)) == f);
  }
  // sampled formulae round trip across every grammar
  Rng rng(17);
  for (int k = 0; k < kSemCount; ++k) {
    Sem s = static_cast<Sem>(k);
    for (int i = 0; i < 30; ++i) {
      FId f = sample_formula(cx, s, rng);
      CHECK(P(cx, print_formula(cx, f)) == f);
    }
  }

  CHECK_THROWS_AS(P(cx, "<c>tt"), ParseError);
  CHECK_THROWS_AS(P(cx, "<a>"), ParseError);
  CHECK_THROWS_AS(P(cx, "tt /\\"), ParseError);
  CHECK_THROWS_AS(P(cx, "ready{a"), ParseError);
  CHECK_THROWS_AS(P(cx, "traces{a"), ParseError);
}

TEST_CASE("sequence modalities flatten to unary chains") {
  Ctx cx(Alphabet::from_csv("a,b"));
  CHECK(P(cx, "<tau:ab>tt") == P(cx, "<a><b>tt"));
  CHECK(P(cx, "[tau:ba]ff") == P(cx, "[b][a]ff"));
  CHECK(P(cx, "<tau:a>0f") == P(cx, "<a>0f"));
  CHECK(cx.forms.node(P(cx, "<tau:ab>tt")).modal_depth == 2);
}

TEST_CASE("epsilon in trace sets is spelled -") {
  Ctx cx(Alphabet::from_csv("a,b"));
  FId f = P(cx, "traces{-,a}");
  const FNode& n = cx.forms.node(f);
  REQUIRE(n.tset.size() == 2);
  CHECK(n.tset[0].empty());
  CHECK(n.tset[1] == std::vector<int>{0});
  CHECK(print_formula(cx, f) == "traces{-,a}");
  CHECK(n.modal_depth == 2);  // longest member plus one
  CHECK(cx.forms.node(P(cx, "ready{}")).modal_depth == 1);
}

TEST_CASE("connective identities: raw keeps shape, smart normalizes") {
  Ctx cx(Alphabet::from_csv("a,b"));
  // AC equality through the parser
  CHECK(P(cx, "<a>tt /\\ <b>tt") == P(cx, "<b>tt /\\ <a>tt"));
  CHECK(P(cx, "(<a>tt /\\ <b>tt) /\\ 0f") == P(cx, "0f /\\ <b>tt /\\ <a>tt"));
  // but parsed duplicates and units survive
  CHECK(P(cx, "tt /\\ tt") != cx.forms.tt());
  CHECK(cx.forms.node(P(cx, "tt /\\ tt")).k == FK::And);
  CHECK(P(cx, "<a>tt \\/ ff") != P(cx, "<a>tt"));

  // the synthesis constructors collapse all of that
  FId d = P(cx, "<a>tt");
  CHECK(cx.forms.mand({d, d}) == d);
  CHECK(cx.forms.mand({d, cx.forms.tt()}) == d);
  CHECK(cx.forms.mand({d, cx.forms.ff()}) == cx.forms.ff());
  CHECK(cx.forms.mor({d, cx.forms.ff()}) == d);
  CHECK(cx.forms.mor({d, cx.forms.tt()}) == cx.forms.tt());
  CHECK(cx.forms.mand({}) == cx.forms.tt());
  CHECK(cx.forms.mor({}) == cx.forms.ff());
  CHECK(cx.forms.mneg(cx.forms.mneg(d)) == d);
}

TEST_CASE("desugaring is sound and yields core syntax") {
  Ctx cx(Alphabet::from_csv("a,b"));
  Rng rng(23);
  const Universe& u = cx.universe(1);

  std::vector<FId> pool;
  for (int k = 0; k < kSemCount; ++k) {
    Sem s = static_cast<Sem>(k);
    if (s == Sem::CONF) continue;  // the conformance modality has no core dual
    for (int i = 0; i < 10; ++i) pool.push_back(sample_formula(cx, s, rng));
  }
  pool.push_back(P(cx, "ready{a}"));
  pool.push_back(P(cx, "traces{-,a,ab}"));
  pool.push_back(P(cx, "0f /\\ [a]ff"));

  auto core_only = [&](FId f, auto&& self) -> bool {
    const FNode& n = cx.forms.node(f);
    if (n.k == FK::ZeroF || n.k == FK::Ready || n.k == FK::TraceSetF ||
        n.k == FK::ConfDia)
      return false;
    for (FId k : n.kids)
      if (!self(k, self)) return false;
    return true;
  };

  for (FId f : pool) {
    FId d = desugar(cx, f);
    CHECK(core_only(d, core_only));
    for (CP p : u.members) {
      PP t = canon_to_proc(p);
      CHECK(satisfies(cx, p, f) == satisfies(cx, p, d));
      CHECK(satisfies(cx, p, f) == oracle::sat(cx, t, f));
    }
  }
}

TEST_CASE("negation push computes the complement") {
  Ctx cx(Alphabet::from_csv("a,b"));
  Rng rng(29);
  const Universe& u = cx.universe(2);
  for (int i = 0; i < 60; ++i) {
    Sem s = static_cast<Sem>(i % kSemCount);
    if (s == Sem::CONF) continue;
    FId f = sample_formula(cx, s, rng);
    FId nf = neg_push(cx, f);
    for (int j = 0; j < 40; ++j) {
      CP p = u.members[rng() % u.members.size()];
      CHECK(satisfies(cx, p, nf) == !satisfies(cx, p, f));
    }
  }
  CHECK(neg_push(cx, P(cx, "<a>tt")) == P(cx, "[a]ff"));
  CHECK(neg_push(cx, P(cx, "~<a>tt")) == P(cx, "<a>tt"));
  CHECK_THROWS_AS(neg_push(cx, P(cx, "<<a>>tt")), ParseError);
}

TEST_CASE("satisfaction agrees with the tree-walk oracle on sampled pairs") {
  Ctx cx(Alphabet::from_csv("a,b"));
  Rng rng(31);
  for (int i = 0; i < 250; ++i) {
    Sem s = static_cast<Sem>(i % kSemCount);
    FId f = sample_formula(cx, s, rng);
    CP p = sample_process(cx, rng, 2);
    CHECK(satisfies(cx, p, f) == oracle::sat(cx, canon_to_proc(p), f));
  }
}

TEST_CASE("dag size counts shared nodes once") {
  Ctx cx(Alphabet::from_csv("a,b"));
  CHECK(formula_dag_size(cx, cx.forms.tt()) == 1);
  // <a>tt /\ <b>(<a>tt \/ 0f): tt, <a>tt, 0f, or, <b>..., and
  CHECK(formula_dag_size(cx, P(cx, "<a>tt /\\ <b>(<a>tt \\/ 0f)")) == 6);
}
