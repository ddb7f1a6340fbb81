#include "doctest.h"

#include <set>

#include "core/ctx.hpp"
#include "core/process.hpp"
#include "core/sampler.hpp"
#include "oracle.hpp"

using namespace sk;

TEST_CASE("parse and print process terms") {
  Alphabet al = Alphabet::from_csv("a,b,c");
  CHECK(print_process(parse_process("0", al), al) == "0");
  CHECK(print_process(parse_process("a.0", al), al) == "a.0");
  CHECK(print_process(parse_process("a.b.0 + a.0", al), al) == "a.b.0 + a.0");
  CHECK(print_process(parse_process("a.(b.0 + c.0)", al), al) ==
        "a.(b.0 + c.0)");
  // whitespace is free
  CHECK(print_process(parse_process("  a . ( b.0+c.0 ) ", al), al) ==
        "a.(b.0 + c.0)");

  CHECK_THROWS_AS(parse_process("a.", al), ParseError);
  CHECK_THROWS_AS(parse_process("d.0", al), ParseError);
  CHECK_THROWS_AS(parse_process("a.0 +", al), ParseError);
  CHECK_THROWS_AS(parse_process("(a.0", al), ParseError);
  CHECK_THROWS_AS(parse_process("", al), ParseError);
}

TEST_CASE("transitions keep duplicates, initials and depth are derived") {
  Alphabet al = Alphabet::from_csv("a,b");
  PP p = parse_process("a.0 + a.0", al);
  CHECK(transitions(p).size() == 2);

  CHECK(depth(parse_process("0", al)) == 0);
  CHECK(depth(parse_process("a.b.0 + a.0", al)) == 2);
  CHECK(depth(parse_process("a.0 + b.0", al)) == 1);

  CHECK(initials(parse_process("a.b.0", al)) == 1u);
  CHECK(initials(parse_process("a.0 + b.0", al)) == 3u);
  CHECK(initials(parse_process("0", al)) == 0u);
}

TEST_CASE("canonical forms identify exactly the bisimilar terms") {
  Ctx cx(Alphabet::from_csv("a,b"));
  auto canon = [&](const char* t) {
    return cx.procs.canonicalize(parse_process(t, cx.al));
  };

  CHECK(canon("a.0 + a.0") == canon("a.0"));
  CHECK(canon("a.0 + b.0") == canon("b.0 + a.0"));
  CHECK(canon("a.(b.0 + b.0)") == canon("a.b.0"));
  CHECK(canon("(a.0 + b.0) + a.0") == canon("b.0 + a.0"));
  CHECK(canon("a.b.0") != canon("a.0"));

  // canonical identity agrees with coinductive bisimilarity on all pairs of
  // the depth-2 one-action universe and a sampled slice of the two-action one
  const Universe& ua = cx.universe(2);
  for (CP c : ua.members) {
    PP back = canon_to_proc(c);
    CHECK(cx.procs.canonicalize(back) == c);
  }
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    CP x = sample_process(cx, rng, 2);
    CP y = sample_process(cx, rng, 2);
    CHECK((x == y) == oracle::bisim(canon_to_proc(x), canon_to_proc(y)));
  }
}

TEST_CASE("universe enumeration counts and closure") {
  Ctx ca(Alphabet::from_csv("a"));
  CHECK(ca.universe(0).members.size() == 1);
  CHECK(ca.universe(1).members.size() == 2);
  CHECK(ca.universe(2).members.size() == 4);

  Ctx cab(Alphabet::from_csv("a,b"));
  CHECK(cab.universe(1).members.size() == 4);
  CHECK(cab.universe(2).members.size() == 256);

  // members are pairwise distinct canonical pointers, sorted and indexed
  const Universe& u = cab.universe(2);
  std::set<CP> seen(u.members.begin(), u.members.end());
  CHECK(seen.size() == u.members.size());
  for (size_t i = 0; i < u.members.size(); ++i)
    CHECK(u.pos(u.members[i]) == static_cast<int>(i));

  // closed under canonicalization of arbitrary depth-2 terms
  Rng rng(3);
  for (int i = 0; i < 300; ++i)
    CHECK(u.pos(sample_process(cab, rng, 2, 3)) >= 0);

  // depth 3 at two actions crosses the default class cap
  CHECK_THROWS_AS(cab.universe(3), BudgetError);
}

TEST_CASE("trace sets are prefix-closed and successor-consistent") {
  Ctx cx(Alphabet::from_csv("a,b"));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    CP p = sample_process(cx, rng, 2);
    const TraceSet& ts = cx.traces_of(p);
    CHECK(std::binary_search(ts.begin(), ts.end(), Trace{}));
    CHECK(ts == oracle::traces(canon_to_proc(p)));
    for (auto& [a, c] : p->kids)
      for (const Trace& t : cx.traces_of(c)) {
        Trace ext{a};
        ext.insert(ext.end(), t.begin(), t.end());
        CHECK(std::binary_search(ts.begin(), ts.end(), ext));
      }
    CHECK((p->depth == 0) == (p->initials == 0));
  }
}

TEST_CASE("canonical order and node counts") {
  Ctx cx(Alphabet::from_csv("a,b"));
  auto canon = [&](const char* t) {
    return cx.procs.canonicalize(parse_process(t, cx.al));
  };
  CP z = canon("0"), a = canon("a.0"), ab = canon("a.0 + b.0");
  CHECK(canon_less(z, a));       // depth first
  CHECK(canon_less(a, ab));      // then text
  CHECK_FALSE(canon_less(a, a));
  CHECK(canon_size(z) == 1);
  CHECK(canon_size(a) == 2);
  CHECK(canon_size(canon("a.b.0 + b.0")) == 4);
}
