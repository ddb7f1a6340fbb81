// Consistency, primality and characteristicity verdicts over a bounded
// universe, plus the randomized coherence harness that re-verifies every
// verdict against its definition.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/ctx.hpp"

namespace sk {

// Minimal elements of sat_set(f,u) under the s-preorder, one representative
// per equivalence class, sorted by (depth, node count, canonical text). This
// is the graphical representation of f restricted to u: the upward closures
// of the result cover the sat set, and no two members compare.
std::vector<CP> minimal_models(Ctx& cx, Sem s, FId f, const Universe& u);

struct Verdict {
  enum class Kind { Inconsistent, Characteristic, NonPrime } kind;
  CP pivot = nullptr;     // Characteristic
  FId chi_f = 0;          // Characteristic
  std::vector<CP> reps{};  // Characteristic (singleton) and NonPrime
  FId w1 = 0, w2 = 0;     // NonPrime cover witnesses
};

// Requires grammar_check(s, f). Characteristic when the sat set is one
// upward closure; otherwise NonPrime with the literal two-formula cover
// (chi of the least representative, disjunction of the others' chi).
Verdict verdict(Ctx& cx, Sem s, FId f, const Universe& u);

struct CrossCheckReport {
  long samples = 0;
  long characteristic = 0;
  long nonprime = 0;
  long inconsistent = 0;
  long checks = 0;
  std::vector<std::string> violations;
};

// Random-formula coherence run: every Characteristic verdict is re-verified
// through the defining biconditional and attacked with a pool of random
// two-formula covers; every NonPrime witness pair is re-verified as a cover
// containing the sat set with neither side alone sufficient; chi of random
// processes must come back Characteristic with an equivalent pivot.
CrossCheckReport cross_check_theorem(Ctx& cx, Sem s, int samples,
                                     uint64_t seed, int pool_size = 200);

}  // namespace sk
