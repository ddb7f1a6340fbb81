// Characteristic formula synthesis: the finite basis B_X(p), its conjunction
// chi, the anti-characteristic formula bar_chi, the per-observation formulae
// of the linear spectrum, and decomposition of a consistent formula around a
// minimal pivot. CONF supports none of these (it has no finite basis).
#pragma once

#include <vector>

#include "core/ctx.hpp"
#include "core/linear.hpp"

namespace sk {

// Finite basis of the sub-logic language of p. In reduced mode the positive
// part has one diamond per transition (the maximal conjunction only); full
// mode materializes every subset conjunction of the successor basis and is
// feasible only on tiny instances.
struct BSet {
  Sem sem;
  bool full = false;
  std::vector<FId> positive;  // tt and the transition diamonds
  std::vector<FId> negative;  // the per-semantics box/deadlock members

  // Sorted duplicate-free union of both parts (the basis as a set).
  std::vector<FId> all() const;
};

// Branching semantics only; linear bases are the canonical observation
// formulae (see chi). Throws BudgetError in full mode when a successor basis
// exceeds the subset cap, ParseError for semantics without a basis.
BSet b_set(Ctx& cx, Sem s, CP p, bool full_mode = false);

// chi(s,p): satisfied by exactly the processes above p in the s-preorder.
FId chi(Ctx& cx, Sem s, CP p);

// bar_chi(s,p): unsatisfied by p, satisfied by every q that is not below p.
FId bar_chi(Ctx& cx, Sem s, CP p);

// The formula testing membership of one linear observation, per the
// observation-to-formula table of the linear spectrum.
FId obs_formula(Ctx& cx, const Obs& x);

// Models of sim_by(p) include every process simulated by p; the disjunct
// certifying membership in a possible-worlds class set.
FId sim_by(Ctx& cx, CP p);

enum class DecomposeStatus { Decomposed, AlreadyCharacteristic, Inconsistent };

struct DecomposeResult {
  DecomposeStatus status;
  CP pivot = nullptr;  // set unless Inconsistent
  FId chi_f = 0;       // chi of the pivot, set unless Inconsistent
  FId remainder = 0;   // bar_chi(pivot) /\ f, set only when Decomposed
};

// Splits sat_set(f,U) as clos(pivot) ∪ sat_set(remainder) with the pivot a
// minimal model (deterministic tie-break). Requires grammar_check(s, f).
DecomposeResult decompose(Ctx& cx, Sem s, FId f, const Universe& u);

}  // namespace sk
