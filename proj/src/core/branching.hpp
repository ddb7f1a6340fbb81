// Deciders for the branching preorders (simulation through bisimulation) and
// conformance simulation, by memoized structural recursion on canonical trees.
#pragma once

#include <string>
#include <vector>

#include "core/ctx.hpp"
#include "core/semantics.hpp"

namespace sk {

// s must be one of S, CS, RS, TS, 2S, BS, CONF.
bool branching_pre(Ctx& cx, Sem s, CP p, CP q);

inline bool sim(Ctx& cx, CP p, CP q) { return branching_pre(cx, Sem::S, p, q); }
bool strict_sim(Ctx& cx, CP p, CP q);

// a-successors of p that are maximal under strict simulation.
std::vector<CP> max_succ(Ctx& cx, CP p, int a);

// The classes simulated by p, as canonical members of universe(bound); with
// bound = depth(p) this is exactly the (finite) class set of p.
std::vector<CP> sim_class_set(Ctx& cx, CP p, int bound);

// Assumes branching_pre(s,p,q) failed; describes the failing clause, prefixed
// by the action path that reaches it.
std::string branching_witness(Ctx& cx, Sem s, CP p, CP q);

}  // namespace sk
