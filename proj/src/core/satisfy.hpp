// Model checking p |= f on canonical processes, memoized per (process,
// formula) pair in the Ctx.
#pragma once

#include "core/bits.hpp"
#include "core/ctx.hpp"

namespace sk {

bool satisfies(Ctx& cx, CP p, FId f);
bool satisfies(Ctx& cx, const PP& p, FId f);

// Members of U satisfying f, indexed by universe position.
Bits sat_set(Ctx& cx, FId f, const Universe& u);

}  // namespace sk
