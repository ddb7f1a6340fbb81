// Seeded random generation of processes, words, observations and
// grammar-valid formulae for the property suites. Every generator takes the
// rng by reference so suites stay reproducible from one seed.
#pragma once

#include <random>

#include "core/ctx.hpp"
#include "core/linear.hpp"

namespace sk {

using Rng = std::mt19937_64;

// Random canonical process with depth <= max_depth and at most max_width
// summands per node before deduplication.
CP sample_process(Ctx& cx, Rng& rng, int max_depth, int max_width = 2);

Trace sample_trace(Ctx& cx, Rng& rng, int max_len);

// Random formula accepted by grammar_check(s, .), with modal depth at most
// max_depth and roughly node_budget connectives.
FId sample_formula(Ctx& cx, Sem s, Rng& rng, int max_depth = 2,
                   int node_budget = 10);

// Random word-family observation (items need not alternate and sets may sit
// next to each other); data are drawn over universe(1) for the class datum.
Obs sample_word_obs(Ctx& cx, Sem s, Rng& rng, int max_items = 6);

}  // namespace sk
