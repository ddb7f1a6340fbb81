// Linear-spectrum machinery: observations, membership, canonical generating
// sets, budgeted literal enumeration, and the preorder deciders.
//
// The deciders never materialize observation sets; each linear preorder
// reduces to matching reachable states (pair families) or root-to-leaf paths
// (word families) under a per-semantics relation between the states' data.
#pragma once

#include <string>
#include <vector>

#include "core/ctx.hpp"
#include "core/semantics.hpp"

namespace sk {

struct ObsItem {
  enum K { Act, Acts, Traces, Classes } k;
  int act = -1;              // Act
  ActMask acts = 0;          // Acts (refusal or ready set)
  TraceSet traces{};         // Traces (avoided or possessed trace set), sorted
  std::vector<CP> classes{}; // Classes, sorted by canon_less

  bool operator==(const ObsItem& o) const {
    return k == o.k && act == o.act && acts == o.acts && traces == o.traces &&
           classes == o.classes;
  }
  bool operator<(const ObsItem& o) const;
};

// For pair semantics (F, R, IF, PF, IS, PS) the items are the trace's actions
// followed by one trailing set; for word semantics sets and actions alternate
// freely; for T and CT items are actions only.
struct Obs {
  Sem sem;
  std::vector<ObsItem> items;

  bool operator==(const Obs& o) const { return sem == o.sem && items == o.items; }
  bool operator<(const Obs& o) const;
};

bool linear_pre(Ctx& cx, Sem s, CP p, CP q);

// p ≼_s q for any of the twenty-one semantics, dispatching on the family.
bool preorder(Ctx& cx, Sem s, CP p, CP q);

// Assumes linear_pre(s,p,q) failed; names an observation of p that q lacks.
std::string linear_witness(Ctx& cx, Sem s, CP p, CP q);

// x ∈ X(p), decided directly from the definition of the observation system.
bool obs_member(Ctx& cx, CP p, const Obs& x);

// A finite generating subset of X^fin(p): inclusion of these observations in
// X(q) is equivalent to X(p) ⊆ X(q). One item per reachable state or
// root-to-leaf path, with maximal set data. May throw BudgetError for the
// IF/IFT/IS/IST families when the bounded complement universe is infeasible.
std::vector<Obs> canonical_obs(Ctx& cx, Sem s, CP p);

struct ObsBudget {
  int set_card_cap = -1;      // max elements per set item, -1 = unlimited
  size_t max_obs = 200000;    // hard count guard
};

// The bounded observation set X^fin(p), restricted to set items of
// cardinality within the budget and to words with at most one set between
// consecutive actions. Every legal word merges into one of these with
// membership unchanged, so inclusion over this set decides inclusion over
// all of X(p); with an unlimited budget the pair families are literal.
std::vector<Obs> xfin_enumerate(Ctx& cx, Sem s, CP p, const ObsBudget& budget);

// Merges consecutive set items: union for the refusal-style families
// (FT/IFT/IST), collapse of equal neighbours for the equality-style families
// (RT/PFT/PST). Membership in any X(q) is invariant under this rewrite.
Obs normalize_word(const Ctx& cx, const Obs& x);

std::string obs_to_string(const Ctx& cx, const Obs& x);

}  // namespace sk
