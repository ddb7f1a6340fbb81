// Independent reference implementations used only by tests. Everything here
// works by plain definitional recursion on syntactic terms: no canonical
// forms, no memo tables, no state matching. Deliberately slow; keep inputs
// at depth <= 2 or so.
#pragma once

#include <string>
#include <vector>

#include "core/ctx.hpp"
#include "core/process.hpp"
#include "core/semantics.hpp"

namespace oracle {

using sk::Ctx;
using sk::FId;
using sk::PP;
using sk::Sem;
using sk::Trace;
using sk::TraceSet;

TraceSet traces(const PP& p);
TraceSet ctraces(const PP& p);

bool bisim(const PP& p, const PP& q);

// Tree-walk satisfaction, sugar evaluated in place.
bool sat(Ctx& cx, const PP& p, FId f);

// Definitional preorder for every semantics except the four families whose
// observation sets need complement universes (IF, IFT, IS, IST); those are
// exercised through exhaustive characteristic-formula checks instead.
bool pre(Ctx& cx, Sem s, const PP& p, const PP& q);

// One linear observation in the test encoding: action indices interleaved
// with set data. Exactly one datum string per set item, encoded as a sorted
// text key so observations compare structurally.
struct LObs {
  std::vector<int> acts;          // actions in order
  std::vector<int> datum_pos;     // index into acts before which datum i sits
  std::vector<std::string> data;  // encoded set items
  bool operator==(const LObs& o) const {
    return acts == o.acts && datum_pos == o.datum_pos && data == o.data;
  }
  bool operator<(const LObs& o) const {
    if (acts != o.acts) return acts < o.acts;
    if (datum_pos != o.datum_pos) return datum_pos < o.datum_pos;
    return data < o.data;
  }
};

// The full bounded observation set of p for the eight enumerable linear
// semantics (T, CT, F, R, FT, RT, PF, PS), built definitionally.
std::vector<LObs> observations(Ctx& cx, Sem s, const PP& p);

// x in X(q), decided by walking q.
bool obs_in(Ctx& cx, Sem s, const LObs& x, const PP& q);

}  // namespace oracle
