// JSON encodings for the machine interface. Key order is fixed and the
// dumps are deterministic, so a fixed seed and config give byte-identical
// output.
#pragma once

#include <string>

#include "json.hpp"

#include "core/charform.hpp"
#include "core/ctx.hpp"
#include "core/linear.hpp"
#include "core/primality.hpp"
#include "core/verify.hpp"

namespace sk {

using ojson = nlohmann::ordered_json;

// One observation. Plain traces: {"kind":"trace","trace":"ab"}. Pair
// families: {"kind":"pair-acts","trace":"a","refuse":["b"]} with the datum
// key named after the family (refuse, ready, avoid, traces, exclude,
// classes). Word families: {"kind":"word-acts","items":[...]} where each
// item is {"act":"a"} or a one-key datum object.
ojson obs_to_json(const Ctx& cx, const Obs& x);

// {semantics, process, chi, barChi, bSize}; formulae use the canonical
// printer format.
ojson chi_report(Ctx& cx, Sem s, CP p);

// {formula, semantics, verdict, pivot?, witnesses?, universeBound}
ojson verdict_report(Ctx& cx, Sem s, FId f, const Verdict& v,
                     int universe_bound);

// {formula, semantics, status, pivot?, chi?, remainder?, universeBound}
ojson decompose_report(Ctx& cx, Sem s, FId f, const DecomposeResult& d,
                       int universe_bound);

// Full comparison matrix for one pair: per semantics, both directions and
// the induced equivalence.
ojson spectrum_report(Ctx& cx, CP p, CP q);

ojson suite_report_json(const SuiteReport& rep);

// Stable serialization used by every emitter: two-space indent, '\n' at end.
std::string dump_json(const ojson& j);

}  // namespace sk
