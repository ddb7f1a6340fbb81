// Semantics identifiers for the linear-time/branching-time spectrum plus
// conformance simulation, and the refinement arrows between them.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sk {

enum class Sem : int {
  // branching
  S, CS, RS, TS, TwoS, BS,
  // linear
  T, CT, F, FT, R, RT, IF, PF, IFT, PFT, IS, PS, IST, PST,
  // conformance simulation (preorder + model checking only, no chi)
  CONF,
};

inline constexpr int kSemCount = 21;

std::string_view sem_name(Sem s);
std::optional<Sem> sem_parse(std::string_view name);

inline bool sem_is_branching(Sem s) { return static_cast<int>(s) <= static_cast<int>(Sem::BS); }
inline bool sem_is_linear(Sem s) {
  return static_cast<int>(s) >= static_cast<int>(Sem::T) && s != Sem::CONF;
}

// Linear word semantics (observations are mixed action/set-element sequences).
inline bool sem_is_word(Sem s) {
  return s == Sem::FT || s == Sem::RT || s == Sem::IFT || s == Sem::PFT ||
         s == Sem::IST || s == Sem::PST;
}

// Linear semantics whose set data is matched by inclusion (refusal style)
// rather than equality (readiness style).
inline bool sem_is_refusal(Sem s) {
  return s == Sem::F || s == Sem::FT || s == Sem::IF || s == Sem::IFT ||
         s == Sem::IS || s == Sem::IST;
}

// Datum families for the linear semantics: what a state contributes to an
// observation (nothing for plain traces, an action set, a trace set, or a
// set of simulation classes).
enum class Datum { None, Acts, Traces, Classes };
Datum sem_datum(Sem s);

// All X -> Y arrows of the spectrum (p <=_X q implies p <=_Y q), finer first.
struct SemArrow { Sem finer, coarser; };
const std::vector<SemArrow>& spectrum_arrows();

// The fourteen logics with chi/bar-chi/decompose support at desk scale.
const std::vector<Sem>& decompose_supported();

}  // namespace sk
