// Membership of a formula in the sub-logic of one semantics. One AST,
// twenty-one filters: each check is memoized membership in the semantics'
// nonterminals rather than a separate parser per logic.
#pragma once

#include <string>

#include "core/ctx.hpp"
#include "core/semantics.hpp"

namespace sk {

bool grammar_check(Ctx& cx, Sem s, FId f);

// Empty string when the formula is accepted, otherwise a short reason naming
// the offending subformula.
std::string grammar_explain(Ctx& cx, Sem s, FId f);

}  // namespace sk
