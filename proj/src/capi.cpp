// C ABI over the core library. Each call parses its inputs, runs the core
// operation, and serializes the result; exceptions map to status codes at
// this boundary and never cross it.
#include "spectrumkit/spectrumkit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>

#include "core/branching.hpp"
#include "core/charform.hpp"
#include "core/formula.hpp"
#include "core/grammar.hpp"
#include "core/jsonio.hpp"
#include "core/linear.hpp"
#include "core/primality.hpp"
#include "core/process.hpp"
#include "core/satisfy.hpp"
#include "core/verify.hpp"

struct sk_ctx {
  std::mutex mu;
  std::string alphabet_csv;
  long class_cap = 100000;
  unsigned long long seed = 1;
  std::unique_ptr<sk::Ctx> core;
  std::string last_error;
};

namespace {

char* dup_cstr(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(char** out, const std::string& s) {
  if (out) *out = dup_cstr(s);
}

// Runs fn under the context lock and folds every failure into a status code.
// fn returns 0 or 1; parse/budget/internal failures become 2/3/4.
template <typename Fn>
int guarded(sk_ctx* cx, char** out, Fn&& fn) {
  if (!cx) return 2;
  std::lock_guard<std::mutex> lock(cx->mu);
  if (out) *out = nullptr;
  cx->last_error.clear();
  cx->core->class_cap = cx->class_cap;
  try {
    return fn();
  } catch (const sk::ParseError& e) {
    cx->last_error = e.what();
    emit(out, cx->last_error);
    return 2;
  } catch (const sk::BudgetError& e) {
    cx->last_error = e.what();
    emit(out, cx->last_error);
    return 3;
  } catch (const std::exception& e) {
    cx->last_error = e.what();
    emit(out, cx->last_error);
    return 4;
  }
}

sk::Sem need_sem(const char* name) {
  auto s = sk::sem_parse(name ? name : "");
  if (!s) throw sk::ParseError("unknown semantics '" +
                               std::string(name ? name : "") + "'");
  return *s;
}

sk::CP parse_canon(sk::Ctx& c, const char* text) {
  if (!text) throw sk::ParseError("missing process term");
  return c.procs.canonicalize(sk::parse_process(text, c.al));
}

sk::FId parse_f(sk::Ctx& c, const char* text) {
  if (!text) throw sk::ParseError("missing formula");
  return sk::parse_formula(c, text);
}

// Model-search bound for verdict and decompose: an explicit depth wins,
// otherwise the formula's modal depth.
const sk::Universe& search_universe(sk::Ctx& c, sk::FId f, int depth) {
  int d = depth >= 0 ? depth : c.forms.node(f).modal_depth;
  return c.universe(d);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

extern "C" {

sk_ctx* sk_ctx_create(const char* alphabet_csv) {
  if (!alphabet_csv) return nullptr;
  try {
    auto cx = std::make_unique<sk_ctx>();
    cx->alphabet_csv = alphabet_csv;
    cx->core = std::make_unique<sk::Ctx>(sk::Alphabet::from_csv(alphabet_csv));
    return cx.release();
  } catch (...) {
    return nullptr;
  }
}

void sk_ctx_destroy(sk_ctx* cx) { delete cx; }

int sk_ctx_set_class_cap(sk_ctx* cx, long cap) {
  if (!cx || cap < 1) return 2;
  std::lock_guard<std::mutex> lock(cx->mu);
  cx->class_cap = cap;
  return 0;
}

int sk_ctx_set_seed(sk_ctx* cx, unsigned long long seed) {
  if (!cx) return 2;
  std::lock_guard<std::mutex> lock(cx->mu);
  cx->seed = seed;
  return 0;
}

const char* sk_last_error(sk_ctx* cx) {
  return cx ? cx->last_error.c_str() : "null context";
}

void sk_string_free(char* s) { std::free(s); }

int sk_check(sk_ctx* cx, const char* sem, const char* p, const char* q,
             int as_json, char** out) {
  return guarded(cx, out, [&] {
    sk::Ctx& c = *cx->core;
    sk::Sem s = need_sem(sem);
    sk::CP cp = parse_canon(c, p), cq = parse_canon(c, q);
    bool holds = sk::preorder(c, s, cp, cq);
    std::string witness;
    if (!holds)
      witness = sk::sem_is_linear(s) ? sk::linear_witness(c, s, cp, cq)
                                     : sk::branching_witness(c, s, cp, cq);
    if (as_json) {
      sk::ojson j;
      j["semantics"] = std::string(sk::sem_name(s));
      j["p"] = cp->text;
      j["q"] = cq->text;
      j["holds"] = holds;
      if (!holds) j["witness"] = witness;
      emit(out, sk::dump_json(j));
    } else {
      emit(out, holds ? "holds\n" : "does not hold\nwitness: " + witness + "\n");
    }
    return holds ? 0 : 1;
  });
}

int sk_equiv(sk_ctx* cx, const char* sem, const char* p, const char* q,
             int as_json, char** out) {
  return guarded(cx, out, [&] {
    sk::Ctx& c = *cx->core;
    sk::Sem s = need_sem(sem);
    sk::CP cp = parse_canon(c, p), cq = parse_canon(c, q);
    bool fwd = sk::preorder(c, s, cp, cq);
    bool bwd = sk::preorder(c, s, cq, cp);
    if (as_json) {
      sk::ojson j;
      j["semantics"] = std::string(sk::sem_name(s));
      j["p"] = cp->text;
      j["q"] = cq->text;
      j["forward"] = fwd;
      j["backward"] = bwd;
      j["equivalent"] = fwd && bwd;
      emit(out, sk::dump_json(j));
    } else {
      emit(out, (fwd && bwd ? std::string("equivalent")
                            : "not equivalent (forward: " + yesno(fwd) +
                                  ", backward: " + yesno(bwd) + ")") +
                    "\n");
    }
    return fwd && bwd ? 0 : 1;
  });
}

int sk_chi(sk_ctx* cx, const char* sem, const char* p, int as_json,
           char** out) {
  return guarded(cx, out, [&] {
    sk::Ctx& c = *cx->core;
    sk::Sem s = need_sem(sem);
    sk::CP cp = parse_canon(c, p);
    if (as_json) {
      emit(out, sk::dump_json(sk::chi_report(c, s, cp)));
    } else {
      emit(out, sk::print_formula(c, sk::chi(c, s, cp)) + "\n");
    }
    return 0;
  });
}

int sk_barchi(sk_ctx* cx, const char* sem, const char* p, int as_json,
              char** out) {
  return guarded(cx, out, [&] {
    sk::Ctx& c = *cx->core;
    sk::Sem s = need_sem(sem);
    sk::CP cp = parse_canon(c, p);
    if (as_json) {
      emit(out, sk::dump_json(sk::chi_report(c, s, cp)));
    } else {
      emit(out, sk::print_formula(c, sk::bar_chi(c, s, cp)) + "\n");
    }
    return 0;
  });
}

int sk_mc(sk_ctx* cx, const char* sem, const char* p, const char* formula,
          int as_json, char** out) {
  return guarded(cx, out, [&] {
    sk::Ctx& c = *cx->core;
    sk::CP cp = parse_canon(c, p);
    sk::FId f = parse_f(c, formula);
    bool have_sem = sem && *sem;
    sk::Sem s = sk::Sem::S;
    if (have_sem) {
      s = need_sem(sem);
      std::string why = sk::grammar_explain(c, s, f);
      if (!why.empty())
        throw sk::ParseError("formula outside the " +
                             std::string(sk::sem_name(s)) + " grammar: " + why);
    }
    bool holds = sk::satisfies(c, cp, f);
    if (as_json) {
      sk::ojson j;
      if (have_sem) j["semantics"] = std::string(sk::sem_name(s));
      j["process"] = cp->text;
      j["formula"] = sk::print_formula(c, f);
      j["holds"] = holds;
      emit(out, sk::dump_json(j));
    } else {
      emit(out, holds ? "true\n" : "false\n");
    }
    return holds ? 0 : 1;
  });
}

int sk_decompose(sk_ctx* cx, const char* sem, const char* formula, int depth,
                 int as_json, char** out) {
  return guarded(cx, out, [&] {
    sk::Ctx& c = *cx->core;
    sk::Sem s = need_sem(sem);
    sk::FId f = parse_f(c, formula);
    const sk::Universe& u = search_universe(c, f, depth);
    sk::DecomposeResult d = sk::decompose(c, s, f, u);
    if (as_json) {
      emit(out, sk::dump_json(sk::decompose_report(c, s, f, d, u.max_depth)));
    } else {
      std::string t;
      switch (d.status) {
        case sk::DecomposeStatus::Inconsistent:
          t = "inconsistent\n";
          break;
        case sk::DecomposeStatus::AlreadyCharacteristic:
          t = "characteristic\npivot: " + d.pivot->text +
              "\nchi: " + sk::print_formula(c, d.chi_f) + "\n";
          break;
        case sk::DecomposeStatus::Decomposed:
          t = "decomposed\npivot: " + d.pivot->text +
              "\nchi: " + sk::print_formula(c, d.chi_f) +
              "\nremainder: " + sk::print_formula(c, d.remainder) + "\n";
          break;
      }
      emit(out, t);
    }
    return d.status == sk::DecomposeStatus::Inconsistent ? 1 : 0;
  });
}

int sk_verdict(sk_ctx* cx, const char* sem, const char* formula, int depth,
               int as_json, char** out) {
  return guarded(cx, out, [&] {
    sk::Ctx& c = *cx->core;
    sk::Sem s = need_sem(sem);
    sk::FId f = parse_f(c, formula);
    const sk::Universe& u = search_universe(c, f, depth);
    sk::Verdict v = sk::verdict(c, s, f, u);
    if (as_json) {
      emit(out, sk::dump_json(sk::verdict_report(c, s, f, v, u.max_depth)));
    } else {
      std::string t;
      switch (v.kind) {
        case sk::Verdict::Kind::Inconsistent:
          t = "inconsistent\n";
          break;
        case sk::Verdict::Kind::Characteristic:
          t = "characteristic\npivot: " + v.pivot->text + "\n";
          break;
        case sk::Verdict::Kind::NonPrime:
          t = "non-prime\nw1: " + sk::print_formula(c, v.w1) +
              "\nw2: " + sk::print_formula(c, v.w2) + "\n";
          break;
      }
      emit(out, t);
    }
    return v.kind == sk::Verdict::Kind::Characteristic ? 0 : 1;
  });
}

int sk_spectrum(sk_ctx* cx, const char* p, const char* q, int as_json,
                char** out) {
  return guarded(cx, out, [&] {
    sk::Ctx& c = *cx->core;
    sk::CP cp = parse_canon(c, p), cq = parse_canon(c, q);
    if (as_json) {
      emit(out, sk::dump_json(sk::spectrum_report(c, cp, cq)));
    } else {
      std::string t = "p = " + cp->text + "\nq = " + cq->text + "\n";
      for (int k = 0; k < sk::kSemCount; ++k) {
        sk::Sem s = static_cast<sk::Sem>(k);
        std::string n(sk::sem_name(s));
        t += n + std::string(5 - n.size(), ' ') +
             "p<=q: " + yesno(sk::preorder(c, s, cp, cq)) +
             "  q<=p: " + yesno(sk::preorder(c, s, cq, cp)) + "\n";
      }
      emit(out, t);
    }
    return 0;
  });
}

int sk_enumerate(sk_ctx* cx, int depth, int as_json, char** out) {
  return guarded(cx, out, [&] {
    if (depth < 0) throw sk::ParseError("depth must be nonnegative");
    sk::Ctx& c = *cx->core;
    const sk::Universe& u = c.universe(depth);
    if (as_json) {
      sk::ojson j;
      j["alphabet"] = cx->alphabet_csv;
      j["depth"] = depth;
      j["count"] = u.members.size();
      sk::ojson arr = sk::ojson::array();
      for (sk::CP m : u.members) arr.push_back(m->text);
      j["members"] = std::move(arr);
      emit(out, sk::dump_json(j));
    } else {
      std::string t;
      for (sk::CP m : u.members) t += m->text + "\n";
      emit(out, t);
    }
    return 0;
  });
}

int sk_verify(sk_ctx* cx, const char* suite, const char* sem, long samples,
              int as_json, char** out) {
  return guarded(cx, out, [&] {
    sk::SuiteOptions opt;
    opt.alphabet = cx->alphabet_csv;
    opt.seed = cx->seed;
    opt.samples = samples > 0 ? samples : 0;
    opt.class_cap = cx->class_cap;
    if (sem && *sem) opt.only = need_sem(sem);
    sk::SuiteReport rep = sk::run_suite(suite ? suite : "", opt);
    if (as_json) {
      emit(out, sk::dump_json(sk::suite_report_json(rep)));
    } else {
      std::string t = rep.suite + ": " + (rep.pass() ? "PASS" : "FAIL") +
                      " (" + std::to_string(rep.checks) + " checks, " +
                      std::to_string(rep.violations.size()) + " violations)\n";
      for (const std::string& v : rep.violations) t += "  " + v + "\n";
      emit(out, t);
    }
    return rep.pass() ? 0 : 1;
  });
}

int sk_verify_suites(char** out) {
  std::string t;
  for (const std::string& n : sk::suite_names()) t += n + "\n";
  emit(out, t);
  return 0;
}

}  // extern "C"
