// Shared context: the declared alphabet, the interning pools, the memo
// tables, and enumeration limits. Everything a context hands out is immutable;
// the public C API serializes calls on a context, so the memo tables need no
// internal locking.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "core/alphabet.hpp"
#include "core/formula.hpp"
#include "core/process.hpp"
#include "core/semantics.hpp"

namespace sk {

struct Universe {
  int max_depth = 0;
  std::vector<CP> members;                     // sorted by canon_less
  std::unordered_map<uint32_t, int> index;     // canon id -> position

  int pos(CP c) const {
    auto it = index.find(c->id);
    return it == index.end() ? -1 : it->second;
  }
};

inline uint64_t key2(uint32_t a, uint32_t b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}
inline uint64_t key3(Sem s, uint32_t a, uint32_t b) {
  // ids stay far below 2^29 at the supported scales
  return (static_cast<uint64_t>(s) << 58) | (static_cast<uint64_t>(a) << 29) | b;
}

struct Ctx {
  explicit Ctx(Alphabet a) : al(std::move(a)), procs(al) {}
  Ctx(const Ctx&) = delete;

  Alphabet al;
  CanonTable procs;
  FormulaTable forms;
  long class_cap = 100000;
  uint64_t seed = 0;

  // memo tables (keys built with key2/key3)
  std::unordered_map<uint32_t, TraceSet> traces_memo;
  std::unordered_map<uint32_t, TraceSet> ctraces_memo;
  std::unordered_map<uint64_t, bool> pre_memo;        // (sem, p, q)
  std::unordered_map<uint64_t, char> sat_memo;        // (canon, formula)
  std::unordered_map<uint64_t, FId> chi_memo;         // (sem, p)
  std::unordered_map<uint64_t, FId> barchi_memo;      // (sem, p)
  std::unordered_map<uint32_t, FId> simby_memo;       // p
  std::unordered_map<uint32_t, FId> twos_neg_memo;    // p, 2-nested-sim basis conjunction
  std::unordered_map<uint32_t, FId> phibar_memo;      // p, complement of "simulated by"
  std::unordered_map<uint64_t, FId> desugar_memo;     // formula
  std::unordered_map<uint64_t, FId> negpush_memo;     // formula
  std::unordered_map<uint64_t, char> grammar_memo;    // (sem*8+nonterminal, formula)

  const Universe& universe(int max_depth);  // cached; throws BudgetError over cap
  const TraceSet& traces_of(CP p);
  const TraceSet& ctraces_of(CP p);

  // Drops evaluation caches (keeps the interning pools and universes).
  void clear_eval_caches() {
    pre_memo.clear();
    sat_memo.clear();
    grammar_memo.clear();
  }

 private:
  std::map<int, std::unique_ptr<Universe>> universes_;
};

// Reachable states of p: all (trace, state) pairs in DFS order, root first.
std::vector<std::pair<Trace, CP>> reachable_states(CP p);

}  // namespace sk
