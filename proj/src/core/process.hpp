// Process terms (0 | a.p | p+p), their transitions and derived attributes,
// and canonical forms: one interned node per bisimulation class. On finite
// trees, recursive sort+dedup of (action, canonical child) pairs is a complete
// bisimulation normal form, so canonical identity is pointer identity.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "core/alphabet.hpp"

namespace sk {

struct Proc;
using PP = std::shared_ptr<const Proc>;

struct Proc {
  enum Kind { Nil, Prefix, Sum } kind;
  int act = -1;  // Prefix
  PP c1, c2;     // Prefix uses c1; Sum uses both

  static PP nil();
  static PP prefix(int a, PP p);
  static PP sum(PP a, PP b);
};

// Multiset of (action, continuation) pairs derivable from the two transition
// clauses; duplicates are preserved (a.0 + a.0 has two entries).
std::vector<std::pair<int, PP>> transitions(const PP& p);
ActMask initials(const PP& p);
int depth(const PP& p);

PP parse_process(const std::string& text, const Alphabet& al);
std::string print_process(const PP& p, const Alphabet& al);

struct CanonNode {
  uint32_t id = 0;
  int depth = 0;
  ActMask initials = 0;
  // Sorted by (action, child->text), duplicate-free.
  std::vector<std::pair<int, const CanonNode*>> kids;
  // Canonical print; doubles as the deterministic ordering key.
  std::string text;

  bool leaf() const { return kids.empty(); }
};

using CP = const CanonNode*;

// Deterministic structural order (depth, then canonical text).
inline bool canon_less(CP a, CP b) {
  if (a == b) return false;
  if (a->depth != b->depth) return a->depth < b->depth;
  return a->text < b->text;
}

class CanonTable {
 public:
  explicit CanonTable(const Alphabet& al);
  CP nil() const { return nil_; }
  CP canonicalize(const PP& p);
  // Interns a duplicate-free child set (children must already be canonical).
  CP intern(std::vector<std::pair<int, CP>> kids);
  size_t size() const { return nodes_.size(); }

 private:
  const Alphabet& al_;
  std::map<std::vector<std::pair<int, uint32_t>>, std::unique_ptr<CanonNode>> nodes_;
  CP nil_;
};

// Canonical node back to a plain term (sums right-nested), e.g. for reporting.
PP canon_to_proc(CP c);

// Node count of the canonical tree (1 for nil); a tie-break key.
int canon_size(CP c);

using Trace = std::vector<int>;
using TraceSet = std::vector<Trace>;  // sorted lexicographically, unique

std::string trace_to_string(const Trace& t, const Alphabet& al);

}  // namespace sk
