// Hash-consed modal formula AST shared by all logics. Smart constructors
// flatten and sort ∧/∨ children, dedup (idempotence), drop units and collapse
// annihilators, so structural identity of ids equals equality modulo AC and
// idempotence. Sugar nodes (box, 0f, ready/trace sets) are first-class and
// eliminated only by desugar(); sequence modalities normalize to unary chains.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/alphabet.hpp"
#include "core/process.hpp"

namespace sk {

using FId = uint32_t;

enum class FK : uint8_t {
  True, False, And, Or, Neg,
  Dia, Box,          // <a>f, [a]f
  ZeroF,             // 0f, satisfied exactly by deadlocked processes
  Ready,             // ready{Y}: I(p) = Y
  TraceSetF,         // traces{G}: bounded trace set of p equals G
  ConfDia,           // <<a>>f, the conformance modality
};

struct FNode {
  FK k;
  int act = -1;                         // Dia/Box/ConfDia
  ActMask mask = 0;                     // Ready
  std::vector<std::vector<int>> tset{};  // TraceSetF, sorted unique
  std::vector<FId> kids{};  // And/Or (sorted unique); unary child at [0]
  int modal_depth = 0;
  uint64_t hash = 0;
};

class FormulaTable {
 public:
  FormulaTable();

  const FNode& node(FId f) const { return nodes_[f]; }
  size_t size() const { return nodes_.size(); }

  FId tt() const { return 0; }
  FId ff() const { return 1; }
  FId mand(std::vector<FId> kids);
  FId mor(std::vector<FId> kids);
  // Raw n-ary connectives: flatten directly nested same connectives and sort
  // children, but keep duplicates and units so parsed text retains its shape
  // (tt /\ tt stays an And node). mand/mor additionally apply idempotence,
  // units and annihilators; synthesized formulae go through those.
  FId raw_and(std::vector<FId> kids);
  FId raw_or(std::vector<FId> kids);
  FId mneg(FId f);
  FId mdia(int a, FId f);
  FId mbox(int a, FId f);
  // Sequence modalities build nested unary chains, so <tau:ab>tt and
  // <a><b>tt intern to the same id.
  FId mdia_seq(const std::vector<int>& tau, FId f);
  FId mbox_seq(const std::vector<int>& tau, FId f);
  FId mzero();
  FId mready(ActMask y);
  FId mtraceset(std::vector<std::vector<int>> g);
  FId mconf(int a, FId f);

 private:
  FId intern(FNode n);
  std::vector<FNode> nodes_;
  std::unordered_multimap<uint64_t, FId> index_;
};

struct Ctx;  // ctx.hpp

// Eliminates every sugar node, yielding an equivalent core formula
// (True/False/And/Or/Neg/Dia only).
FId desugar(Ctx& cx, FId f);

// De Morgan push of a negation into the sugar-level operators; the result is
// negation-free unless f contains ConfDia (which has no dual here and is
// rejected).
FId neg_push(Ctx& cx, FId f);

FId parse_formula(Ctx& cx, const std::string& text);
std::string print_formula(const Ctx& cx, FId f);

// Number of nodes in the fully shared representation (DAG nodes, not tree).
size_t formula_dag_size(const Ctx& cx, FId f);

}  // namespace sk
