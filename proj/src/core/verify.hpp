// Named property suites mirroring the library's invariants: each runs a
// bounded exhaustive or seeded randomized check and reports the violations
// found (none expected). The acceptance harness and the CLI both drive these.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/semantics.hpp"

namespace sk {

struct SuiteOptions {
  std::string alphabet = "a,b";
  uint64_t seed = 1;
  long samples = 0;          // 0 picks the suite's default volume
  long class_cap = 100000;
  std::optional<Sem> only;   // restrict a per-semantics suite to one entry
};

struct SuiteReport {
  std::string suite;
  long checks = 0;
  std::vector<std::string> violations;  // capped; first offenders kept
  double seconds = 0;

  bool pass() const { return violations.empty(); }
};

// chi-biconditional, barchi-lemmas, decomposition, primality, linear-oracle,
// spectrum-lattice, conformance-chain, word-normalization
const std::vector<std::string>& suite_names();

// Throws ParseError on an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace sk
