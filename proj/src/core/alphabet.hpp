// Declared finite action alphabet. Actions are small integer indices into the
// alphabet; action sets are bitmasks.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sk {

using ActMask = uint32_t;

// Raised on malformed input text (grammar or unknown action). The position is
// a byte offset into the offending string, or npos when not applicable.
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at = std::string::npos)
      : std::runtime_error(msg), pos(at) {}
};

// Raised when an enumeration or construction would exceed the configured cap.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

class Alphabet {
 public:
  // Comma-separated declaration, e.g. "a,b". Names must match
  // [a-z][a-zA-Z0-9_]* and be distinct. At most 30 actions (mask width).
  static Alphabet from_csv(const std::string& csv);

  size_t size() const { return names_.size(); }
  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index(std::string_view name) const;

  ActMask full_mask() const { return (size() >= 32) ? ~0u : ((1u << size()) - 1); }

  // Decodes a concatenated action string ("ab" -> {a,b}) by greedy longest
  // match. Throws ParseError when a prefix matches no action name.
  std::vector<int> decode_word(std::string_view word) const;
  std::string encode_word(const std::vector<int>& acts) const;

 private:
  std::vector<std::string> names_;  // sorted, unique
};

std::string mask_to_string(const Alphabet& al, ActMask m);

}  // namespace sk
