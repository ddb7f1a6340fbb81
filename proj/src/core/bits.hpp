// Fixed-size bit vector used for satisfaction sets over an enumerated
// universe. Kept deliberately tiny; only the operations the deciders need.
#pragma once

#include <cstdint>
#include <vector>

namespace sk {

struct Bits {
  std::vector<uint64_t> w;
  size_t n = 0;

  explicit Bits(size_t bits = 0) : w((bits + 63) / 64, 0), n(bits) {}

  bool get(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(size_t i) { w[i >> 6] &= ~(1ull << (i & 63)); }

  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w) c += static_cast<size_t>(__builtin_popcountll(x));
    return c;
  }
  bool any() const {
    for (uint64_t x : w)
      if (x) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  bool operator==(const Bits& o) const { return n == o.n && w == o.w; }
};

}  // namespace sk
