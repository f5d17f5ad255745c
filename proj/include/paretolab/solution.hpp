#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace paretolab {

/// A fixed-length bit vector identifying a subset of items (or edges).
/// The total order is lexicographic on the bits, front to back; it is used
/// for deterministic tie-breaking everywhere in the library.
struct Solution {
  std::vector<bool> bits;

  Solution() = default;
  explicit Solution(std::vector<bool> b) : bits(std::move(b)) {}

  std::size_t size() const { return bits.size(); }

  static Solution zeros(std::size_t n) { return Solution(std::vector<bool>(n, false)); }

  /// Bit i of `mask` becomes bits[i].
  static Solution from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<bool> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1u;
    return Solution(std::move(b));
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits) s.push_back(b ? '1' : '0');
    return s;
  }

  bool operator==(const Solution& other) const = default;
  auto operator<=>(const Solution& other) const = default;
};

/// Lexicographic order of a mask's bit sequence b0 b1 ... b_{n-1}: bit 0 is
/// the most significant for ordering, so compare bit-reversed integers.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b, int n) {
  for (int i = 0; i < n; ++i) {
    bool ba = (a >> i) & 1u, bb = (b >> i) & 1u;
    if (ba != bb) return !ba;
  }
  return false;
}

}  // namespace paretolab
