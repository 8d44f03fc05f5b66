#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ifam {

// Fixed-width 128-bit point set. Point ids are bit positions; the library
// rejects universes with more than 128 points at construction time, so all
// set operations here are branch-free two-word ops.
struct Mask {
  std::uint64_t w0 = 0;
  std::uint64_t w1 = 0;

  static constexpr std::size_t capacity = 128;

  void set(std::size_t i) {
    if (i < 64) w0 |= (std::uint64_t{1} << i);
    else w1 |= (std::uint64_t{1} << (i - 64));
  }

  void reset(std::size_t i) {
    if (i < 64) w0 &= ~(std::uint64_t{1} << i);
    else w1 &= ~(std::uint64_t{1} << (i - 64));
  }

  bool test(std::size_t i) const {
    if (i < 64) return (w0 >> i) & 1u;
    return (w1 >> (i - 64)) & 1u;
  }

  bool empty() const { return w0 == 0 && w1 == 0; }

  std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(w0) + std::popcount(w1));
  }

  friend Mask operator|(Mask a, Mask b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
  friend Mask operator&(Mask a, Mask b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
  friend Mask operator^(Mask a, Mask b) { return {a.w0 ^ b.w0, a.w1 ^ b.w1}; }
  Mask& operator|=(Mask b) { w0 |= b.w0; w1 |= b.w1; return *this; }
  Mask& operator&=(Mask b) { w0 &= b.w0; w1 &= b.w1; return *this; }

  // a minus b
  friend Mask diff(Mask a, Mask b) { return {a.w0 & ~b.w0, a.w1 & ~b.w1}; }

  bool intersects(Mask b) const { return (w0 & b.w0) != 0 || (w1 & b.w1) != 0; }
  bool subset_of(Mask b) const { return (w0 & ~b.w0) == 0 && (w1 & ~b.w1) == 0; }

  bool operator==(const Mask&) const = default;

  // Lowest set bit; undefined on an empty mask.
  std::size_t lowest() const {
    if (w0 != 0) return static_cast<std::size_t>(std::countr_zero(w0));
    return 64 + static_cast<std::size_t>(std::countr_zero(w1));
  }

  // Lexicographic order on the ascending member lists. The first point where
  // the two sets differ belongs to the smaller set; a proper prefix sorts
  // first because the longer set owns the first extra point.
  static bool lex_less(Mask a, Mask b) {
    Mask d = a ^ b;
    if (d.empty()) return false;
    return a.test(d.lowest());
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    std::uint64_t x = w0;
    while (x) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
    x = w1;
    while (x) {
      out.push_back(64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
    return out;
  }

  template <typename It>
  static Mask from(It first, It last) {
    Mask m;
    for (; first != last; ++first) m.set(static_cast<std::size_t>(*first));
    return m;
  }
};

struct MaskLexLess {
  bool operator()(const Mask& a, const Mask& b) const { return Mask::lex_less(a, b); }
};

} // namespace ifam
