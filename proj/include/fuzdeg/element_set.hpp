#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fuzdeg {

using Element = std::uint32_t;

/// Fixed-width bitmask over the element indices of a group.
/// Bit i is set iff element i is a member. Capacity is kMaxElements bits.
class ElementSet {
 public:
  static constexpr std::size_t kWords = 2;
  static constexpr std::size_t kMaxElements = 64 * kWords;

  constexpr ElementSet() = default;

  static ElementSet singleton(Element x) {
    ElementSet s;
    s.insert(x);
    return s;
  }

  static ElementSet first_n(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = 64 * w;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  constexpr void insert(Element x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  constexpr void erase(Element x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  constexpr bool contains(Element x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }

  constexpr std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  constexpr bool is_subset_of(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  constexpr ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend constexpr ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend constexpr ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  friend constexpr bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Orders by the numeric value of the mask (most significant word first).
  friend constexpr std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    for (std::size_t w = kWords; w-- > 0;) {
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// Member indices in increasing order.
  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        out.push_back(static_cast<Element>(64 * w + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace fuzdeg
