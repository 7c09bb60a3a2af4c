#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace minuscule {

inline constexpr std::size_t kMaxHeapElements = 128;

/// Fixed-width bit vector over heap elements 0..kMaxHeapElements-1.
class ElementSet {
 public:
  static constexpr std::size_t kWords = kMaxHeapElements / 64;

  constexpr ElementSet() = default;

  static ElementSet first_n(std::size_t n) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  bool contains(std::size_t p) const { return (words_[p / 64] >> (p % 64)) & 1U; }
  void insert(std::size_t p) { words_[p / 64] |= std::uint64_t{1} << (p % 64); }
  void erase(std::size_t p) { words_[p / 64] &= ~(std::uint64_t{1} << (p % 64)); }
  void flip(std::size_t p) { words_[p / 64] ^= std::uint64_t{1} << (p % 64); }

  ElementSet with(std::size_t p) const {
    ElementSet s = *this;
    s.insert(p);
    return s;
  }
  ElementSet without(std::size_t p) const {
    ElementSet s = *this;
    s.erase(p);
    return s;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const { return count() == 0; }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Complement within the first n elements.
  ElementSet complement(std::size_t n) const {
    ElementSet s;
    for (std::size_t p = 0; p < n; ++p)
      if (!contains(p)) s.insert(p);
    return s;
  }

  /// '1'/'0' per element, element 0 first.
  std::string to_bit_string(std::size_t n) const {
    std::string s(n, '0');
    for (std::size_t p = 0; p < n; ++p)
      if (contains(p)) s[p] = '1';
    return s;
  }

  /// Lexicographic order of to_bit_string: the first differing element
  /// decides, absent before present.
  friend bool bit_lex_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < kWords; ++i) {
      const auto diff = a.words_[i] ^ b.words_[i];
      if (diff) return (b.words_[i] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace minuscule
