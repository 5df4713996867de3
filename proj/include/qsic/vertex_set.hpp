#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qsic {

/// Fixed-capacity bitset of vertex indices.
class VertexSet {
 public:
  static constexpr std::size_t words = 4;
  static constexpr std::size_t capacity = words * 64;

  VertexSet() = default;

  static VertexSet first_n(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < words; ++w) {
      if (n >= (w + 1) * 64)
        s.bits_[w] = ~std::uint64_t{0};
      else if (n > w * 64)
        s.bits_[w] = (std::uint64_t{1} << (n - w * 64)) - 1;
    }
    return s;
  }

  template <typename Range>
  static VertexSet of(const Range& vertices) {
    VertexSet s;
    for (auto v : vertices) s.set(static_cast<std::size_t>(v));
    return s;
  }
  static VertexSet of(std::initializer_list<int> vertices) { return of<std::initializer_list<int>>(vertices); }

  void set(std::size_t v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(std::size_t v) const { return (bits_[v >> 6] >> (v & 63)) & 1U; }

  bool any() const {
    for (auto w : bits_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Lowest member; `capacity` when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words; ++w)
      if (bits_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits_[w]));
    return capacity;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < words; ++w) bits_[w] &= o.bits_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < words; ++w) bits_[w] |= o.bits_[w];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t w = 0; w < words; ++w) bits_[w] &= ~o.bits_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.subtract(b); }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool intersects(const VertexSet& o) const {
    for (std::size_t w = 0; w < words; ++w)
      if (bits_[w] & o.bits_[w]) return true;
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](std::size_t v) { out.push_back(static_cast<int>(v)); });
    return out;
  }

 private:
  std::array<std::uint64_t, words> bits_{};
};

}  // namespace qsic
