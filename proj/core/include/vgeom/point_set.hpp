#ifndef VGEOM_POINT_SET_HPP
#define VGEOM_POINT_SET_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace vgeom {

/// Largest number of points any structure in this library may carry.
inline constexpr std::size_t kMaxPoints = 256;

/// Fixed-width set of point indices in [0, kMaxPoints).
class PointSet {
  static constexpr std::size_t kWords = kMaxPoints / 64;

 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    iterator() = default;
    iterator(const PointSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    std::size_t operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    const PointSet* set_ = nullptr;
    std::size_t pos_ = kMaxPoints;
  };

  constexpr PointSet() noexcept = default;
  PointSet(std::initializer_list<std::size_t> members) {
    for (auto m : members) insert(m);
  }

  /// The set {0, 1, ..., n-1}.
  static PointSet range(std::size_t n) {
    assert(n <= kMaxPoints);
    PointSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  bool contains(std::size_t i) const {
    assert(i < kMaxPoints);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  void insert(std::size_t i) {
    assert(i < kMaxPoints);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void erase(std::size_t i) {
    assert(i < kMaxPoints);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::optional<std::size_t> first() const {
    auto p = next_from(0);
    if (p == kMaxPoints) return std::nullopt;
    return p;
  }

  std::vector<std::size_t> members() const { return {begin(), end()}; }

  bool is_subset_of(const PointSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }
  bool intersects(const PointSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }
  std::size_t intersection_size(const PointSet& other) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < kWords; ++w)
      n += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return n;
  }

  PointSet& operator|=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  PointSet& operator^=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  PointSet& operator-=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator^(PointSet a, const PointSet& b) { return a ^= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  friend bool operator==(const PointSet&, const PointSet&) = default;

  iterator begin() const { return {this, next_from(0)}; }
  iterator end() const { return {this, kMaxPoints}; }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

  /// Lexicographic order on the ascending member lists.
  friend bool lex_less(const PointSet& a, const PointSet& b) {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const std::size_t bit = w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
      // The lists agree below `bit`; the side lacking `bit` is smaller unless it has nothing beyond.
      if (a.contains(bit)) return b.next_from(bit + 1) != kMaxPoints;
      return a.next_from(bit + 1) == kMaxPoints;
    }
    return false;
  }

 private:
  std::size_t next_from(std::size_t i) const {
    while (i < kMaxPoints) {
      const std::size_t w = i / 64;
      const std::uint64_t masked = words_[w] & (~std::uint64_t{0} << (i % 64));
      if (masked != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(masked));
      i = (w + 1) * 64;
    }
    return kMaxPoints;
  }

  std::array<std::uint64_t, kWords> words_{};
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace vgeom

#endif  // VGEOM_POINT_SET_HPP
