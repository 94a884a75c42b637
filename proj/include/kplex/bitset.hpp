#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kplex {

using Vertex = int;

/// Fixed-width set of vertex ids backed by 64-bit words.
///
/// All binary operations require both operands to have the same width.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Bitset() = default;
  explicit Bitset(int width) : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(int width) {
    Bitset b(width);
    b.set_all();
    return b;
  }

  int width() const { return width_; }

  bool test(Vertex v) const {
    assert(v >= 0 && v < width_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
  }
  void set(Vertex v) {
    assert(v >= 0 && v < width_);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void reset(Vertex v) {
    assert(v >= 0 && v < width_);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void set_all() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (Word w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// |this ∩ other| without materializing the intersection.
  int count_and(const Bitset& other) const {
    assert(other.width_ == width_);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }
  /// |this \ other|.
  int count_and_not(const Bitset& other) const {
    assert(other.width_ == width_);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & ~other.words_[i]);
    return c;
  }
  bool intersects(const Bitset& other) const {
    assert(other.width_ == width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  /// True when this ⊆ other.
  bool subset_of(const Bitset& other) const {
    assert(other.width_ == width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& other) {
    assert(other.width_ == width_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) {
    assert(other.width_ == width_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& other) {
    assert(other.width_ == width_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset difference(Bitset a, const Bitset& b) { return a.and_not(b); }

  bool operator==(const Bitset&) const = default;

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    return -1;
  }

  /// Visit members in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Vertex>(i * kWordBits + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  template <class Range>
  static Bitset from_range(int width, const Range& vertices) {
    Bitset b(width);
    for (Vertex v : vertices) b.set(v);
    return b;
  }

 private:
  void trim() {
    const int rem = width_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  int width_ = 0;
  std::vector<Word> words_;
};

}  // namespace kplex
