#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tokendom {

// Bit-packed subset of a fixed vertex universe [0, universe_size).
// Word layout is little-endian within the vector; bits past the universe end
// are kept zero so popcounts and equality work without masking.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe_size) {
    VertexSet s(universe_size);
    for (std::size_t v = 0; v < universe_size; ++v) s.set(v);
    return s;
  }

  std::size_t universe_size() const { return size_; }

  bool test(std::size_t v) const {
    assert(v < size_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(std::size_t v) {
    assert(v < size_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(std::size_t v) {
    assert(v < size_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_full() const { return count() == size_; }

  VertexSet& operator|=(const VertexSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  // this \ o
  VertexSet& subtract(const VertexSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  bool intersects(const VertexSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  // superset test: o subset of this
  bool contains(const VertexSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (o.words_[k] & ~words_[k]) return false;
    return true;
  }

  // lowest set bit, or -1
  int first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0)
        return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }

  // lowest clear bit within the universe, or -1 when full
  int first_unset() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t inv = ~words_[k];
      if (k + 1 == words_.size() && (size_ & 63) != 0)
        inv &= (std::uint64_t{1} << (size_ & 63)) - 1;
      if (inv != 0) return static_cast<int>(k * 64 + std::countr_zero(inv));
    }
    return -1;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        int b = std::countr_zero(w);
        fn(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tokendom
