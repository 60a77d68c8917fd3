#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ascfs {

// Set of vertex ids drawn from a fixed universe {0, ..., n-1}, packed into
// 64-bit words. All set algebra is word-parallel; bits at positions >= n are
// kept zero as a class invariant.
class VertexSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  bool test(std::size_t v) const {
    assert(v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(std::size_t v) {
    assert(v < n_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(std::size_t v) {
    assert(v < n_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }
  void fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool operator==(const VertexSet&) const = default;

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Removes every member of o from this set.
  VertexSet& subtract(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::size_t find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return npos;
  }
  // First member strictly greater than v, or npos.
  std::size_t find_next(std::size_t v) const {
    std::size_t i = (v + 1) >> 6;
    if (i >= words_.size()) return npos;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (w) return i * 64 + std::countr_zero(w);
      if (++i == words_.size()) return npos;
      w = words_[i];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  // Visits members of (this \ minus) strictly greater than `above`, in
  // ascending order. Stops early if f returns false.
  template <class F>
  bool for_each_diff_above(const VertexSet& minus, std::size_t above,
                           F&& f) const {
    assert(n_ == minus.n_);
    std::size_t i = (above + 1) >> 6;
    if (above + 1 >= n_) return true;
    std::uint64_t head_mask = ~std::uint64_t{0} << ((above + 1) & 63);
    for (; i < words_.size(); ++i) {
      std::uint64_t w = (words_[i] & ~minus.words_[i]) & head_mask;
      head_mask = ~std::uint64_t{0};
      while (w) {
        if (!f(i * 64 + std::countr_zero(w))) return false;
        w &= w - 1;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(static_cast<std::uint32_t>(v)); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  static void intersect_into(const VertexSet& a, const VertexSet& b,
                             VertexSet& out) {
    assert(a.n_ == b.n_);
    if (out.n_ != a.n_) out = VertexSet(a.n_);
    for (std::size_t i = 0; i < out.words_.size(); ++i)
      out.words_[i] = a.words_[i] & b.words_[i];
  }

  static std::size_t intersection_count(const VertexSet& a, const VertexSet& b) {
    assert(a.n_ == b.n_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }

 private:
  void trim() {
    if (n_ & 63) words_.back() &= ~std::uint64_t{0} >> (64 - (n_ & 63));
    if (n_ == 0 && !words_.empty()) words_.back() = 0;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ascfs
