#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace domsetkit {

// Fixed-universe bitset over vertex ids 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static VertexSet of(int universe, std::initializer_list<int> ids) {
    VertexSet s(universe);
    for (int v : ids) s.set(v);
    return s;
  }

  static VertexSet from_vector(int universe, const std::vector<int>& ids) {
    VertexSet s(universe);
    for (int v : ids) s.set(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~0ULL;
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1ULL;
  }

  void set(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] |= 1ULL << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] &= ~(1ULL << (v & 63));
  }

  void assign(int v, bool on) { on ? set(v) : reset(v); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int first() const { return next(-1); }

  // Smallest id strictly greater than `after`, or -1.
  int next(int after) const {
    int start = after + 1;
    if (start >= n_) return -1;
    size_t wi = static_cast<size_t>(start) >> 6;
    uint64_t w = words_[wi] >> (start & 63);
    if (w) return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (int v = first(); v != -1; v = next(v)) f(v);
  }

  // Lexicographic order on the sorted id sequence; used for deterministic ties.
  size_t word_count() const { return words_.size(); }
  uint64_t word(size_t i) const { return words_[i]; }

  bool lex_less(const VertexSet& o) const {
    assert(n_ == o.n_);
    int a = first(), b = o.first();
    while (a != -1 && b != -1) {
      if (a != b) return a < b;
      a = next(a);
      b = o.next(b);
    }
    return a == -1 && b != -1;
  }

 private:
  void trim() {
    if (n_ % 64 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace domsetkit
