#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ngon {

/// Dense subset of the vertex indices 0..universe-1 of one graph.
///
/// Every set-valued operation in the library (δ, d, cl, acl, bodies, bases)
/// speaks in terms of this type. Sets over different universes never mix;
/// binary operators assume equal universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<int> members)
      : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  VertexSet(std::size_t universe, const std::vector<int>& members)
      : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<int>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// |this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Canonical order: lexicographic on the sorted member lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace ngon
