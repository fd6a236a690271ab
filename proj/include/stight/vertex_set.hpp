#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stight {

using Vertex = std::uint32_t;

/// Dynamic bitset over the universe [0, universe). All neighbourhood
/// computations run on these rows: second neighbourhoods are an OR over
/// out-neighbour rows followed by masking.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet of(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

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

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Removes every member of `o`.
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  /// Calls f(v) for every member in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace stight
