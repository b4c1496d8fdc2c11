#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ringlab {

/// Index of an element within one FiniteRing (or FiniteModule carrier).
using Elem = std::uint32_t;

/// Fixed-universe bitset of element indices. Iteration is in increasing
/// index order, which keeps every derived report deterministic.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe, std::span<const Elem> elems);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Elem e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U) != 0;
  }
  /// Returns true when `e` was not already present.
  bool insert(Elem e);
  void erase(Elem e);

  std::vector<Elem> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;

  std::size_t hash() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Orders by size, then lexicographically by member list.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace ringlab
