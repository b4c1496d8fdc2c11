#include "ringlab/element_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringlab {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (Elem e = 0; e < universe; ++e) s.insert(e);
  return s;
}

ElementSet ElementSet::of(std::size_t universe, std::span<const Elem> elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.insert(e);
  return s;
}

bool ElementSet::insert(Elem e) {
  if (e >= universe_) throw std::out_of_range("element index outside set universe");
  std::uint64_t& word = words_[e >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (e & 63);
  if ((word & mask) != 0) return false;
  word |= mask;
  ++count_;
  return true;
}

void ElementSet::erase(Elem e) {
  if (!contains(e)) return;
  words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  --count_;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(count_);
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("element sets over different universes");
  ElementSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] = words_[w] & other.words_[w];
    out.count_ += static_cast<std::size_t>(__builtin_popcountll(out.words_[w]));
  }
  return out;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("element sets over different universes");
  ElementSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] = words_[w] | other.words_[w];
    out.count_ += static_cast<std::size_t>(__builtin_popcountll(out.words_[w]));
  }
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace ringlab
