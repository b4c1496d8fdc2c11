#pragma once

#include <span>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Smallest superset of `start` containing 0 and 1 and closed under +, *
/// (closure under negation follows in a finite additive group).
ElementSet close_under_ring_ops(const FiniteRing& ring, const ElementSet& start);

/// A unital subring of a FiniteRing, identified by its member set. Two
/// handles compare equal only when they share the same ambient ring object.
class SubringHandle {
 public:
  /// The ambient ring viewed as a subring of itself.
  static SubringHandle whole(RingPtr ambient);
  /// Validates: contains 0 and 1, closed under +, -, *. Throws
  /// PreconditionError with the failing witness otherwise.
  static SubringHandle from_members(RingPtr ambient, ElementSet members);

  const RingPtr& ambient() const { return ambient_; }
  const FiniteRing& ring() const { return *ambient_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem e) const { return members_.contains(e); }
  bool is_whole() const { return members_.size() == ambient_->order(); }
  bool is_subset_of(const SubringHandle& other) const;

  friend bool operator==(const SubringHandle& a, const SubringHandle& b) {
    return a.ambient_ == b.ambient_ && a.members_ == b.members_;
  }

 private:
  SubringHandle(RingPtr ambient, ElementSet members) : ambient_(std::move(ambient)), members_(std::move(members)) {}

  RingPtr ambient_;
  ElementSet members_;
};

/// Throws PreconditionError unless both handles live in the same ring object.
void require_same_ambient(const RingPtr& a, const RingPtr& b);

/// Smallest subring of T containing the seed (and 0, 1).
SubringHandle subring_closure(const RingPtr& T, std::span<const Elem> seed);
/// Smallest subring containing `base` and `extra`.
SubringHandle subring_closure(const SubringHandle& base, std::span<const Elem> extra);

/// A subring copied out into a standalone FiniteRing.
struct Materialized {
  RingPtr ring;
  std::vector<Elem> to_ambient;    ///< ring index -> ambient index
  std::vector<Elem> from_ambient;  ///< ambient index -> ring index, or npos
  static constexpr Elem npos = ~Elem{0};
};

/// Labels are kept from the ambient ring.
Materialized materialize(const SubringHandle& subring);

}  // namespace ringlab
