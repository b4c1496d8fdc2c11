#include "ringlab/subring.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

ElementSet close_from(const FiniteRing& ring, ElementSet members, std::vector<Elem> list, std::size_t first_new) {
  // Invariant: list[0, first_new) is already closed among itself.
  auto push = [&](Elem e) {
    if (members.insert(e)) list.push_back(e);
  };
  for (std::size_t i = first_new; i < list.size(); ++i) {
    const Elem x = list[i];
    for (std::size_t j = 0; j <= i; ++j) {
      push(ring.add(x, list[j]));
      push(ring.mul(x, list[j]));
    }
  }
  return members;
}

}  // namespace

ElementSet close_under_ring_ops(const FiniteRing& ring, const ElementSet& start) {
  ElementSet members(ring.order());
  std::vector<Elem> list;
  auto push = [&](Elem e) {
    if (members.insert(e)) list.push_back(e);
  };
  push(ring.zero());
  push(ring.one());
  start.for_each(push);
  return close_from(ring, std::move(members), std::move(list), 0);
}

bool SubringHandle::is_subset_of(const SubringHandle& other) const {
  return ambient_ == other.ambient_ && members_.is_subset_of(other.members_);
}

SubringHandle SubringHandle::whole(RingPtr ambient) {
  ElementSet all = ambient->all();
  return SubringHandle(std::move(ambient), std::move(all));
}

SubringHandle SubringHandle::from_members(RingPtr ambient, ElementSet members) {
  const FiniteRing& T = *ambient;
  if (members.universe() != T.order()) throw PreconditionError("member set is not over " + T.construction());
  if (!members.contains(T.zero())) throw PreconditionError("subring must contain zero");
  if (!members.contains(T.one())) throw PreconditionError("subring must contain one");
  const auto list = members.members();
  for (Elem a : list) {
    if (!members.contains(T.neg(a))) throw PreconditionError("subring not closed under negation at " + T.label(a));
    for (Elem b : list) {
      if (!members.contains(T.add(a, b))) {
        throw PreconditionError("subring not closed under + at (" + T.label(a) + ", " + T.label(b) + ")");
      }
      if (!members.contains(T.mul(a, b))) {
        throw PreconditionError("subring not closed under * at (" + T.label(a) + ", " + T.label(b) + ")");
      }
    }
  }
  return SubringHandle(std::move(ambient), std::move(members));
}

void require_same_ambient(const RingPtr& a, const RingPtr& b) {
  if (a != b) {
    throw PreconditionError("elements of different rings mixed: " + a->construction() + " vs " + b->construction());
  }
}

SubringHandle subring_closure(const RingPtr& T, std::span<const Elem> seed) {
  ElementSet start(T->order());
  for (Elem e : seed) {
    if (e >= T->order()) throw PreconditionError("seed element outside " + T->construction());
    start.insert(e);
  }
  return SubringHandle::from_members(T, close_under_ring_ops(*T, start));
}

SubringHandle subring_closure(const SubringHandle& base, std::span<const Elem> extra) {
  const FiniteRing& T = base.ring();
  ElementSet members = base.members();
  std::vector<Elem> list = members.members();
  const std::size_t first_new = list.size();
  for (Elem e : extra) {
    if (e >= T.order()) throw PreconditionError("seed element outside " + T.construction());
    if (members.insert(e)) list.push_back(e);
  }
  return SubringHandle::from_members(base.ambient(), close_from(T, std::move(members), std::move(list), first_new));
}

Materialized materialize(const SubringHandle& subring) {
  const FiniteRing& T = subring.ring();
  Materialized out;
  out.to_ambient = subring.members().members();
  out.from_ambient.assign(T.order(), Materialized::npos);
  for (std::size_t i = 0; i < out.to_ambient.size(); ++i) out.from_ambient[out.to_ambient[i]] = static_cast<Elem>(i);
  const std::size_t n = out.to_ambient.size();
  FiniteRing::Tables t;
  t.labels.reserve(n);
  for (Elem a : out.to_ambient) t.labels.push_back(T.label(a));
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i * n + j] = out.from_ambient[T.add(out.to_ambient[i], out.to_ambient[j])];
      t.mul[i * n + j] = out.from_ambient[T.mul(out.to_ambient[i], out.to_ambient[j])];
    }
  }
  t.zero = out.from_ambient[T.zero()];
  t.one = out.from_ambient[T.one()];
  out.ring = FiniteRing::build(std::move(t), "subring of " + T.construction());
  return out;
}

}  // namespace ringlab
