#include "ringlab/ideals.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

ElementSet principal(const SubringHandle& R, Elem g) {
  const FiniteRing& T = R.ring();
  ElementSet out(T.order());
  R.members().for_each([&](Elem r) { out.insert(T.mul(g, r)); });
  return out;
}

ElementSet sumset(const FiniteRing& T, const ElementSet& a, const ElementSet& b) {
  ElementSet out(T.order());
  const auto bm = b.members();
  a.for_each([&](Elem x) {
    for (Elem y : bm) out.insert(T.add(x, y));
  });
  return out;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring == b.ring)) throw PreconditionError("ideals of different rings mixed");
}

}  // namespace

std::vector<std::string> Ideal::labels() const {
  std::vector<std::string> out;
  members.for_each([&](Elem e) { out.push_back(ring.ring().label(e)); });
  return out;
}

Ideal make_ideal(const SubringHandle& R, ElementSet members) {
  const FiniteRing& T = R.ring();
  if (members.universe() != T.order()) throw PreconditionError("ideal is not over " + T.construction());
  if (!members.is_subset_of(R.members())) throw PreconditionError("ideal is not contained in the ring");
  if (!members.contains(T.zero())) throw PreconditionError("ideal must contain zero");
  const auto list = members.members();
  const auto ring_members = R.members().members();
  for (Elem a : list) {
    for (Elem b : list) {
      if (!members.contains(T.add(a, b))) {
        throw PreconditionError("ideal not closed under + at (" + T.label(a) + ", " + T.label(b) + ")");
      }
    }
    for (Elem r : ring_members) {
      if (!members.contains(T.mul(r, a))) {
        throw PreconditionError("ideal does not absorb " + T.label(r) + " * " + T.label(a));
      }
    }
  }
  return Ideal{R, std::move(members)};
}

Ideal zero_ideal(const SubringHandle& R) {
  ElementSet z(R.ring().order());
  z.insert(R.ring().zero());
  return Ideal{R, std::move(z)};
}

Ideal unit_ideal(const SubringHandle& R) { return Ideal{R, R.members()}; }

Ideal ideal_generated(const SubringHandle& R, std::span<const Elem> gens) {
  const FiniteRing& T = R.ring();
  ElementSet acc(T.order());
  acc.insert(T.zero());
  for (Elem g : gens) {
    if (!R.contains(g)) throw PreconditionError("generator " + T.label(g) + " is not in the ring");
    if (acc.contains(g)) continue;
    acc = sumset(T, acc, principal(R, g));
  }
  return Ideal{R, std::move(acc)};
}

std::vector<Ideal> all_ideals(const SubringHandle& R, const Limits& limits) {
  const FiniteRing& T = R.ring();
  if (R.size() > limits.max_ring_order) throw CapExceeded("ring too large for ideal enumeration");
  std::vector<ElementSet> principals;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  R.members().for_each([&](Elem g) {
    ElementSet p = principal(R, g);
    if (seen.insert(p).second) principals.push_back(std::move(p));
  });
  std::deque<ElementSet> queue(principals.begin(), principals.end());
  std::vector<ElementSet> found(principals.begin(), principals.end());
  while (!queue.empty()) {
    ElementSet cur = std::move(queue.front());
    queue.pop_front();
    for (const ElementSet& p : principals) {
      if (p.is_subset_of(cur)) continue;
      ElementSet next = sumset(T, cur, p);
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_ideal_count) throw CapExceeded("ideal lattice exceeds the enumeration cap");
        found.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Ideal{R, std::move(s)});
  return out;
}

bool is_prime(const Ideal& I) {
  if (I.is_unit_ideal()) return false;
  const FiniteRing& T = I.ring.ring();
  std::vector<Elem> outside;
  I.ring.members().for_each([&](Elem r) {
    if (!I.contains(r)) outside.push_back(r);
  });
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i; j < outside.size(); ++j) {
      if (I.contains(T.mul(outside[i], outside[j]))) return false;
    }
  }
  return true;
}

bool is_maximal(const Ideal& I) {
  if (I.is_unit_ideal()) return false;
  const FiniteRing& T = I.ring.ring();
  const auto ring_members = I.ring.members().members();
  for (Elem r : ring_members) {
    if (I.contains(r)) continue;
    const bool invertible = std::any_of(ring_members.begin(), ring_members.end(),
                                        [&](Elem s) { return I.contains(T.sub(T.mul(r, s), T.one())); });
    if (!invertible) return false;
  }
  return true;
}

std::vector<Ideal> spec(const SubringHandle& R, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& I : all_ideals(R, limits)) {
    if (is_prime(I)) out.push_back(std::move(I));
  }
  return out;
}

std::vector<Ideal> max_ideals(const SubringHandle& R, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& I : all_ideals(R, limits)) {
    if (is_maximal(I)) out.push_back(std::move(I));
  }
  return out;
}

Ideal radical(const Ideal& I) {
  const FiniteRing& T = I.ring.ring();
  const std::size_t bound = I.ring.size();
  ElementSet out(T.order());
  I.ring.members().for_each([&](Elem r) {
    Elem x = r;
    for (std::size_t n = 1; n <= bound; ++n) {
      if (I.contains(x)) {
        out.insert(r);
        return;
      }
      x = T.mul(x, r);
    }
  });
  return Ideal{I.ring, std::move(out)};
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal{a.ring, sumset(a.ring.ring(), a.members, b.members)};
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal{a.ring, a.members.intersect(b.members)};
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const FiniteRing& T = a.ring.ring();
  std::vector<Elem> gens;
  ElementSet seen(T.order());
  const auto bm = b.members.members();
  a.members.for_each([&](Elem x) {
    for (Elem y : bm) {
      if (seen.insert(T.mul(x, y))) gens.push_back(T.mul(x, y));
    }
  });
  return ideal_generated(a.ring, gens);
}

Ideal ideal_quotient(const Ideal& I, Elem j) {
  const FiniteRing& T = I.ring.ring();
  if (!I.ring.contains(j)) throw PreconditionError("element " + T.label(j) + " is not in the ring");
  ElementSet out(T.order());
  I.ring.members().for_each([&](Elem r) {
    if (I.contains(T.mul(r, j))) out.insert(r);
  });
  return Ideal{I.ring, std::move(out)};
}

Ideal contract(const Ideal& I, const SubringHandle& R) {
  if (!R.is_subset_of(I.ring)) throw PreconditionError("contraction target is not a subring of the ideal's ring");
  return Ideal{R, I.members.intersect(R.members())};
}

Ideal extend_to(const Ideal& I, const SubringHandle& S) {
  if (!I.ring.is_subset_of(S)) throw PreconditionError("extension target does not contain the ideal's ring");
  const auto gens = I.members.members();
  return ideal_generated(S, gens);
}

Ideal colon(const SubringHandle& R, Elem t) {
  const FiniteRing& T = R.ring();
  if (t >= T.order()) throw PreconditionError("element outside the ambient ring");
  ElementSet out(T.order());
  R.members().for_each([&](Elem r) {
    if (R.contains(T.mul(r, t))) out.insert(r);
  });
  return make_ideal(R, std::move(out));
}

Ideal conductor(const SubringHandle& R, const SubringHandle& S) {
  if (!R.is_subset_of(S)) throw PreconditionError("conductor needs R ⊆ S");
  const FiniteRing& T = R.ring();
  const auto sm = S.members().members();
  ElementSet out(T.order());
  R.members().for_each([&](Elem r) {
    if (std::all_of(sm.begin(), sm.end(), [&](Elem s) { return R.contains(T.mul(r, s)); })) out.insert(r);
  });
  return make_ideal(R, std::move(out));
}

Ideal conductor(const SubringHandle& R) { return conductor(R, SubringHandle::whole(R.ambient())); }

Ideal ideal_image(const Automorphism& sigma, const Ideal& I) {
  require_same_ambient(sigma.ambient(), I.ring.ambient());
  if (!sigma.image(I.ring.members()).is_subset_of(I.ring.members())) {
    throw PreconditionError("subring is not invariant under the automorphism");
  }
  return Ideal{I.ring, sigma.image(I.members)};
}

QuotientMap quotient(const Ideal& I) {
  const Materialized mat = materialize(I.ring);
  ElementSet local(mat.ring->order());
  I.members.for_each([&](Elem e) { local.insert(mat.from_ambient[e]); });
  QuotientMap out;
  out.ring = quotient_ring(mat.ring, local, "quotient of " + I.ring.ring().construction());
  const auto& parts = std::get<QuotientParts>(out.ring->parts());
  out.projection.assign(I.ring.ring().order(), QuotientMap::npos);
  for (std::size_t i = 0; i < mat.to_ambient.size(); ++i) out.projection[mat.to_ambient[i]] = parts.projection[i];
  return out;
}

}  // namespace ringlab
