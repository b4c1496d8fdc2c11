#pragma once

#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A unital ring automorphism stored as a permutation of element indices.
class Automorphism {
 public:
  static Automorphism identity(RingPtr ambient);
  /// Checks bijectivity, additivity, multiplicativity and sigma(1) = 1
  /// exhaustively; throws AxiomViolation naming the law and witness pair.
  static Automorphism from_map(RingPtr ambient, std::vector<Elem> perm);

  const RingPtr& ambient() const { return ambient_; }
  const std::vector<Elem>& perm() const { return perm_; }
  Elem operator()(Elem e) const { return perm_[e]; }

  /// (this o inner)(x) = this(inner(x)).
  Automorphism after(const Automorphism& inner) const;
  Automorphism inverse() const;
  bool is_identity() const;

  ElementSet image(const ElementSet& s) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.ambient_ == b.ambient_ && a.perm_ == b.perm_;
  }

 private:
  Automorphism(RingPtr ambient, std::vector<Elem> perm) : ambient_(std::move(ambient)), perm_(std::move(perm)) {}

  RingPtr ambient_;
  std::vector<Elem> perm_;
};

/// x -> x^(p^k) on a ring of prime characteristic p.
Automorphism frobenius(const RingPtr& ring, std::uint32_t k = 1);
/// (a, b) -> (b, a) on a product A x A of identical factors.
Automorphism swap(const RingPtr& ring);

/// Builds an automorphism from an action expression:
///   id | frobenius | frobenius(k) | swap | compose(s, t) |
///   componentwise(s, t)   on prod(A,B): (a,b) -> (s(a), t(b));
///                         on idealization(R,self): (r,m) -> (s(r), t(m))
///                         where t may also be scale(u): m -> u*m
///   map([from->to, ...])  explicit label permutation (unlisted labels fixed)
Automorphism parse_automorphism(const RingPtr& ring, const Expr& spec);

}  // namespace ringlab
