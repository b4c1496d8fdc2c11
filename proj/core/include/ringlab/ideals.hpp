#pragma once

#include <span>
#include <string>
#include <vector>

#include "ringlab/automorphism.hpp"
#include "ringlab/element_set.hpp"
#include "ringlab/limits.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

/// An ideal of a (sub)ring R. Members are ambient indices; the ring
/// operations are those of the ambient ring.
struct Ideal {
  SubringHandle ring;
  ElementSet members;

  std::size_t size() const { return members.size(); }
  bool contains(Elem e) const { return members.contains(e); }
  bool is_unit_ideal() const { return members == ring.members(); }
  std::vector<std::string> labels() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring == b.ring && a.members == b.members;
  }
};

/// Checks the ideal laws relative to R; throws PreconditionError otherwise.
Ideal make_ideal(const SubringHandle& R, ElementSet members);

Ideal zero_ideal(const SubringHandle& R);
Ideal unit_ideal(const SubringHandle& R);
Ideal ideal_generated(const SubringHandle& R, std::span<const Elem> gens);

/// Every ideal of R, ordered by size then members. Built from principal
/// ideals closed under sums.
std::vector<Ideal> all_ideals(const SubringHandle& R, const Limits& limits = {});

bool is_prime(const Ideal& I);
bool is_maximal(const Ideal& I);
std::vector<Ideal> spec(const SubringHandle& R, const Limits& limits = {});
std::vector<Ideal> max_ideals(const SubringHandle& R, const Limits& limits = {});

Ideal radical(const Ideal& I);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// (I : j) = {r in R : rj in I}, j an element of R.
Ideal ideal_quotient(const Ideal& I, Elem j);

/// I ∩ R for an ideal I of a ring containing R.
Ideal contract(const Ideal& I, const SubringHandle& R);
/// The ideal of S generated by I, for R ⊆ S.
Ideal extend_to(const Ideal& I, const SubringHandle& S);

/// (R :_R t) = {r in R : rt in R}.
Ideal colon(const SubringHandle& R, Elem t);
/// (R :_R S) = {r in R : rS ⊆ R} for R ⊆ S.
Ideal conductor(const SubringHandle& R, const SubringHandle& S);
/// Conductor into the whole ambient ring.
Ideal conductor(const SubringHandle& R);

/// sigma(I); requires sigma(R) ⊆ R.
Ideal ideal_image(const Automorphism& sigma, const Ideal& I);

/// R/I as a standalone ring, with the map from ambient indices of R.
struct QuotientMap {
  RingPtr ring;
  std::vector<Elem> projection;  ///< ambient index -> quotient index, npos outside R
  static constexpr Elem npos = ~Elem{0};
};
QuotientMap quotient(const Ideal& I);

}  // namespace ringlab
