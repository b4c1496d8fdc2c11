#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ringlab/automorphism.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/limits.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

/// A finite group of automorphisms of one ring, closed from generators.
/// Members start with the identity, then follow breadth-first discovery
/// order, so iteration is deterministic.
class ActionGroup {
 public:
  const RingPtr& ambient() const { return ambient_; }
  const std::vector<Automorphism>& members() const { return members_; }
  const std::vector<Automorphism>& generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }

 private:
  friend ActionGroup close_group(const RingPtr&, std::vector<Automorphism>, const Limits&);
  RingPtr ambient_;
  std::vector<Automorphism> members_;
  std::vector<Automorphism> generators_;
};

/// Throws CapExceeded above limits.max_group_order elements.
ActionGroup close_group(const RingPtr& ambient, std::vector<Automorphism> gens, const Limits& limits = {});

bool is_fixed(Elem t, const ActionGroup& G);
/// sigma(R) ⊆ R for every generator.
bool is_invariant_subring(const SubringHandle& R, const ActionGroup& G);

struct Orbit {
  Elem element = 0;
  ElementSet members;
  std::size_t size = 0;
  Elem orbit_sum = 0;   ///< sum over distinct orbit members
  Elem group_sum = 0;   ///< sum of sigma(t) over all sigma in G
  Elem orbit_prod = 0;  ///< product over distinct orbit members
};
Orbit orbit(Elem t, const ActionGroup& G);

/// S^G; throws PreconditionError when S is not invariant.
SubringHandle fixed_subring(const SubringHandle& S, const ActionGroup& G);

/// Distinct images sigma(I), sigma in G, the input first.
std::vector<Ideal> ideal_orbit(const Ideal& I, const ActionGroup& G);

struct QuotientAction {
  QuotientMap quotient;
  ActionGroup group;
};
/// Induced action on R/M; requires the orbit of M to be {M}.
QuotientAction quotient_action(const Ideal& M, const ActionGroup& G);

/// Hypotheses and outcome of the comparison between R^G/m and (R/M)^G,
/// m = M ∩ R^G, through phi(r + m) = r + M.
struct FixedQuotientIso {
  bool maximal = false;
  bool orbit_singleton = false;
  bool char_coprime = false;
  std::string char_witness;  ///< "char c divides n_r = k at r = ..." when it fails
  bool hypotheses_hold() const { return maximal && orbit_singleton && char_coprime; }

  bool isomorphism = false;  ///< evaluated only when hypotheses hold
  std::string detail;
  /// phi as pairs (label of r + m, label of r + M).
  std::vector<std::pair<std::string, std::string>> phi;
};
FixedQuotientIso fixed_quotient_iso_check(const Ideal& M, const ActionGroup& G);

enum class SymMode { Orbit, FullGroup };

struct SymTerm {
  Elem r = 0;  ///< coefficient in R
  Elem u = 0;  ///< fixed element of T
};

/// m * t = sum_i weights[i] * coeffs[i] * units[i], coeffs[i] in R^G.
struct SymCertificate {
  SymMode mode = SymMode::Orbit;
  std::uint64_t m = 1;
  std::vector<std::uint64_t> weights;
  std::vector<Elem> coeffs;
  std::vector<Elem> units;
  bool hypothesis_ok = true;
  std::string hypothesis_detail;
  bool verified = false;
};

/// Averages the coefficients of t = sum r_i u_i into R^G term by term.
/// Throws PreconditionError when t, u_i are not fixed, r_i not in R, or the
/// sum does not evaluate to t. A vanishing m * t is reported through
/// hypothesis_ok rather than thrown.
SymCertificate symmetrize_representation(Elem t, std::span<const SymTerm> terms, const SubringHandle& R,
                                         const ActionGroup& G, SymMode mode);

/// Replays a certificate through the ring tables.
bool replay_certificate(Elem t, const SymCertificate& cert, const SubringHandle& R, const ActionGroup& G);

struct SymInstance {
  Elem t = 0;
  std::vector<SymTerm> terms;
};
/// A valid input for symmetrize_representation with nonzero t: a fixed
/// combination sum q_i u_i whose terms are split as (q + d, u) + (-d, u)
/// with d drawn from R.
SymInstance random_sym_instance(const SubringHandle& R, const ActionGroup& G, std::mt19937_64& rng,
                                std::size_t terms);

}  // namespace ringlab
