#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/expr.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

/// An element of F_p(x) in canonical form: monic denominator, coprime
/// numerator and denominator, zero as 0/1. Equality is structural.
class RationalFunction {
 public:
  RationalFunction(FpPoly numerator, FpPoly denominator);
  explicit RationalFunction(FpPoly polynomial);

  static RationalFunction zero(std::uint32_t p);
  static RationalFunction one(std::uint32_t p);
  static RationalFunction x(std::uint32_t p);
  /// "num" or "num/den" with each side a polynomial expression,
  /// e.g. "(x^4+1)/(x^2)".
  static RationalFunction parse(std::uint32_t p, std::string_view text);

  std::uint32_t characteristic() const { return num_.characteristic(); }
  const FpPoly& numerator() const { return num_; }
  const FpPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;
  RationalFunction pow(std::int64_t n) const;
  /// t(a*x + b).
  RationalFunction substitute_affine(std::uint32_t a, std::uint32_t b) const;

  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  FpPoly num_;
  FpPoly den_;
};

/// An integer or +infinity.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation of(std::int64_t v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  /// Throws PreconditionError on +infinity.
  std::int64_t value() const;

  friend Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return of(a.v_ + b.v_);
  }
  friend bool operator==(Valuation a, Valuation b) { return a.infinite_ == b.infinite_ && a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.v_ <=> b.v_;
  }
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(v_); }

 private:
  Valuation(bool infinite, std::int64_t v) : infinite_(infinite), v_(v) {}
  bool infinite_;
  std::int64_t v_;
};

/// Multiplicity of the irreducible f in the nonzero polynomial g.
std::int64_t multiplicity(const FpPoly& f, FpPoly g);
/// ord_f(numerator) - ord_f(denominator); +infinity for zero.
Valuation valuation(const FpPoly& center, const RationalFunction& t);

/// The discrete valuation ring of F_p(x) at a monic irreducible center.
class DVRWitness {
 public:
  /// Throws PreconditionError unless the center is monic irreducible.
  DVRWitness(std::uint32_t p, FpPoly center);

  std::uint32_t characteristic() const { return p_; }
  const FpPoly& center() const { return center_; }
  Valuation valuation(const RationalFunction& t) const { return ringlab::valuation(center_, t); }
  bool contains(const RationalFunction& t) const { return valuation(t) >= Valuation::of(0); }
  bool in_maximal_ideal(const RationalFunction& t) const { return valuation(t) > Valuation::of(0); }

 private:
  std::uint32_t p_;
  FpPoly center_;
};

/// x -> a*x + b.
struct AffineSubst {
  std::uint32_t a = 1;
  std::uint32_t b = 0;

  RationalFunction apply(const RationalFunction& t) const { return t.substitute_affine(a, b); }
  bool is_identity() const { return a == 1 && b == 0; }
  friend bool operator==(const AffineSubst& l, const AffineSubst& r) { return l.a == r.a && l.b == r.b; }
  std::string to_string() const;
};

/// A finite group of affine substitutions, closed from generators.
class SubstGroup {
 public:
  SubstGroup(std::uint32_t p, std::vector<AffineSubst> generators);

  std::uint32_t characteristic() const { return p_; }
  const std::vector<AffineSubst>& generators() const { return generators_; }
  const std::vector<AffineSubst>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }
  /// True when every member fixes 0 (x -> a*x only).
  bool is_scaling() const;

  bool fixes(const RationalFunction& t) const;

 private:
  std::uint32_t p_;
  std::vector<AffineSubst> generators_;
  std::vector<AffineSubst> members_;
};

/// id | scale(a) | translate(b) | compose(s, t)
AffineSubst parse_subst(std::uint32_t p, const Expr& spec);

/// V at center f is invariant under x -> a*x + b iff f(a*x + b) is an
/// associate of f.
bool invariance_check(const DVRWitness& V, const SubstGroup& G);

/// Seeded probes f^k * u / w with u, w units at the center, one or more per
/// k in [lo, hi].
std::vector<RationalFunction> probes(const DVRWitness& V, std::mt19937_64& rng, int lo = -6, int hi = 6);
/// Seeded probes in x^d (d = |G|) for a scaling group at center x,
/// valuations d*k for k in [lo, hi]; each is re-verified fixed.
std::vector<RationalFunction> fixed_probes(const DVRWitness& V, const SubstGroup& G, std::mt19937_64& rng,
                                           int lo = -6, int hi = 6);

enum class ProbeVerdict { Holds, Fails, Inconclusive };

struct ProbeReport {
  ProbeVerdict verdict = ProbeVerdict::Holds;
  std::size_t probes = 0;
  std::string detail;
  bool holds() const { return verdict == ProbeVerdict::Holds; }
};

/// For t with v(t) < 0: compares computed membership of every probe in
/// (R :_R t) and in its radical with the valuation predictions, where R is
/// V (trivial group) or V^G. Throws PreconditionError when the probe
/// valuations do not reach both -3 and 3.
ProbeReport critical_ideal_witness(const DVRWitness& V, const SubstGroup& G, const RationalFunction& t,
                                   const std::vector<RationalFunction>& probe_set);

/// Multiplicativity and the ultrametric inequality on random pairs.
ProbeReport valuation_axioms_check(const DVRWitness& V, std::mt19937_64& rng, std::size_t pairs);

/// v restricted to K^G has value group d*Z, V^G and m ∩ V^G are its
/// nonnegative and positive parts, and the critical ideal of V^G ⊂ K^G is
/// m ∩ V^G on the fixed probes. Center must be x.
ProbeReport valuation_pair_fixed_check(const DVRWitness& V, const SubstGroup& G,
                                       const std::vector<RationalFunction>& samples);

/// No monic relation over V^G vanishes at a fixed t with v(t) < 0;
/// explicit relations with sampled coefficients are evaluated too.
ProbeReport integrally_closed_fixed_check(const DVRWitness& V, const SubstGroup& G,
                                          const std::vector<RationalFunction>& samples, std::size_t degree_cap,
                                          std::mt19937_64& rng);

/// For each fixed t outside V^G, r = (orbit product of the center)^k in
/// (V^G : t) with an inverse s in K^G.
ProbeReport perfect_localization_fixed_check(const DVRWitness& V, const SubstGroup& G,
                                             const std::vector<RationalFunction>& samples);

/// Every nonzero ideal m^k of V, k in [0, max_power], contracts to an ideal
/// of V^G containing r = (orbit product of the center)^j with v(r) >= k and
/// an inverse in K^G.
ProbeReport filter_contraction_fixed_check(const DVRWitness& V, const SubstGroup& G, int max_power);

/// Bounded closures of sampled seeds stay in V^G or reach every sample.
ProbeReport normal_pair_fixed_check(const DVRWitness& V, const SubstGroup& G,
                                    const std::vector<RationalFunction>& samples, std::mt19937_64& rng);

/// sigma(m) = m on probes: v(sigma(r)) > 0 iff v(r) > 0.
ProbeReport maximal_ideal_orbit_check(const DVRWitness& V, const SubstGroup& G,
                                      const std::vector<RationalFunction>& probe_set);

/// Every probe t outside V yields 1/f in V[t] via r = 1/(f t) in V, and
/// then every negative probe lies in V[1/f].
ProbeReport overring_generation_check(const DVRWitness& V, const std::vector<RationalFunction>& probe_set);

}  // namespace ringlab
