#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/limits.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

class FiniteRing;
class FiniteModule;
using RingPtr = std::shared_ptr<const FiniteRing>;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// Structural provenance. Built-in automorphisms ("swap", "componentwise")
// and label conventions are defined in terms of these.
struct ZmodParts {
  std::uint32_t n;
};
struct GaloisParts {
  std::uint32_t p;
  std::uint32_t k;
  FpPoly modulus;
};
/// Element (i, j) has index i * |right| + j.
struct ProductParts {
  RingPtr left;
  RingPtr right;
};
/// Element (r, m) has index r * |M| + m.
struct IdealizationParts {
  RingPtr base;
  ModulePtr module;
};
struct QuotientParts {
  RingPtr parent;
  std::vector<Elem> projection;      ///< parent index -> quotient index
  std::vector<Elem> representative;  ///< quotient index -> least parent index
};
using RingParts =
    std::variant<std::monostate, ZmodParts, GaloisParts, ProductParts, IdealizationParts, QuotientParts>;

/// A commutative unital ring given by explicit operation tables. Immutable
/// once built; share through RingPtr.
class FiniteRing {
 public:
  struct Tables {
    std::vector<std::string> labels;
    std::vector<Elem> add;  ///< row-major order x order
    std::vector<Elem> mul;
    Elem zero = 0;
    Elem one = 0;
  };

  /// Checks table shapes, label uniqueness and zero != one (order > 1).
  /// Ring axioms are not checked here; see find_axiom_violation.
  static RingPtr build(Tables tables, std::string construction, RingParts parts = {},
                       const Limits& limits = {});

  std::size_t order() const { return labels_.size(); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const { return add_[a * order() + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order() + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  /// n * a (repeated addition), n may be negative.
  Elem times(std::int64_t n, Elem a) const;
  Elem from_integer(std::int64_t n) const { return times(n, one_); }

  /// Additive order of 1.
  std::uint64_t characteristic() const { return characteristic_; }
  std::uint64_t additive_order(Elem a) const;

  std::optional<Elem> inverse(Elem a) const;
  bool is_unit(Elem a) const { return inverse(a).has_value(); }
  bool is_field() const;

  const std::string& label(Elem a) const { return labels_.at(a); }
  std::optional<Elem> find(const std::string& label) const;
  /// Looks up a label, ignoring whitespace; throws ParseError if unknown.
  Elem parse_label(const std::string& label) const;

  const std::string& construction() const { return construction_; }
  const RingParts& parts() const { return parts_; }

  ElementSet all() const { return ElementSet::full(order()); }

 private:
  FiniteRing() = default;

  std::vector<std::string> labels_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::uint64_t characteristic_ = 1;
  std::string construction_;
  RingParts parts_;
  std::unordered_map<std::string, Elem> index_;
};

/// A finite module over a FiniteRing: an abelian group carrier plus a
/// scalar action table indexed [ring element][module element].
class FiniteModule {
 public:
  struct Tables {
    std::vector<std::string> labels;
    std::vector<Elem> add;
    std::vector<Elem> scalar;  ///< |R| x |M|
    Elem zero = 0;
  };

  /// Validates the abelian group and module laws exhaustively; throws
  /// AxiomViolation naming the law and witnesses.
  static ModulePtr build(RingPtr base, Tables tables, std::string description);

  /// R as a module over itself.
  static ModulePtr over_itself(const RingPtr& base);
  /// R^k with componentwise operations.
  static ModulePtr free(const RingPtr& base, std::uint32_t rank);
  /// R/I for the ideal I generated by `gens`.
  static ModulePtr cyclic(const RingPtr& base, const std::vector<Elem>& gens);

  const RingPtr& base() const { return base_; }
  std::size_t order() const { return labels_.size(); }
  Elem zero() const { return zero_; }
  Elem add(Elem a, Elem b) const { return add_[a * order() + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem scale(Elem r, Elem m) const { return scalar_[r * order() + m]; }
  const std::string& label(Elem m) const { return labels_.at(m); }
  const std::string& description() const { return description_; }

 private:
  FiniteModule() = default;

  RingPtr base_;
  std::vector<std::string> labels_;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> scalar_;
  Elem zero_ = 0;
  std::string description_;
};

/// Z/n with residue labels 0..n-1.
RingPtr make_zmod(std::uint32_t n, const Limits& limits = {});

/// GF(p^k) as F_p[x]/(modulus). Without a modulus the first monic
/// irreducible of degree k (canonical order) is used. Labels are the
/// residue itself for k = 1 and the coefficient tuple "[c0,c1,...]"
/// otherwise. Throws ConstructionError with a witnessed factor when the
/// modulus is reducible.
RingPtr make_gf(std::uint32_t p, std::uint32_t k, std::optional<FpPoly> modulus = std::nullopt,
                const Limits& limits = {});

/// Componentwise ring on pairs "(a,b)".
RingPtr product(const RingPtr& left, const RingPtr& right, const Limits& limits = {});

/// R(+)M with (r,m)(r',m') = (rr', rm' + r'm) on pairs "(r,m)".
RingPtr idealization(const ModulePtr& module, const Limits& limits = {});

/// Quotient by an ideal given as a member set of `ring`. The set is checked
/// to be an ideal. Labels are "[rep]" with rep the least member of each coset.
RingPtr quotient_ring(const RingPtr& ring, const ElementSet& ideal, const std::string& construction);

/// First violated ring law, with witnesses, or nullopt. Exhaustive over all
/// ordered pairs and triples.
std::optional<std::string> find_axiom_violation(const FiniteRing& ring);

/// Greedy generating set: repeatedly adds the least element outside the
/// subring generated so far.
std::vector<Elem> ring_generators(const FiniteRing& ring);

/// An injective unital ring homomorphism from -> to, found by backtracking
/// over images of a generating set, or nullopt if none exists.
std::optional<std::vector<Elem>> find_embedding(const FiniteRing& from, const FiniteRing& to);

/// A ring isomorphism a -> b, or nullopt.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

/// True when no proper nonzero submodule exists. Throws PreconditionError
/// for the zero module.
bool is_simple_module(const FiniteModule& module);

}  // namespace ringlab
