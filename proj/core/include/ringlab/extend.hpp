#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/action.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/limits.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

// Every operation here takes R ⊆ S as two subrings of one ambient ring, so
// fixed-ring extensions R^G ⊆ T^G are handled exactly like R ⊆ T.

enum class ExtensionKind {
  NotAnExtension,
  TrivialEqual,
  NotMinimal,
  MinimalInert,
  MinimalDecomposed,
  MinimalRamified,
  MinimalIntegrallyClosed,
};
std::string to_string(ExtensionKind kind);

/// R ⊊ S and S = R[u] for every u in S \ R, by closure.
bool is_minimal_extension(const SubringHandle& R, const SubringHandle& S);

struct ExtensionReport {
  ExtensionKind kind = ExtensionKind::NotAnExtension;
  std::optional<Ideal> conductor;    ///< ideal of R
  std::optional<Ideal> crucial_max;  ///< the conductor, for minimal extensions
  std::vector<Ideal> witnesses;      ///< ideals of S: C (inert), N1 and N2, or N
  std::optional<Ideal> critical_ideal;
  std::optional<std::size_t> dimension;  ///< [S/C : R/C] when C is maximal in R
  bool conductor_maximal = false;
  bool inert_match = false;
  bool decomposed_match = false;
  bool ramified_match = false;
};

/// Brute-force minimality plus the three structural case checks. Throws
/// Error when the two disagree or more than one case matches.
ExtensionReport classify_extension(const SubringHandle& R, const SubringHandle& S, const Limits& limits = {});

/// Rad_R((R :_R t)) when it is the same for every t in S \ R. Throws Error
/// when such an ideal exists but is not prime.
std::optional<Ideal> critical_ideal(const SubringHandle& R, const SubringHandle& S);

/// All subrings A with R ⊆ A ⊆ S, ordered by size then members.
std::vector<SubringHandle> intermediate_rings(const SubringHandle& R, const SubringHandle& S,
                                              const Limits& limits = {});

/// t^d + c_{d-1} t^{d-1} + ... + c_0 = 0 with every c_i in the base ring.
struct MonicWitness {
  Elem t = 0;
  std::vector<Elem> coeffs;  ///< c_0 .. c_{d-1}
  bool power_cycle = false;  ///< from t^m = t^n rather than the search
  std::size_t degree() const { return coeffs.size(); }
};

/// Least-degree monic relation over R with degree <= cap, or nullopt.
std::optional<MonicWitness> find_monic_witness(Elem t, const SubringHandle& R, std::size_t degree_cap);
/// The search, falling back to x^m - x^n from the power sequence of t.
MonicWitness monic_witness(Elem t, const SubringHandle& R, std::size_t degree_cap);
bool check_monic_witness(const MonicWitness& w, const SubringHandle& R);

struct IntegralityReport {
  bool integral = false;
  std::vector<MonicWitness> witnesses;  ///< one per element of S
};
IntegralityReport is_integral_extension(const SubringHandle& R, const SubringHandle& S, std::size_t degree_cap = 8);

/// Elements of S with a monic witness over R.
SubringHandle integral_closure_in(const SubringHandle& R, const SubringHandle& S);
bool is_integrally_closed(const SubringHandle& R, const SubringHandle& S);

/// Ideals I of R with IS = S.
std::vector<Ideal> extension_filter(const SubringHandle& R, const SubringHandle& S, const Limits& limits = {});

struct GabrielCheck {
  bool holds = true;
  std::string failure;  ///< first failing axiom and witnesses
};
/// Axioms (i) upward closure, (ii) finite intersections, (iii) the colon
/// condition, evaluated over every ideal of R.
GabrielCheck is_gabriel_filter(const std::vector<Ideal>& filter, const SubringHandle& R, const Limits& limits = {});

/// (R :_R t) S = S for every t in S.
bool is_perfect_localization(const SubringHandle& R, const SubringHandle& S);

struct CheckResult {
  bool holds = true;
  std::string detail;
};

/// For every I in the filter of R ⊆ S: (I ∩ R^G) S^G = S^G.
CheckResult filter_contraction_check(const SubringHandle& R, const SubringHandle& S, const ActionGroup& G,
                                     const Limits& limits = {});

/// For every intermediate A: no two distinct comparable primes of A share
/// their contraction to R.
CheckResult is_inc_pair(const SubringHandle& R, const SubringHandle& S, const Limits& limits = {});
/// Every intermediate ring is integrally closed in S.
CheckResult is_normal_pair(const SubringHandle& R, const SubringHandle& S, const Limits& limits = {});

}  // namespace ringlab
