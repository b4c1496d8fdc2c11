#include "ringlab/extend.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

ElementSet sumset(const FiniteRing& T, const ElementSet& a, const ElementSet& b) {
  ElementSet out(T.order());
  const auto bm = b.members();
  a.for_each([&](Elem x) {
    for (Elem y : bm) out.insert(T.add(x, y));
  });
  return out;
}

std::string describe(const Ideal& I) {
  std::string out = "{";
  for (const auto& l : I.labels()) out += (out.size() == 1 ? "" : ", ") + l;
  return out + "}";
}

// [S/C : R/C] by growing a spanning set one least missing element at a
// time; requires R/C to be a field.
std::size_t greedy_dimension(const SubringHandle& R, const SubringHandle& S, const Ideal& C) {
  const FiniteRing& T = R.ring();
  ElementSet span = C.members;
  const auto rm = R.members().members();
  std::size_t dim = 0;
  while (!(span == S.members())) {
    if (!span.is_subset_of(S.members())) throw Error("dimension count left S");
    Elem next = 0;
    bool found = false;
    S.members().for_each([&](Elem s) {
      if (!found && !span.contains(s)) {
        next = s;
        found = true;
      }
    });
    ElementSet grown(T.order());
    span.for_each([&](Elem a) {
      for (Elem r : rm) grown.insert(T.add(a, T.mul(r, next)));
    });
    span = std::move(grown);
    ++dim;
  }
  return dim;
}

// R/C -> S/N is injective iff R ∩ N = C, surjective iff R + N = S.
bool natural_map_iso(const SubringHandle& R, const SubringHandle& S, const Ideal& C, const Ideal& N) {
  if (!(R.members().intersect(N.members) == C.members)) return false;
  return sumset(R.ring(), R.members(), N.members) == S.members();
}

bool is_prime_number(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::string to_string(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::NotAnExtension: return "NotAnExtension";
    case ExtensionKind::TrivialEqual: return "TrivialEqual";
    case ExtensionKind::NotMinimal: return "NotMinimal";
    case ExtensionKind::MinimalInert: return "MinimalInert";
    case ExtensionKind::MinimalDecomposed: return "MinimalDecomposed";
    case ExtensionKind::MinimalRamified: return "MinimalRamified";
    case ExtensionKind::MinimalIntegrallyClosed: return "MinimalIntegrallyClosed";
  }
  return "?";
}

bool is_minimal_extension(const SubringHandle& R, const SubringHandle& S) {
  if (!R.is_subset_of(S) || R == S) return false;
  bool minimal = true;
  S.members().for_each([&](Elem u) {
    if (!minimal || R.contains(u)) return;
    const Elem seed[] = {u};
    if (!(subring_closure(R, seed).members() == S.members())) minimal = false;
  });
  return minimal;
}

ExtensionReport classify_extension(const SubringHandle& R, const SubringHandle& S, const Limits& limits) {
  ExtensionReport rep;
  if (!R.is_subset_of(S)) return rep;
  if (R == S) {
    rep.kind = ExtensionKind::TrivialEqual;
    rep.conductor = unit_ideal(R);
    return rep;
  }
  const Ideal C = conductor(R, S);
  rep.conductor = C;
  const bool minimal = is_minimal_extension(R, S);
  rep.conductor_maximal = is_maximal(C);

  if (rep.conductor_maximal) {
    const Ideal CS = make_ideal(S, C.members);
    const auto maxS = max_ideals(S, limits);
    const std::size_t dim = greedy_dimension(R, S, C);
    rep.dimension = dim;

    rep.inert_match = std::find(maxS.begin(), maxS.end(), CS) != maxS.end() && is_prime_number(dim);

    std::vector<Ideal> decomposed;
    for (std::size_t i = 0; i < maxS.size() && decomposed.empty(); ++i) {
      for (std::size_t j = i + 1; j < maxS.size(); ++j) {
        if (!(maxS[i].members.intersect(maxS[j].members) == C.members)) continue;
        if (natural_map_iso(R, S, C, maxS[i]) && natural_map_iso(R, S, C, maxS[j])) {
          decomposed = {maxS[i], maxS[j]};
          break;
        }
      }
    }
    rep.decomposed_match = !decomposed.empty();

    std::vector<Ideal> ramified;
    if (dim == 2) {
      for (const auto& N : maxS) {
        const bool strictly_between = C.members.is_subset_of(N.members) && !(C.members == N.members);
        if (!strictly_between) continue;
        if (!ideal_product(N, N).members.is_subset_of(C.members)) continue;
        if (natural_map_iso(R, S, C, N)) {
          ramified = {N};
          break;
        }
      }
    }
    rep.ramified_match = !ramified.empty();

    const int matches = int(rep.inert_match) + int(rep.decomposed_match) + int(rep.ramified_match);
    if (minimal && matches != 1) {
      throw Error("minimal extension matched " + std::to_string(matches) + " structural cases");
    }
    if (!minimal && matches != 0) {
      throw Error("non-minimal extension matched a structural case");
    }
    if (rep.inert_match) {
      rep.kind = ExtensionKind::MinimalInert;
      rep.witnesses = {CS};
    } else if (rep.decomposed_match) {
      rep.kind = ExtensionKind::MinimalDecomposed;
      rep.witnesses = decomposed;
    } else if (rep.ramified_match) {
      rep.kind = ExtensionKind::MinimalRamified;
      rep.witnesses = ramified;
    }
  } else if (minimal) {
    throw Error("minimal finite extension with a non-maximal conductor " + describe(C));
  }
  if (minimal) {
    rep.crucial_max = C;
  } else {
    rep.kind = ExtensionKind::NotMinimal;
  }
  rep.critical_ideal = critical_ideal(R, S);
  return rep;
}

std::optional<Ideal> critical_ideal(const SubringHandle& R, const SubringHandle& S) {
  if (!R.is_subset_of(S) || R == S) return std::nullopt;
  std::optional<Ideal> common;
  bool agree = true;
  S.members().for_each([&](Elem t) {
    if (!agree || R.contains(t)) return;
    Ideal rad = radical(colon(R, t));
    if (!common) {
      common = std::move(rad);
    } else if (!(rad == *common)) {
      agree = false;
    }
  });
  if (!agree) return std::nullopt;
  if (common && !is_prime(*common)) throw Error("critical ideal " + describe(*common) + " is not prime");
  return common;
}

std::vector<SubringHandle> intermediate_rings(const SubringHandle& R, const SubringHandle& S, const Limits& limits) {
  if (!R.is_subset_of(S)) throw PreconditionError("intermediate rings need R ⊆ S");
  if (S.size() > limits.max_intermediate_order) {
    throw CapExceeded("ring of order " + std::to_string(S.size()) + " exceeds the intermediate-ring cap of " +
                      std::to_string(limits.max_intermediate_order));
  }
  std::vector<SubringHandle> found{R};
  std::unordered_set<ElementSet, ElementSetHash> seen{R.members()};
  const auto sm = S.members().members();
  for (std::size_t i = 0; i < found.size(); ++i) {
    const SubringHandle A = found[i];
    for (Elem s : sm) {
      if (A.contains(s)) continue;
      const Elem seed[] = {s};
      SubringHandle B = subring_closure(A, seed);
      if (seen.insert(B.members()).second) found.push_back(std::move(B));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const SubringHandle& a, const SubringHandle& b) { return a.members() < b.members(); });
  return found;
}

std::optional<MonicWitness> find_monic_witness(Elem t, const SubringHandle& R, std::size_t degree_cap) {
  const FiniteRing& T = R.ring();
  const auto rm = R.members().members();
  // span[e] = coefficients (c_0..c_{d-1}) with e = sum c_i t^i, for e in R + Rt + ... + Rt^{d-1}.
  std::vector<std::optional<std::vector<Elem>>> span(T.order());
  span[T.zero()] = std::vector<Elem>{};
  Elem power = T.one();  // t^{d-1}
  for (std::size_t d = 1; d <= degree_cap; ++d) {
    std::vector<std::optional<std::vector<Elem>>> next(T.order());
    for (Elem a = 0; a < T.order(); ++a) {
      if (!span[a]) continue;
      for (Elem r : rm) {
        const Elem e = T.add(a, T.mul(r, power));
        if (next[e]) continue;
        auto c = *span[a];
        c.push_back(r);
        next[e] = std::move(c);
      }
    }
    span = std::move(next);
    power = T.mul(power, t);  // t^d
    if (span[power]) {
      MonicWitness w;
      w.t = t;
      for (Elem c : *span[power]) w.coeffs.push_back(T.neg(c));
      return w;
    }
  }
  return std::nullopt;
}

MonicWitness monic_witness(Elem t, const SubringHandle& R, std::size_t degree_cap) {
  if (auto w = find_monic_witness(t, R, degree_cap)) return *w;
  const FiniteRing& T = R.ring();
  std::vector<std::size_t> first_seen(T.order(), ~std::size_t{0});
  Elem x = T.one();
  for (std::size_t m = 0;; ++m) {
    if (first_seen[x] != ~std::size_t{0}) {
      MonicWitness w;
      w.t = t;
      w.power_cycle = true;
      w.coeffs.assign(m, T.zero());
      w.coeffs[first_seen[x]] = T.neg(T.one());
      return w;
    }
    first_seen[x] = m;
    x = T.mul(x, t);
  }
}

bool check_monic_witness(const MonicWitness& w, const SubringHandle& R) {
  const FiniteRing& T = R.ring();
  Elem value = T.zero();
  Elem power = T.one();
  for (Elem c : w.coeffs) {
    if (!R.contains(c)) return false;
    value = T.add(value, T.mul(c, power));
    power = T.mul(power, w.t);
  }
  return !w.coeffs.empty() && T.add(value, power) == T.zero();
}

IntegralityReport is_integral_extension(const SubringHandle& R, const SubringHandle& S, std::size_t degree_cap) {
  IntegralityReport rep;
  rep.integral = true;
  S.members().for_each([&](Elem t) {
    MonicWitness w = monic_witness(t, R, degree_cap);
    if (!check_monic_witness(w, R)) rep.integral = false;
    rep.witnesses.push_back(std::move(w));
  });
  return rep;
}

SubringHandle integral_closure_in(const SubringHandle& R, const SubringHandle& S) {
  ElementSet closure(R.ring().order());
  S.members().for_each([&](Elem t) {
    if (check_monic_witness(monic_witness(t, R, 4), R)) closure.insert(t);
  });
  return SubringHandle::from_members(R.ambient(), std::move(closure));
}

bool is_integrally_closed(const SubringHandle& R, const SubringHandle& S) {
  return integral_closure_in(R, S).members() == R.members();
}

std::vector<Ideal> extension_filter(const SubringHandle& R, const SubringHandle& S, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& I : all_ideals(R, limits)) {
    if (extend_to(I, S).is_unit_ideal()) out.push_back(std::move(I));
  }
  return out;
}

GabrielCheck is_gabriel_filter(const std::vector<Ideal>& filter, const SubringHandle& R, const Limits& limits) {
  GabrielCheck out;
  const auto lattice = all_ideals(R, limits);
  auto in_filter = [&](const Ideal& I) { return std::find(filter.begin(), filter.end(), I) != filter.end(); };
  for (const auto& I : filter) {
    for (const auto& J : lattice) {
      if (I.members.is_subset_of(J.members) && !in_filter(J)) {
        out.holds = false;
        out.failure = "(i) " + describe(I) + " ⊆ " + describe(J) + " but the larger ideal is missing";
        return out;
      }
    }
    for (const auto& J : filter) {
      if (!in_filter(ideal_intersection(I, J))) {
        out.holds = false;
        out.failure = "(ii) intersection of " + describe(I) + " and " + describe(J) + " is missing";
        return out;
      }
    }
  }
  for (const auto& I : lattice) {
    if (in_filter(I)) continue;
    for (const auto& J : filter) {
      bool all_in = true;
      J.members.for_each([&](Elem j) {
        if (all_in && !in_filter(ideal_quotient(I, j))) all_in = false;
      });
      if (all_in) {
        out.holds = false;
        out.failure = "(iii) every (I:j), j in " + describe(J) + ", lies in the filter but I = " + describe(I) +
                      " does not";
        return out;
      }
    }
  }
  return out;
}

bool is_perfect_localization(const SubringHandle& R, const SubringHandle& S) {
  bool ok = true;
  S.members().for_each([&](Elem t) {
    if (ok && !extend_to(colon(R, t), S).is_unit_ideal()) ok = false;
  });
  return ok;
}

CheckResult filter_contraction_check(const SubringHandle& R, const SubringHandle& S, const ActionGroup& G,
                                     const Limits& limits) {
  CheckResult out;
  const SubringHandle RG = fixed_subring(R, G);
  const SubringHandle SG = fixed_subring(S, G);
  const auto filter = extension_filter(R, S, limits);
  for (const auto& I : filter) {
    if (!extend_to(contract(I, RG), SG).is_unit_ideal()) {
      out.holds = false;
      out.detail = "(I ∩ R^G) T^G ≠ T^G for I = " + describe(I);
      return out;
    }
  }
  out.detail = "filter has " + std::to_string(filter.size()) + " ideal(s); every contraction generates T^G";
  return out;
}

CheckResult is_inc_pair(const SubringHandle& R, const SubringHandle& S, const Limits& limits) {
  CheckResult out;
  const auto rings = intermediate_rings(R, S, limits);
  for (const auto& A : rings) {
    const auto primes = spec(A, limits);
    for (const auto& q : primes) {
      for (const auto& q2 : primes) {
        if (q == q2 || !q.members.is_subset_of(q2.members)) continue;
        if (contract(q, R) == contract(q2, R)) {
          out.holds = false;
          out.detail = "primes " + describe(q) + " ⊊ " + describe(q2) + " of an intermediate ring share a contraction";
          return out;
        }
      }
    }
  }
  out.detail = std::to_string(rings.size()) + " intermediate ring(s) checked";
  return out;
}

CheckResult is_normal_pair(const SubringHandle& R, const SubringHandle& S, const Limits& limits) {
  CheckResult out;
  const auto rings = intermediate_rings(R, S, limits);
  for (const auto& A : rings) {
    if (!is_integrally_closed(A, S)) {
      out.holds = false;
      out.detail = "an intermediate ring of order " + std::to_string(A.size()) + " is not integrally closed";
      return out;
    }
  }
  out.detail = std::to_string(rings.size()) + " intermediate ring(s) integrally closed";
  return out;
}

}  // namespace ringlab
