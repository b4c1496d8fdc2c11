#include "ringlab/action.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<Elem>& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (Elem e : p) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

Elem natural_times(const FiniteRing& T, std::uint64_t n, Elem a) {
  return T.times(static_cast<std::int64_t>(n % T.characteristic()), a);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw CapExceeded("symmetrization weight overflows 64 bits");
  return out;
}

}  // namespace

ActionGroup close_group(const RingPtr& ambient, std::vector<Automorphism> gens, const Limits& limits) {
  for (const auto& g : gens) require_same_ambient(g.ambient(), ambient);
  ActionGroup G;
  G.ambient_ = ambient;
  G.generators_ = gens;
  std::unordered_set<std::vector<Elem>, PermHash> seen;
  const Automorphism id = Automorphism::identity(ambient);
  seen.insert(id.perm());
  G.members_.push_back(id);
  // Closing under left multiplication by generators suffices: a finite
  // monoid of bijections is a group.
  for (std::size_t i = 0; i < G.members_.size(); ++i) {
    for (const auto& g : gens) {
      Automorphism next = g.after(G.members_[i]);
      if (seen.insert(next.perm()).second) {
        if (G.members_.size() >= limits.max_group_order) throw CapExceeded("group closure exceeds the order cap");
        G.members_.push_back(std::move(next));
      }
    }
  }
  return G;
}

bool is_fixed(Elem t, const ActionGroup& G) {
  return std::all_of(G.generators().begin(), G.generators().end(), [&](const Automorphism& s) { return s(t) == t; });
}

bool is_invariant_subring(const SubringHandle& R, const ActionGroup& G) {
  require_same_ambient(R.ambient(), G.ambient());
  for (const auto& s : G.generators()) {
    if (!s.image(R.members()).is_subset_of(R.members())) return false;
  }
  return true;
}

Orbit orbit(Elem t, const ActionGroup& G) {
  const FiniteRing& T = *G.ambient();
  Orbit o;
  o.element = t;
  o.members = ElementSet(T.order());
  o.group_sum = T.zero();
  for (const auto& s : G.members()) {
    o.members.insert(s(t));
    o.group_sum = T.add(o.group_sum, s(t));
  }
  o.size = o.members.size();
  o.orbit_sum = T.zero();
  o.orbit_prod = T.one();
  o.members.for_each([&](Elem e) {
    o.orbit_sum = T.add(o.orbit_sum, e);
    o.orbit_prod = T.mul(o.orbit_prod, e);
  });
  return o;
}

SubringHandle fixed_subring(const SubringHandle& S, const ActionGroup& G) {
  if (!is_invariant_subring(S, G)) throw PreconditionError("subring is not invariant under the group");
  ElementSet fixed(S.ring().order());
  S.members().for_each([&](Elem e) {
    if (is_fixed(e, G)) fixed.insert(e);
  });
  return SubringHandle::from_members(S.ambient(), std::move(fixed));
}

std::vector<Ideal> ideal_orbit(const Ideal& I, const ActionGroup& G) {
  std::vector<Ideal> out{I};
  for (const auto& s : G.members()) {
    Ideal img = ideal_image(s, I);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(std::move(img));
  }
  return out;
}

QuotientAction quotient_action(const Ideal& M, const ActionGroup& G) {
  for (const auto& s : G.generators()) {
    if (!(ideal_image(s, M) == M)) {
      throw PreconditionError("ideal orbit is not a singleton: it moves to {" + [&] {
        std::string out;
        for (const auto& l : ideal_image(s, M).labels()) out += (out.empty() ? "" : ", ") + l;
        return out;
      }() + "}");
    }
  }
  QuotientMap q = quotient(M);
  const std::size_t n = q.ring->order();
  std::vector<Elem> rep(n, QuotientMap::npos);
  M.ring.members().for_each([&](Elem r) {
    if (rep[q.projection[r]] == QuotientMap::npos) rep[q.projection[r]] = r;
  });
  std::vector<Automorphism> induced;
  for (const auto& s : G.generators()) {
    std::vector<Elem> perm(n);
    for (Elem c = 0; c < n; ++c) perm[c] = q.projection[s(rep[c])];
    induced.push_back(Automorphism::from_map(q.ring, std::move(perm)));
  }
  ActionGroup H = close_group(q.ring, std::move(induced));
  return QuotientAction{std::move(q), std::move(H)};
}

FixedQuotientIso fixed_quotient_iso_check(const Ideal& M, const ActionGroup& G) {
  FixedQuotientIso out;
  const SubringHandle& R = M.ring;
  const FiniteRing& T = R.ring();
  out.maximal = is_maximal(M);
  out.orbit_singleton = ideal_orbit(M, G).size() == 1;
  const SubringHandle RG = fixed_subring(R, G);
  const Ideal m = contract(M, RG);
  if (m.is_unit_ideal()) {
    out.char_witness = "M ∩ R^G is the unit ideal";
  } else {
    const QuotientMap small = quotient(m);
    const std::uint64_t c = small.ring->characteristic();
    out.char_coprime = true;
    R.members().for_each([&](Elem r) {
      if (!out.char_coprime) return;
      const std::size_t n = orbit(r, G).size;
      if (n % c == 0) {
        out.char_coprime = false;
        out.char_witness = "char " + std::to_string(c) + " divides n_r = " + std::to_string(n) + " at r = " + T.label(r);
      }
    });
  }
  if (!out.hypotheses_hold()) return out;

  const QuotientAction big = quotient_action(M, G);
  const QuotientMap small = quotient(m);
  const FiniteRing& Q = *big.quotient.ring;
  const FiniteRing& q = *small.ring;
  // phi on classes of R^G/m through any representative.
  std::vector<Elem> phi(q.order(), QuotientMap::npos);
  bool ok = true;
  RG.members().for_each([&](Elem r) {
    const Elem a = small.projection[r];
    const Elem b = big.quotient.projection[r];
    if (phi[a] == QuotientMap::npos) {
      phi[a] = b;
    } else if (phi[a] != b) {
      ok = false;
      out.detail = "phi is not well defined at " + T.label(r);
    }
  });
  ElementSet image(Q.order());
  for (Elem a = 0; ok && a < q.order(); ++a) {
    if (!image.insert(phi[a])) {
      ok = false;
      out.detail = "phi is not injective at " + q.label(a);
    }
    for (Elem b = 0; ok && b < q.order(); ++b) {
      if (phi[q.add(a, b)] != Q.add(phi[a], phi[b]) || phi[q.mul(a, b)] != Q.mul(phi[a], phi[b])) {
        ok = false;
        out.detail = "phi is not a ring map at (" + q.label(a) + ", " + q.label(b) + ")";
      }
    }
  }
  if (ok && phi[q.one()] != Q.one()) {
    ok = false;
    out.detail = "phi does not preserve 1";
  }
  ElementSet fixed(Q.order());
  for (Elem c = 0; c < Q.order(); ++c) {
    if (is_fixed(c, big.group)) fixed.insert(c);
  }
  if (ok && !(image == fixed)) {
    ok = false;
    out.detail = "image of phi has " + std::to_string(image.size()) + " elements, (R/M)^G has " +
                 std::to_string(fixed.size());
  }
  out.isomorphism = ok;
  if (ok) {
    out.detail = "R^G/m ≅ (R/M)^G, order " + std::to_string(q.order());
    for (Elem a = 0; a < q.order(); ++a) out.phi.emplace_back(q.label(a), Q.label(phi[a]));
  }
  return out;
}

SymCertificate symmetrize_representation(Elem t, std::span<const SymTerm> terms, const SubringHandle& R,
                                         const ActionGroup& G, SymMode mode) {
  const FiniteRing& T = R.ring();
  require_same_ambient(R.ambient(), G.ambient());
  if (!is_invariant_subring(R, G)) throw PreconditionError("R is not invariant under G");
  if (!is_fixed(t, G)) throw PreconditionError("t = " + T.label(t) + " is not fixed by G");
  Elem sum = T.zero();
  for (const auto& term : terms) {
    if (!R.contains(term.r)) throw PreconditionError("coefficient " + T.label(term.r) + " is not in R");
    if (!is_fixed(term.u, G)) throw PreconditionError("u = " + T.label(term.u) + " is not fixed by G");
    sum = T.add(sum, T.mul(term.r, term.u));
  }
  if (sum != t) throw PreconditionError("terms sum to " + T.label(sum) + ", not t = " + T.label(t));

  SymCertificate cert;
  cert.mode = mode;
  const std::size_t k = terms.size();
  for (const auto& term : terms) cert.units.push_back(term.u);

  if (mode == SymMode::FullGroup) {
    cert.m = G.order();
    cert.weights.assign(k, 1);
    for (const auto& term : terms) cert.coeffs.push_back(orbit(term.r, G).group_sum);
    if (!T.is_unit(natural_times(T, cert.m, T.one()))) {
      cert.hypothesis_ok = false;
      cert.hypothesis_detail = "|G| = " + std::to_string(cert.m) + " is not a unit";
    } else if (natural_times(T, cert.m, t) == T.zero()) {
      cert.hypothesis_ok = false;
      cert.hypothesis_detail = "m * t = 0";
    }
    cert.verified = replay_certificate(t, cert, R, G);
    return cert;
  }

  std::vector<Elem> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = terms[i].r;
  cert.coeffs.assign(k, T.zero());
  cert.weights.assign(k, 1);
  if (t == T.zero()) {
    cert.hypothesis_ok = false;
    cert.hypothesis_detail = "t = 0";
  }
  for (std::size_t i = 0; i < k && cert.hypothesis_ok; ++i) {
    if (is_fixed(c[i], G)) {
      cert.coeffs[i] = c[i];
      continue;
    }
    // One group element per orbit member of c_i.
    std::vector<const Automorphism*> reps;
    ElementSet hit(T.order());
    for (const auto& s : G.members()) {
      if (hit.insert(s(c[i]))) reps.push_back(&s);
    }
    const std::uint64_t n = reps.size();
    cert.m = checked_mul(cert.m, n);
    for (std::size_t j = 0; j < i; ++j) cert.weights[j] = checked_mul(cert.weights[j], n);
    Elem hat = T.zero();
    hit.for_each([&](Elem e) { hat = T.add(hat, e); });
    cert.coeffs[i] = hat;
    for (std::size_t j = i + 1; j < k; ++j) {
      Elem acc = T.zero();
      for (const auto* s : reps) acc = T.add(acc, (*s)(c[j]));
      c[j] = acc;
    }
    if (natural_times(T, cert.m, t) == T.zero()) {
      cert.hypothesis_ok = false;
      cert.hypothesis_detail = "m * t vanishes after averaging term " + std::to_string(i) + " (m = " +
                               std::to_string(cert.m) + ")";
    }
  }
  if (cert.hypothesis_ok) cert.verified = replay_certificate(t, cert, R, G);
  return cert;
}

bool replay_certificate(Elem t, const SymCertificate& cert, const SubringHandle& R, const ActionGroup& G) {
  const FiniteRing& T = R.ring();
  if (cert.coeffs.size() != cert.units.size() || cert.weights.size() != cert.units.size()) return false;
  Elem rhs = T.zero();
  for (std::size_t i = 0; i < cert.units.size(); ++i) {
    if (!R.contains(cert.coeffs[i]) || !is_fixed(cert.coeffs[i], G)) return false;
    rhs = T.add(rhs, natural_times(T, cert.weights[i], T.mul(cert.coeffs[i], cert.units[i])));
  }
  return rhs == natural_times(T, cert.m, t);
}

SymInstance random_sym_instance(const SubringHandle& R, const ActionGroup& G, std::mt19937_64& rng,
                                std::size_t terms) {
  const FiniteRing& T = R.ring();
  const auto TG = fixed_subring(SubringHandle::whole(R.ambient()), G).members().members();
  const auto RG = fixed_subring(R, G).members().members();
  const auto Rm = R.members().members();
  std::vector<Elem> moving;
  for (Elem r : Rm) {
    if (!is_fixed(r, G)) moving.push_back(r);
  }
  auto pick = [&](const std::vector<Elem>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SymInstance inst;
    inst.t = T.zero();
    for (std::size_t i = 0; i < terms; ++i) {
      const Elem q = pick(RG);
      const Elem u = pick(TG);
      const Elem d = moving.empty() ? pick(Rm) : pick(moving);
      inst.t = T.add(inst.t, T.mul(q, u));
      inst.terms.push_back({T.add(q, d), u});
      inst.terms.push_back({T.neg(d), u});
    }
    if (inst.t != T.zero()) return inst;
  }
  throw PreconditionError("could not draw a nonzero symmetrization instance");
}

}  // namespace ringlab
