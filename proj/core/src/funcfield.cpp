#include "ringlab/funcfield.hpp"

#include <algorithm>
#include <numeric>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

void require_same_p(const RationalFunction& a, const RationalFunction& b) {
  if (a.characteristic() != b.characteristic()) throw PreconditionError("rational functions over different fields");
}

FpPoly random_unit_poly(const FpPoly& center, std::mt19937_64& rng) {
  const std::uint32_t p = center.characteristic();
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  std::uniform_int_distribution<int> degree(0, 2);
  for (;;) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    FpPoly u(p, c);
    if (!u.is_zero() && !(u % center).is_zero()) return u;
  }
}

// u(x^d) for a polynomial u in one variable.
FpPoly inflate(const FpPoly& u, std::size_t d) {
  std::vector<std::int64_t> c(u.coeffs().size() == 0 ? 0 : (u.coeffs().size() - 1) * d + 1, 0);
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) c[i * d] = u.coeffs()[i];
  return FpPoly(u.characteristic(), c);
}

RationalFunction power_of(const FpPoly& f, std::int64_t k) {
  const RationalFunction base(f);
  return base.pow(k);
}

ProbeReport fail(ProbeReport r, std::string detail) {
  r.verdict = ProbeVerdict::Fails;
  r.detail = std::move(detail);
  return r;
}

bool center_is_x(const DVRWitness& V) { return V.center() == FpPoly::x(V.characteristic()); }

// Membership in V^G computed from the canonical form: f divides no
// denominator of a V-element, independently of the multiplicity count.
bool in_fixed_ring(const DVRWitness& V, const SubstGroup& G, const RationalFunction& t) {
  return !(t.denominator() % V.center()).is_zero() && G.fixes(t);
}
bool in_fixed_maximal(const DVRWitness& V, const SubstGroup& G, const RationalFunction& t) {
  return in_fixed_ring(V, G, t) && (t.is_zero() || (t.numerator() % V.center()).is_zero());
}

// Monic form of the product of the distinct images of the center.
RationalFunction orbit_product_of_center(const DVRWitness& V, const SubstGroup& G) {
  std::vector<RationalFunction> images;
  const RationalFunction f(V.center());
  for (const auto& s : G.members()) {
    RationalFunction img = s.apply(f);
    if (std::find(images.begin(), images.end(), img) == images.end()) images.push_back(img);
  }
  RationalFunction prod = RationalFunction::one(V.characteristic());
  for (const auto& i : images) prod = prod * i;
  return RationalFunction(prod.numerator().monic(), prod.denominator());
}

}  // namespace

RationalFunction::RationalFunction(FpPoly numerator, FpPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw PreconditionError("zero denominator");
  if (num_.characteristic() != den_.characteristic()) throw PreconditionError("mixed characteristics");
  const std::uint32_t p = num_.characteristic();
  if (num_.is_zero()) {
    den_ = FpPoly::constant(p, 1);
    return;
  }
  const FpPoly g = gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
  const std::uint32_t lc_inv = mod_inverse(den_.leading(), p);
  num_ = num_.scaled(lc_inv);
  den_ = den_.scaled(lc_inv);
}

RationalFunction::RationalFunction(FpPoly polynomial)
    : RationalFunction(polynomial, FpPoly::constant(polynomial.characteristic(), 1)) {}

RationalFunction RationalFunction::zero(std::uint32_t p) { return RationalFunction(FpPoly(p)); }
RationalFunction RationalFunction::one(std::uint32_t p) { return RationalFunction(FpPoly::constant(p, 1)); }
RationalFunction RationalFunction::x(std::uint32_t p) { return RationalFunction(FpPoly::x(p)); }

RationalFunction RationalFunction::parse(std::uint32_t p, std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0) {
      if (slash != std::string_view::npos) throw ParseError("more than one top-level '/' in \"" + std::string(text) + "\"");
      slash = i;
    }
  }
  if (slash == std::string_view::npos) return RationalFunction(FpPoly::parse(p, text));
  const FpPoly den = FpPoly::parse(p, text.substr(slash + 1));
  if (den.is_zero()) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return RationalFunction(FpPoly::parse(p, text.substr(0, slash)), den);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same_p(a, b);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same_p(a, b);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw PreconditionError("zero has no inverse");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  return RationalFunction(num_.pow(static_cast<std::uint64_t>(n)), den_.pow(static_cast<std::uint64_t>(n)));
}

RationalFunction RationalFunction::substitute_affine(std::uint32_t a, std::uint32_t b) const {
  return RationalFunction(num_.substitute_affine(a, b), den_.substitute_affine(a, b));
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::int64_t Valuation::value() const {
  if (infinite_) throw PreconditionError("valuation of zero is infinite");
  return v_;
}

std::int64_t multiplicity(const FpPoly& f, FpPoly g) {
  if (g.is_zero()) throw PreconditionError("multiplicity in the zero polynomial");
  std::int64_t k = 0;
  for (;;) {
    auto [q, r] = g.divmod(f);
    if (!r.is_zero()) return k;
    g = std::move(q);
    ++k;
  }
}

Valuation valuation(const FpPoly& center, const RationalFunction& t) {
  if (t.is_zero()) return Valuation::infinity();
  return Valuation::of(multiplicity(center, t.numerator()) - multiplicity(center, t.denominator()));
}

DVRWitness::DVRWitness(std::uint32_t p, FpPoly center) : p_(p), center_(std::move(center)) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (center_.characteristic() != p) throw PreconditionError("center over the wrong field");
  if (!center_.is_monic() || !center_.is_irreducible()) {
    throw PreconditionError("center " + center_.to_string() + " is not monic irreducible");
  }
}

std::string AffineSubst::to_string() const {
  if (b == 0) return "scale(" + std::to_string(a) + ")";
  if (a == 1) return "translate(" + std::to_string(b) + ")";
  return "affine(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

SubstGroup::SubstGroup(std::uint32_t p, std::vector<AffineSubst> generators)
    : p_(p), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.a == 0 || g.a >= p || g.b >= p) throw PreconditionError("substitution " + g.to_string() + " is not invertible over F_" + std::to_string(p));
  }
  members_.push_back(AffineSubst{});
  // sigma(tau(t)) = t(a_s a_t x + a_t b_s + b_t)
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (const auto& g : generators_) {
      const AffineSubst& m = members_[i];
      const AffineSubst next{static_cast<std::uint32_t>((std::uint64_t{g.a} * m.a) % p),
                             static_cast<std::uint32_t>((std::uint64_t{m.a} * g.b + m.b) % p)};
      if (std::find(members_.begin(), members_.end(), next) == members_.end()) members_.push_back(next);
    }
  }
}

bool SubstGroup::is_scaling() const {
  return std::all_of(members_.begin(), members_.end(), [](const AffineSubst& s) { return s.b == 0; });
}

bool SubstGroup::fixes(const RationalFunction& t) const {
  return std::all_of(generators_.begin(), generators_.end(), [&](const AffineSubst& s) { return s.apply(t) == t; });
}

AffineSubst parse_subst(std::uint32_t p, const Expr& spec) {
  if (spec.is_atom("id") || spec.is_atom("identity")) return AffineSubst{};
  if (spec.is_call("scale")) {
    const std::uint32_t a = reduce(spec.arg(0).as_integer(), p);
    if (a == 0) throw ParseError("scale(0) is not invertible");
    return AffineSubst{a, 0};
  }
  if (spec.is_call("translate")) return AffineSubst{1, reduce(spec.arg(0).as_integer(), p)};
  if (spec.is_call("compose")) {
    AffineSubst acc;
    for (std::size_t i = spec.args.size(); i-- > 0;) {
      const AffineSubst g = parse_subst(p, spec.args[i]);
      acc = AffineSubst{static_cast<std::uint32_t>((std::uint64_t{g.a} * acc.a) % p),
                        static_cast<std::uint32_t>((std::uint64_t{acc.a} * g.b + acc.b) % p)};
    }
    return acc;
  }
  throw ParseError("unknown substitution " + spec.to_string());
}

bool invariance_check(const DVRWitness& V, const SubstGroup& G) {
  return std::all_of(G.generators().begin(), G.generators().end(), [&](const AffineSubst& s) {
    return V.center().substitute_affine(s.a, s.b).monic() == V.center();
  });
}

std::vector<RationalFunction> probes(const DVRWitness& V, std::mt19937_64& rng, int lo, int hi) {
  std::vector<RationalFunction> out;
  for (int k = lo; k <= hi; ++k) {
    for (int rep = 0; rep < 2; ++rep) {
      const RationalFunction unit(random_unit_poly(V.center(), rng), random_unit_poly(V.center(), rng));
      out.push_back(power_of(V.center(), k) * unit);
    }
  }
  return out;
}

std::vector<RationalFunction> fixed_probes(const DVRWitness& V, const SubstGroup& G, std::mt19937_64& rng, int lo,
                                           int hi) {
  if (!center_is_x(V) || !G.is_scaling()) throw PreconditionError("fixed probes need center x and a scaling group");
  const std::size_t d = G.order();
  const std::uint32_t p = V.characteristic();
  std::vector<RationalFunction> out;
  for (int k = lo; k <= hi; ++k) {
    const RationalFunction unit(inflate(random_unit_poly(V.center(), rng), d),
                                inflate(random_unit_poly(V.center(), rng), d));
    RationalFunction t = RationalFunction::x(p).pow(static_cast<std::int64_t>(d) * k) * unit;
    if (!G.fixes(t)) throw Error("generated probe " + t.to_string() + " is not fixed");
    out.push_back(std::move(t));
  }
  return out;
}

ProbeReport critical_ideal_witness(const DVRWitness& V, const SubstGroup& G, const RationalFunction& t,
                                   const std::vector<RationalFunction>& probe_set) {
  ProbeReport rep;
  const Valuation vt = V.valuation(t);
  if (!(vt < Valuation::of(0))) throw PreconditionError("t = " + t.to_string() + " lies in the ring");
  if (!G.fixes(t)) throw PreconditionError("t = " + t.to_string() + " is not fixed");
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (const auto& r : probe_set) {
    if (r.is_zero()) continue;
    if (!G.fixes(r)) throw PreconditionError("probe " + r.to_string() + " is not fixed");
    lo = std::min(lo, V.valuation(r).value());
    hi = std::max(hi, V.valuation(r).value());
  }
  if (lo > -3 || hi < 3) {
    throw PreconditionError("insufficient probe span [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  const std::int64_t need = -vt.value();
  auto in_ring = [&](const RationalFunction& s) { return in_fixed_ring(V, G, s); };
  for (const auto& r : probe_set) {
    if (r.is_zero()) continue;
    ++rep.probes;
    const std::int64_t vr = V.valuation(r).value();
    const bool colon_computed = in_ring(r) && in_ring(r * t);
    const bool colon_predicted = vr >= need;
    bool rad_computed = false;
    if (in_ring(r)) {
      RationalFunction power = r;
      for (std::int64_t n = 1; n <= need && !rad_computed; ++n) {
        if (in_ring(power * t)) rad_computed = true;
        power = power * r;
      }
    }
    const bool rad_predicted = vr >= 1;
    const bool in_m = in_fixed_maximal(V, G, r);
    if (colon_computed != colon_predicted) {
      return fail(rep, "colon membership of " + r.to_string() + " disagrees with v = " + std::to_string(vr));
    }
    if (rad_computed != rad_predicted || rad_computed != in_m) {
      return fail(rep, "radical membership of " + r.to_string() + " disagrees with the maximal ideal");
    }
  }
  rep.detail = "critical ideal = maximal ideal on " + std::to_string(rep.probes) + " probes, t = " + t.to_string();
  return rep;
}

ProbeReport valuation_axioms_check(const DVRWitness& V, std::mt19937_64& rng, std::size_t pairs) {
  ProbeReport rep;
  const std::uint32_t p = V.characteristic();
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  std::uniform_int_distribution<int> degree(0, 4);
  std::uniform_int_distribution<int> shift(-3, 3);
  auto random_poly = [&](bool nonzero) {
    for (;;) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(degree(rng)) + 1);
      for (auto& x : c) x = coeff(rng);
      FpPoly f(p, c);
      if (!nonzero || !f.is_zero()) return f;
    }
  };
  auto random_element = [&] {
    return RationalFunction(random_poly(false), random_poly(true)) * power_of(V.center(), shift(rng));
  };
  const RationalFunction f(V.center());
  if (!(V.valuation(f) == Valuation::of(1)) || !(V.valuation(f.inverse()) == Valuation::of(-1))) {
    return fail(rep, "v(f) != 1 or v(1/f) != -1");
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    const RationalFunction s = random_element();
    const RationalFunction t = random_element();
    ++rep.probes;
    const Valuation vs = V.valuation(s);
    const Valuation vt = V.valuation(t);
    if (!(V.valuation(s * t) == vs + vt)) {
      return fail(rep, "v(st) != v(s) + v(t) at s = " + s.to_string() + ", t = " + t.to_string());
    }
    const Valuation vsum = V.valuation(s + t);
    if (vsum < std::min(vs, vt) || (!(vs == vt) && !(vsum == std::min(vs, vt)))) {
      return fail(rep, "ultrametric inequality fails at s = " + s.to_string() + ", t = " + t.to_string());
    }
  }
  rep.detail = std::to_string(pairs) + " random pairs";
  return rep;
}

ProbeReport valuation_pair_fixed_check(const DVRWitness& V, const SubstGroup& G,
                                       const std::vector<RationalFunction>& samples) {
  ProbeReport rep;
  if (!invariance_check(V, G)) throw PreconditionError("V is not invariant under G");
  if (!center_is_x(V)) throw PreconditionError("the fixed-field check is implemented for center x only");
  if (!G.is_scaling()) throw PreconditionError("G must be a scaling group");
  const std::int64_t d = static_cast<std::int64_t>(G.order());
  std::int64_t g = 0;
  for (const auto& s : samples) {
    if (s.is_zero()) continue;
    ++rep.probes;
    if (!G.fixes(s)) return fail(rep, "sample " + s.to_string() + " is not fixed");
    const std::int64_t v = V.valuation(s).value();
    if (v % d != 0) return fail(rep, "v(" + s.to_string() + ") = " + std::to_string(v) + " is not a multiple of d");
    g = std::gcd(g, v);
    if (in_fixed_ring(V, G, s) != (v >= 0)) return fail(rep, "V^G membership disagrees at " + s.to_string());
    if (in_fixed_maximal(V, G, s) != (v > 0)) return fail(rep, "m ∩ V^G membership disagrees at " + s.to_string());
  }
  if (g != d) return fail(rep, "sample valuations generate " + std::to_string(g) + "Z, expected " + std::to_string(d) + "Z");
  for (const auto& s : samples) {
    for (const auto& t : samples) {
      const Valuation vs = V.valuation(s);
      const Valuation vt = V.valuation(t);
      if (!(V.valuation(s * t) == vs + vt)) return fail(rep, "multiplicativity fails on fixed samples");
      if (V.valuation(s + t) < std::min(vs, vt)) return fail(rep, "ultrametric inequality fails on fixed samples");
    }
  }
  for (const auto& t : samples) {
    if (t.is_zero() || V.valuation(t) >= Valuation::of(0)) continue;
    ProbeReport inner = critical_ideal_witness(V, G, t, samples);
    if (!inner.holds()) return fail(rep, inner.detail);
  }
  rep.detail = "value group " + std::to_string(d) + "Z on " + std::to_string(rep.probes) + " fixed samples";
  return rep;
}

ProbeReport integrally_closed_fixed_check(const DVRWitness& V, const SubstGroup& G,
                                          const std::vector<RationalFunction>& samples, std::size_t degree_cap,
                                          std::mt19937_64& rng) {
  ProbeReport rep;
  const std::uint32_t p = V.characteristic();
  std::vector<RationalFunction> base{RationalFunction::zero(p), RationalFunction::one(p)};
  for (const auto& s : samples) {
    if (in_fixed_ring(V, G, s)) base.push_back(s);
  }
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  for (const auto& t : samples) {
    if (t.is_zero()) continue;
    if (!G.fixes(t)) return fail(rep, "sample " + t.to_string() + " is not fixed");
    ++rep.probes;
    const Valuation vt = V.valuation(t);
    if (vt >= Valuation::of(0)) {
      if (!in_fixed_ring(V, G, t)) return fail(rep, t.to_string() + " has v >= 0 but is outside V^G");
      continue;
    }
    if (in_fixed_ring(V, G, t)) return fail(rep, t.to_string() + " has v < 0 but lies in V^G");
    for (std::size_t n = 1; n <= degree_cap; ++n) {
      for (int trial = 0; trial < 4; ++trial) {
        RationalFunction value = t.pow(static_cast<std::int64_t>(n));
        RationalFunction power = RationalFunction::one(p);
        for (std::size_t i = 0; i < n; ++i) {
          value = value + base[pick(rng)] * power;
          power = power * t;
        }
        if (value.is_zero() || !(V.valuation(value) == Valuation::of(static_cast<std::int64_t>(n) * vt.value()))) {
          return fail(rep, "a monic relation of degree " + std::to_string(n) + " escapes the valuation bound at " +
                               t.to_string());
        }
      }
    }
  }
  rep.detail = "valuation obstruction on " + std::to_string(rep.probes) + " fixed samples";
  return rep;
}

ProbeReport perfect_localization_fixed_check(const DVRWitness& V, const SubstGroup& G,
                                             const std::vector<RationalFunction>& samples) {
  ProbeReport rep;
  const std::uint32_t p = V.characteristic();
  const RationalFunction one = RationalFunction::one(p);
  const SubstGroup trivial(p, {});
  for (const auto& t : samples) {
    if (t.is_zero() || V.valuation(t) >= Valuation::of(0)) continue;
    const RationalFunction r = power_of(V.center(), -V.valuation(t).value());
    if (!V.contains(r) || !V.contains(r * t) || !(r * r.inverse() == one)) {
      return fail(rep, "V ⊂ K is not a perfect localization at " + t.to_string());
    }
  }
  const RationalFunction pi = orbit_product_of_center(V, G);
  if (!G.fixes(pi)) return fail(rep, "orbit product of the center " + pi.to_string() + " is not fixed");
  const std::int64_t e = V.valuation(pi).value();
  for (const auto& t : samples) {
    if (t.is_zero()) continue;
    if (!G.fixes(t)) return fail(rep, "sample " + t.to_string() + " is not fixed");
    ++rep.probes;
    if (in_fixed_ring(V, G, t)) continue;  // 1 is in the colon
    const std::int64_t k = (-V.valuation(t).value() + e - 1) / e;
    const RationalFunction r = pi.pow(k);
    const RationalFunction s = r.inverse();
    if (!in_fixed_ring(V, G, r) || !in_fixed_ring(V, G, r * t)) {
      return fail(rep, "r = " + r.to_string() + " is not in (V^G : " + t.to_string() + ")");
    }
    if (!G.fixes(s) || !(r * s == one)) return fail(rep, "no inverse of " + r.to_string() + " in K^G");
  }
  rep.detail = "inverse certificates with r = (" + pi.to_string() + ")^k on " + std::to_string(rep.probes) +
               " fixed samples";
  return rep;
}

ProbeReport filter_contraction_fixed_check(const DVRWitness& V, const SubstGroup& G, int max_power) {
  ProbeReport rep;
  if (!invariance_check(V, G)) throw PreconditionError("V is not invariant under G");
  const RationalFunction one = RationalFunction::one(V.characteristic());
  const RationalFunction pi = orbit_product_of_center(V, G);
  if (!G.fixes(pi)) return fail(rep, "orbit product of the center " + pi.to_string() + " is not fixed");
  const std::int64_t e = V.valuation(pi).value();
  for (std::int64_t k = 0; k <= max_power; ++k) {
    ++rep.probes;
    const RationalFunction r = pi.pow((k + e - 1) / e);
    const RationalFunction s = r.inverse();
    if (V.valuation(r) < Valuation::of(k) || !in_fixed_ring(V, G, r)) {
      return fail(rep, r.to_string() + " is not in m^" + std::to_string(k) + " ∩ V^G");
    }
    if (!G.fixes(s) || !(r * s == one)) return fail(rep, "no inverse of " + r.to_string() + " in K^G");
  }
  rep.detail = "m^k ∩ V^G generates K^G for k <= " + std::to_string(max_power);
  return rep;
}

ProbeReport normal_pair_fixed_check(const DVRWitness& V, const SubstGroup& G,
                                    const std::vector<RationalFunction>& samples, std::mt19937_64& rng) {
  ProbeReport rep;
  std::vector<RationalFunction> inside;
  std::vector<RationalFunction> outside;
  for (const auto& s : samples) {
    if (s.is_zero()) continue;
    if (!G.fixes(s)) return fail(rep, "sample " + s.to_string() + " is not fixed");
    (in_fixed_ring(V, G, s) ? inside : outside).push_back(s);
  }
  if (inside.empty() || outside.empty()) {
    rep.verdict = ProbeVerdict::Inconclusive;
    rep.detail = "samples do not straddle V^G";
    return rep;
  }
  // Seeds inside V^G: one round of sums and products stays inside.
  std::vector<RationalFunction> closure = inside;
  for (const auto& a : inside) {
    for (const auto& b : inside) {
      closure.push_back(a + b);
      closure.push_back(a * b);
    }
  }
  for (const auto& c : closure) {
    ++rep.probes;
    if (!in_fixed_ring(V, G, c)) return fail(rep, "closure of V^G seeds left V^G at " + c.to_string());
  }
  ProbeReport closed = integrally_closed_fixed_check(V, G, samples, 4, rng);
  if (!closed.holds()) return closed;
  // Seeds outside V^G: V^G[t] contains 1/pi and with it every sample.
  const RationalFunction pi = orbit_product_of_center(V, G);
  const std::int64_t e = V.valuation(pi).value();
  for (const auto& t : outside) {
    const RationalFunction w = pi.inverse() / t;
    if (!in_fixed_ring(V, G, w)) {
      rep.verdict = ProbeVerdict::Inconclusive;
      rep.detail = "could not express 1/pi through " + t.to_string() + " within the bound";
      return rep;
    }
    for (const auto& s : samples) {
      if (s.is_zero()) continue;
      ++rep.probes;
      const std::int64_t n = std::max<std::int64_t>(0, (-V.valuation(s).value() + e - 1) / e);
      if (!in_fixed_ring(V, G, s * pi.pow(n))) {
        rep.verdict = ProbeVerdict::Inconclusive;
        rep.detail = s.to_string() + " not reached from " + t.to_string();
        return rep;
      }
    }
  }
  rep.detail = "intermediate closures are V^G or reach every sample; V^G integrally closed on samples";
  return rep;
}

ProbeReport maximal_ideal_orbit_check(const DVRWitness& V, const SubstGroup& G,
                                      const std::vector<RationalFunction>& probe_set) {
  ProbeReport rep;
  for (const auto& s : G.members()) {
    for (const auto& r : probe_set) {
      ++rep.probes;
      if (V.in_maximal_ideal(s.apply(r)) != V.in_maximal_ideal(r)) {
        return fail(rep, s.to_string() + " moves " + r.to_string() + " across the maximal ideal");
      }
    }
  }
  rep.detail = "sigma(m) = m for all " + std::to_string(G.order()) + " group elements on probes";
  return rep;
}

ProbeReport overring_generation_check(const DVRWitness& V, const std::vector<RationalFunction>& probe_set) {
  ProbeReport rep;
  const RationalFunction f(V.center());
  const RationalFunction inv_f = f.inverse();
  for (const auto& t : probe_set) {
    if (t.is_zero() || V.contains(t)) continue;
    ++rep.probes;
    const RationalFunction r = (f * t).inverse();
    if (!V.contains(r) || !(r * t == inv_f)) return fail(rep, "1/f not reached from " + t.to_string());
    for (const auto& s : probe_set) {
      if (s.is_zero() || V.contains(s)) continue;
      if (!V.contains(s * power_of(V.center(), -V.valuation(s).value()))) {
        return fail(rep, s.to_string() + " is not in V[1/f]");
      }
    }
  }
  rep.detail = "every probe outside V generates 1/f over V";
  return rep;
}

}  // namespace ringlab
