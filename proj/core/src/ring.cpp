#include "ringlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>

#include "ringlab/errors.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

void check_order(std::uint64_t order, const Limits& limits, const std::string& what) {
  if (order > limits.max_ring_order) {
    throw CapExceeded(what + " has order " + std::to_string(order) + ", above the ring-order cap of " +
                      std::to_string(limits.max_ring_order));
  }
}

}  // namespace

RingPtr FiniteRing::build(Tables tables, std::string construction, RingParts parts, const Limits& limits) {
  const std::size_t n = tables.labels.size();
  if (n == 0) throw PreconditionError("a ring needs at least one element");
  check_order(n, limits, "ring " + construction);
  if (tables.add.size() != n * n || tables.mul.size() != n * n) {
    throw PreconditionError("operation tables of " + construction + " are not order x order");
  }
  if (tables.zero >= n || tables.one >= n) throw PreconditionError("zero/one index out of range");
  if (n > 1 && tables.zero == tables.one) {
    throw AxiomViolation("zero equals one in a ring of order " + std::to_string(n));
  }
  for (Elem v : tables.add) {
    if (v >= n) throw PreconditionError("addition table entry out of range");
  }
  for (Elem v : tables.mul) {
    if (v >= n) throw PreconditionError("multiplication table entry out of range");
  }

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->labels_ = std::move(tables.labels);
  ring->add_ = std::move(tables.add);
  ring->mul_ = std::move(tables.mul);
  ring->zero_ = tables.zero;
  ring->one_ = tables.one;
  ring->construction_ = std::move(construction);
  ring->parts_ = std::move(parts);

  for (Elem i = 0; i < n; ++i) {
    const auto [it, inserted] = ring->index_.emplace(strip_spaces(ring->labels_[i]), i);
    if (!inserted) throw PreconditionError("duplicate element label \"" + ring->labels_[i] + "\"");
  }

  ring->neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (ring->add(a, b) == ring->zero_) {
        ring->neg_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) {
      throw AxiomViolation("element " + ring->labels_[a] + " has no additive inverse in " +
                           ring->construction_);
    }
  }
  ring->characteristic_ = ring->additive_order(ring->one_);
  return ring;
}

std::uint64_t FiniteRing::additive_order(Elem a) const {
  std::uint64_t k = 1;
  Elem acc = a;
  while (acc != zero_) {
    acc = add(acc, a);
    ++k;
    if (k > order()) throw AxiomViolation("additive order exceeds ring order");
  }
  return k;
}

Elem FiniteRing::pow(Elem a, std::uint64_t n) const {
  Elem result = one_;
  Elem base = a;
  while (n > 0) {
    if ((n & 1U) != 0) result = mul(result, base);
    base = mul(base, base);
    n >>= 1U;
  }
  return result;
}

Elem FiniteRing::times(std::int64_t n, Elem a) const {
  const auto c = static_cast<std::int64_t>(characteristic_);
  std::int64_t m = n % c;
  if (m < 0) m += c;
  Elem result = zero_;
  Elem base = a;
  auto k = static_cast<std::uint64_t>(m);
  while (k > 0) {
    if ((k & 1U) != 0) result = add(result, base);
    base = add(base, base);
    k >>= 1U;
  }
  return result;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  for (Elem b = 0; b < order(); ++b) {
    if (mul(a, b) == one_) return b;
  }
  return std::nullopt;
}

bool FiniteRing::is_field() const {
  if (order() < 2) return false;
  for (Elem a = 0; a < order(); ++a) {
    if (a != zero_ && !is_unit(a)) return false;
  }
  return true;
}

std::optional<Elem> FiniteRing::find(const std::string& label) const {
  const auto it = index_.find(strip_spaces(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteRing::parse_label(const std::string& label) const {
  if (auto e = find(label)) return *e;
  throw ParseError("\"" + label + "\" is not an element label of " + construction_);
}

RingPtr make_zmod(std::uint32_t n, const Limits& limits) {
  if (n == 0) throw PreconditionError("zmod(n) needs n >= 1");
  check_order(n, limits, "zmod(" + std::to_string(n) + ")");
  FiniteRing::Tables t;
  t.labels.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) t.labels.push_back(std::to_string(i));
  t.add.resize(std::size_t{n} * n);
  t.mul.resize(std::size_t{n} * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  t.zero = 0;
  t.one = static_cast<Elem>(1 % n);
  return FiniteRing::build(std::move(t), "zmod(" + std::to_string(n) + ")", ZmodParts{n}, limits);
}

RingPtr make_gf(std::uint32_t p, std::uint32_t k, std::optional<FpPoly> modulus, const Limits& limits) {
  if (!is_prime(p)) throw ConstructionError("gf(p,k): " + std::to_string(p) + " is not prime");
  if (k == 0) throw ConstructionError("gf(p,k): k must be positive");
  std::uint64_t order = 1;
  // Saturate so the error message reports the true order whenever it fits.
  for (std::uint32_t i = 0; i < k && order != UINT64_MAX; ++i) {
    order = order > UINT64_MAX / p ? UINT64_MAX : order * p;
  }
  check_order(order, limits, "gf(" + std::to_string(p) + "," + std::to_string(k) + ")");
  FpPoly f = modulus ? *modulus : first_irreducible(p, k);
  if (f.characteristic() != p) throw ConstructionError("modulus is not a polynomial over F_" + std::to_string(p));
  if (f.degree() != static_cast<int>(k)) {
    throw ConstructionError("modulus " + f.to_string() + " does not have degree " + std::to_string(k));
  }
  if (!f.is_monic()) throw ConstructionError("modulus " + f.to_string() + " is not monic");
  if (auto factor = f.find_factor()) {
    throw ConstructionError("modulus " + f.to_string() + " is reducible: factor " + factor->to_string());
  }

  const auto n = static_cast<std::size_t>(order);
  auto digits = [&](std::size_t code) {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      d[i] = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::size_t code = 0;
    for (std::uint32_t i = k; i-- > 0;) code = code * p + d[i];
    return static_cast<Elem>(code);
  };

  FiniteRing::Tables t;
  t.labels.reserve(n);
  std::vector<std::vector<std::uint32_t>> coeff(n);
  for (std::size_t e = 0; e < n; ++e) {
    coeff[e] = digits(e);
    if (k == 1) {
      t.labels.push_back(std::to_string(coeff[e][0]));
    } else {
      std::string label = "[";
      for (std::uint32_t i = 0; i < k; ++i) {
        if (i != 0) label += ",";
        label += std::to_string(coeff[e][i]);
      }
      t.labels.push_back(label + "]");
    }
  }
  t.add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::uint32_t> d(k);
      for (std::uint32_t i = 0; i < k; ++i) d[i] = (coeff[a][i] + coeff[b][i]) % p;
      t.add[a * n + b] = encode(d);
    }
  }
  // times_x_pow[i][b] = x^i * b reduced mod f
  std::vector<std::vector<Elem>> times_x_pow(k, std::vector<Elem>(n));
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<std::int64_t> cb(coeff[b].begin(), coeff[b].end());
    FpPoly poly(p, cb);
    for (std::uint32_t i = 0; i < k; ++i) {
      const FpPoly r = poly % f;
      std::vector<std::uint32_t> d(k, 0);
      for (std::uint32_t j = 0; j < k; ++j) d[j] = r.coeff(j);
      times_x_pow[i][b] = encode(d);
      poly = r * FpPoly::x(p);
    }
  }
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::uint32_t> acc(k, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        const std::uint32_t ai = coeff[a][i];
        if (ai == 0) continue;
        const auto& term = coeff[times_x_pow[i][b]];
        for (std::uint32_t j = 0; j < k; ++j) acc[j] = (acc[j] + ai * term[j]) % p;
      }
      t.mul[a * n + b] = encode(acc);
    }
  }
  t.zero = 0;
  t.one = 1;
  const std::string construction =
      "gf(" + std::to_string(p) + "," + std::to_string(k) + "," + f.to_string() + ")";
  return FiniteRing::build(std::move(t), construction, GaloisParts{p, k, f}, limits);
}

RingPtr product(const RingPtr& left, const RingPtr& right, const Limits& limits) {
  const std::size_t na = left->order();
  const std::size_t nb = right->order();
  check_order(std::uint64_t{na} * nb, limits, "prod(" + left->construction() + "," + right->construction() + ")");
  const std::size_t n = na * nb;
  FiniteRing::Tables t;
  t.labels.reserve(n);
  for (Elem a = 0; a < na; ++a) {
    for (Elem b = 0; b < nb; ++b) t.labels.push_back("(" + left->label(a) + "," + right->label(b) + ")");
  }
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Elem>(x / nb);
    const auto xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Elem>(y / nb);
      const auto yb = static_cast<Elem>(y % nb);
      t.add[x * n + y] = static_cast<Elem>(left->add(xa, ya) * nb + right->add(xb, yb));
      t.mul[x * n + y] = static_cast<Elem>(left->mul(xa, ya) * nb + right->mul(xb, yb));
    }
  }
  t.zero = static_cast<Elem>(left->zero() * nb + right->zero());
  t.one = static_cast<Elem>(left->one() * nb + right->one());
  return FiniteRing::build(std::move(t), "prod(" + left->construction() + "," + right->construction() + ")",
                           ProductParts{left, right}, limits);
}

RingPtr idealization(const ModulePtr& module, const Limits& limits) {
  const RingPtr& base = module->base();
  const std::size_t nr = base->order();
  const std::size_t nm = module->order();
  const std::string construction = "idealization(" + base->construction() + "," + module->description() + ")";
  check_order(std::uint64_t{nr} * nm, limits, construction);
  const std::size_t n = nr * nm;
  FiniteRing::Tables t;
  t.labels.reserve(n);
  for (Elem r = 0; r < nr; ++r) {
    for (Elem m = 0; m < nm; ++m) t.labels.push_back("(" + base->label(r) + "," + module->label(m) + ")");
  }
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto r = static_cast<Elem>(x / nm);
    const auto m = static_cast<Elem>(x % nm);
    for (std::size_t y = 0; y < n; ++y) {
      const auto r2 = static_cast<Elem>(y / nm);
      const auto m2 = static_cast<Elem>(y % nm);
      t.add[x * n + y] = static_cast<Elem>(base->add(r, r2) * nm + module->add(m, m2));
      const Elem cross = module->add(module->scale(r, m2), module->scale(r2, m));
      t.mul[x * n + y] = static_cast<Elem>(base->mul(r, r2) * nm + cross);
    }
  }
  t.zero = static_cast<Elem>(base->zero() * nm + module->zero());
  t.one = static_cast<Elem>(base->one() * nm + module->zero());
  return FiniteRing::build(std::move(t), construction, IdealizationParts{base, module}, limits);
}

RingPtr quotient_ring(const RingPtr& ring, const ElementSet& ideal, const std::string& construction) {
  const std::size_t n = ring->order();
  if (ideal.universe() != n) throw PreconditionError("ideal is not a subset of " + ring->construction());
  if (!ideal.contains(ring->zero())) throw PreconditionError("ideal does not contain zero");
  const auto members = ideal.members();
  for (Elem a : members) {
    for (Elem b : members) {
      if (!ideal.contains(ring->add(a, b))) throw PreconditionError("set is not closed under addition");
    }
    for (Elem r = 0; r < n; ++r) {
      if (!ideal.contains(ring->mul(r, a))) throw PreconditionError("set does not absorb multiplication");
    }
  }

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> projection(n, kUnset);
  std::vector<Elem> representative;
  for (Elem a = 0; a < n; ++a) {
    if (projection[a] != kUnset) continue;
    const auto cls = static_cast<Elem>(representative.size());
    representative.push_back(a);
    for (Elem i : members) projection[ring->add(a, i)] = cls;
  }
  const std::size_t q = representative.size();
  FiniteRing::Tables t;
  t.labels.reserve(q);
  for (Elem rep : representative) t.labels.push_back("[" + ring->label(rep) + "]");
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) {
      t.add[x * q + y] = projection[ring->add(representative[x], representative[y])];
      t.mul[x * q + y] = projection[ring->mul(representative[x], representative[y])];
    }
  }
  t.zero = projection[ring->zero()];
  t.one = projection[ring->one()];
  return FiniteRing::build(std::move(t), construction,
                           QuotientParts{ring, std::move(projection), std::move(representative)});
}

std::optional<std::string> find_axiom_violation(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  const Elem z = ring.zero();
  const Elem o = ring.one();
  auto L = [&](Elem e) { return ring.label(e); };
  for (Elem a = 0; a < n; ++a) {
    if (ring.add(z, a) != a) return "additive identity fails at " + L(a);
    if (ring.mul(o, a) != a) return "multiplicative identity fails at " + L(a);
    if (ring.add(a, ring.neg(a)) != z) return "additive inverse fails at " + L(a);
    for (Elem b = 0; b < n; ++b) {
      if (ring.add(a, b) != ring.add(b, a)) return "addition not commutative at (" + L(a) + ", " + L(b) + ")";
      if (ring.mul(a, b) != ring.mul(b, a)) {
        return "multiplication not commutative at (" + L(a) + ", " + L(b) + ")";
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = ring.add(a, b);
      const Elem ab_prod = ring.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (ring.add(ab_sum, c) != ring.add(a, ring.add(b, c))) {
          return "addition not associative at (" + L(a) + ", " + L(b) + ", " + L(c) + ")";
        }
        if (ring.mul(ab_prod, c) != ring.mul(a, ring.mul(b, c))) {
          return "multiplication not associative at (" + L(a) + ", " + L(b) + ", " + L(c) + ")";
        }
        if (ring.mul(a, ring.add(b, c)) != ring.add(ab_prod, ring.mul(a, c))) {
          return "distributivity fails at (" + L(a) + ", " + L(b) + ", " + L(c) + ")";
        }
      }
    }
  }
  if (n > 1 && z == o) return std::string("zero equals one");
  return std::nullopt;
}

std::vector<Elem> ring_generators(const FiniteRing& ring) {
  std::vector<Elem> gens;
  ElementSet closed = close_under_ring_ops(ring, ElementSet(ring.order()));
  while (closed.size() < ring.order()) {
    Elem next = 0;
    while (closed.contains(next)) ++next;
    gens.push_back(next);
    ElementSet seed = closed;
    seed.insert(next);
    closed = close_under_ring_ops(ring, seed);
  }
  return gens;
}

namespace {

struct PowerShape {
  std::uint64_t preperiod;
  std::uint64_t period;
  bool operator==(const PowerShape&) const = default;
};

PowerShape power_shape(const FiniteRing& ring, Elem a) {
  std::vector<std::int64_t> seen(ring.order(), -1);
  Elem cur = ring.one();
  for (std::int64_t i = 0;; ++i) {
    if (seen[cur] >= 0) {
      return {static_cast<std::uint64_t>(seen[cur]), static_cast<std::uint64_t>(i - seen[cur])};
    }
    seen[cur] = i;
    cur = ring.mul(cur, a);
  }
}

constexpr Elem kUnmapped = ~Elem{0};

// Extends a partial injective homomorphism by closing under + and *. The
// domain of `fwd` is always a subring-closed set after success.
bool propagate(const FiniteRing& from, const FiniteRing& to, std::vector<Elem>& fwd, std::vector<Elem>& back,
               std::vector<Elem>& known, std::vector<Elem> pending) {
  auto assign = [&](Elem x, Elem y, std::vector<Elem>& queue) {
    if (fwd[x] != kUnmapped) return fwd[x] == y;
    if (back[y] != kUnmapped) return false;
    fwd[x] = y;
    back[y] = x;
    queue.push_back(x);
    return true;
  };
  std::vector<Elem> queue;
  for (Elem x : pending) queue.push_back(x);
  while (!queue.empty()) {
    const Elem x = queue.back();
    queue.pop_back();
    known.push_back(x);
    const Elem fx = fwd[x];
    for (std::size_t i = 0; i < known.size(); ++i) {
      const Elem k = known[i];
      const Elem fk = fwd[k];
      if (!assign(from.add(x, k), to.add(fx, fk), queue)) return false;
      if (!assign(from.mul(x, k), to.mul(fx, fk), queue)) return false;
    }
  }
  return true;
}

bool search_embedding(const FiniteRing& from, const FiniteRing& to, const std::vector<Elem>& gens, std::size_t depth,
                      std::vector<Elem>& fwd, std::vector<Elem>& back, std::vector<Elem>& known) {
  if (depth == gens.size()) return known.size() == from.order();
  const Elem g = gens[depth];
  if (fwd[g] != kUnmapped) return search_embedding(from, to, gens, depth + 1, fwd, back, known);
  const std::uint64_t add_order = from.additive_order(g);
  const PowerShape shape = power_shape(from, g);
  for (Elem y = 0; y < to.order(); ++y) {
    if (back[y] != kUnmapped) continue;
    if (to.additive_order(y) != add_order || !(power_shape(to, y) == shape)) continue;
    auto fwd_copy = fwd;
    auto back_copy = back;
    auto known_copy = known;
    fwd_copy[g] = y;
    back_copy[y] = g;
    if (propagate(from, to, fwd_copy, back_copy, known_copy, {g}) &&
        search_embedding(from, to, gens, depth + 1, fwd_copy, back_copy, known_copy)) {
      fwd = std::move(fwd_copy);
      back = std::move(back_copy);
      known = std::move(known_copy);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> find_embedding(const FiniteRing& from, const FiniteRing& to) {
  if (from.order() > to.order()) return std::nullopt;
  if (from.order() == 1) {
    if (to.order() != 1) return std::nullopt;  // unital: 0 = 1 must map to 1 != 0
    return std::vector<Elem>{0};
  }
  if (from.characteristic() != to.characteristic()) return std::nullopt;
  std::vector<Elem> fwd(from.order(), kUnmapped);
  std::vector<Elem> back(to.order(), kUnmapped);
  std::vector<Elem> known;
  fwd[from.zero()] = to.zero();
  back[to.zero()] = from.zero();
  fwd[from.one()] = to.one();
  back[to.one()] = from.one();
  if (!propagate(from, to, fwd, back, known, {from.zero(), from.one()})) return std::nullopt;
  const auto gens = ring_generators(from);
  if (!search_embedding(from, to, gens, 0, fwd, back, known)) return std::nullopt;
  return fwd;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return std::nullopt;
  return find_embedding(a, b);
}

}  // namespace ringlab
