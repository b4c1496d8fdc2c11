#include "ringlab/automorphism.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

Automorphism Automorphism::identity(RingPtr ambient) {
  std::vector<Elem> perm(ambient->order());
  for (Elem i = 0; i < perm.size(); ++i) perm[i] = i;
  return Automorphism(std::move(ambient), std::move(perm));
}

Automorphism Automorphism::from_map(RingPtr ambient, std::vector<Elem> perm) {
  const FiniteRing& R = *ambient;
  const std::size_t n = R.order();
  if (perm.size() != n) throw AxiomViolation("automorphism map has the wrong length");
  ElementSet hit(n);
  for (Elem a = 0; a < n; ++a) {
    if (perm[a] >= n) throw AxiomViolation("automorphism image out of range");
    if (!hit.insert(perm[a])) {
      throw AxiomViolation("map is not injective: image " + R.label(perm[a]) + " repeated");
    }
  }
  if (perm[R.one()] != R.one()) throw AxiomViolation("map does not fix 1 (sends it to " + R.label(perm[R.one()]) + ")");
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      if (perm[R.add(a, b)] != R.add(perm[a], perm[b])) {
        throw AxiomViolation("map is not additive at (" + R.label(a) + ", " + R.label(b) + ")");
      }
      if (perm[R.mul(a, b)] != R.mul(perm[a], perm[b])) {
        throw AxiomViolation("map is not multiplicative at (" + R.label(a) + ", " + R.label(b) + ")");
      }
    }
  }
  return Automorphism(std::move(ambient), std::move(perm));
}

Automorphism Automorphism::after(const Automorphism& inner) const {
  if (ambient_ != inner.ambient_) throw PreconditionError("composing automorphisms of different rings");
  std::vector<Elem> perm(perm_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm_[inner.perm_[i]];
  return Automorphism(ambient_, std::move(perm));
}

Automorphism Automorphism::inverse() const {
  std::vector<Elem> perm(perm_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[perm_[i]] = static_cast<Elem>(i);
  return Automorphism(ambient_, std::move(perm));
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

ElementSet Automorphism::image(const ElementSet& s) const {
  ElementSet out(s.universe());
  s.for_each([&](Elem e) { out.insert(perm_[e]); });
  return out;
}

Automorphism frobenius(const RingPtr& ring, std::uint32_t k) {
  const std::uint64_t p = ring->characteristic();
  if (!is_prime(p)) {
    throw PreconditionError("frobenius needs prime characteristic; " + ring->construction() + " has characteristic " +
                            std::to_string(p));
  }
  std::uint64_t exponent = 1;
  for (std::uint32_t i = 0; i < k; ++i) exponent *= p;
  std::vector<Elem> perm(ring->order());
  for (Elem a = 0; a < perm.size(); ++a) perm[a] = ring->pow(a, exponent);
  return Automorphism::from_map(ring, std::move(perm));
}

Automorphism swap(const RingPtr& ring) {
  const auto* parts = std::get_if<ProductParts>(&ring->parts());
  if (parts == nullptr) throw PreconditionError("swap needs a product ring, got " + ring->construction());
  if (parts->left->construction() != parts->right->construction()) {
    throw PreconditionError("swap needs identical factors, got " + ring->construction());
  }
  const std::size_t nb = parts->right->order();
  std::vector<Elem> perm(ring->order());
  for (Elem x = 0; x < perm.size(); ++x) perm[x] = static_cast<Elem>((x % nb) * nb + x / nb);
  return Automorphism::from_map(ring, std::move(perm));
}

namespace {

// A map on the module carrier of idealization(R, self): either a ring
// automorphism of R or multiplication by a label of R.
std::vector<Elem> parse_module_map(const RingPtr& base, const Expr& spec) {
  if (spec.is_call("scale")) {
    const Elem u = base->parse_label(spec.arg(0).to_string());
    std::vector<Elem> out(base->order());
    for (Elem m = 0; m < out.size(); ++m) out[m] = base->mul(u, m);
    return out;
  }
  return parse_automorphism(base, spec).perm();
}

std::vector<std::pair<std::string, std::string>> parse_map_items(const Expr& list) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& item : list.items) {
    const auto arrow = item.find("->");
    if (arrow == std::string::npos) throw ParseError("map entry \"" + item + "\" lacks '->'");
    out.emplace_back(trim(item.substr(0, arrow)), trim(item.substr(arrow + 2)));
  }
  return out;
}

}  // namespace

Automorphism parse_automorphism(const RingPtr& ring, const Expr& spec) {
  if (spec.is_atom("id") || spec.is_atom("identity")) return Automorphism::identity(ring);
  if (spec.is_atom("frobenius")) return frobenius(ring, 1);
  if (spec.is_call("frobenius")) return frobenius(ring, static_cast<std::uint32_t>(spec.arg(0).as_integer()));
  if (spec.is_atom("swap")) return swap(ring);
  if (spec.is_call("compose")) {
    if (spec.args.empty()) throw ParseError("compose() needs arguments");
    Automorphism acc = parse_automorphism(ring, spec.args.back());
    for (std::size_t i = spec.args.size() - 1; i-- > 0;) acc = parse_automorphism(ring, spec.args[i]).after(acc);
    return acc;
  }
  if (spec.is_call("componentwise")) {
    if (spec.args.size() != 2) throw ParseError("componentwise(s, t) takes two arguments");
    if (const auto* prod = std::get_if<ProductParts>(&ring->parts())) {
      const auto first = parse_automorphism(prod->left, spec.args[0]);
      const auto second = parse_automorphism(prod->right, spec.args[1]);
      const std::size_t nb = prod->right->order();
      std::vector<Elem> perm(ring->order());
      for (Elem x = 0; x < perm.size(); ++x) perm[x] = static_cast<Elem>(first(x / nb) * nb + second(x % nb));
      return Automorphism::from_map(ring, std::move(perm));
    }
    if (const auto* ideal = std::get_if<IdealizationParts>(&ring->parts())) {
      if (ideal->module->description() != "self") {
        throw PreconditionError("componentwise on an idealization needs the module 'self'");
      }
      const auto first = parse_automorphism(ideal->base, spec.args[0]);
      const auto second = parse_module_map(ideal->base, spec.args[1]);
      const std::size_t nm = ideal->module->order();
      std::vector<Elem> perm(ring->order());
      for (Elem x = 0; x < perm.size(); ++x) perm[x] = static_cast<Elem>(first(x / nm) * nm + second[x % nm]);
      return Automorphism::from_map(ring, std::move(perm));
    }
    throw PreconditionError("componentwise needs a product or idealization, got " + ring->construction());
  }
  if (spec.is_call("map")) {
    if (spec.args.size() != 1 || spec.args[0].kind != Expr::Kind::List) {
      throw ParseError("map([a->b, ...]) takes one list argument");
    }
    std::vector<Elem> perm(ring->order());
    for (Elem x = 0; x < perm.size(); ++x) perm[x] = x;
    for (const auto& [from, to] : parse_map_items(spec.args[0])) perm[ring->parse_label(from)] = ring->parse_label(to);
    return Automorphism::from_map(ring, std::move(perm));
  }
  throw ParseError("unknown automorphism \"" + spec.to_string() + "\" for " + ring->construction());
}

}  // namespace ringlab
