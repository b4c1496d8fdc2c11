#include "ringlab/construct.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

std::vector<Elem> parse_labels(const FiniteRing& ring, const Expr& list) {
  if (list.kind != Expr::Kind::List) throw ParseError("expected a list of labels, got " + list.to_string());
  std::vector<Elem> out;
  for (const auto& item : list.items) out.push_back(ring.parse_label(item));
  return out;
}

std::uint32_t small_positive(const Expr& e, const char* what) {
  const auto v = e.as_integer();
  if (v < 1 || v > 1'000'000) throw ParseError(std::string(what) + " out of range: " + e.to_string());
  return static_cast<std::uint32_t>(v);
}

void expect_args(const Expr& e, std::size_t lo, std::size_t hi) {
  if (e.args.size() < lo || e.args.size() > hi) {
    throw ParseError("wrong number of arguments in " + e.to_string());
  }
}

}  // namespace

RingPtr build_ring(const Expr& e, const Limits& limits) {
  if (e.is_call("zmod")) {
    expect_args(e, 1, 1);
    const auto n = small_positive(e.arg(0), "zmod order");
    if (n > limits.max_ring_order) throw CapExceeded("zmod(" + std::to_string(n) + ") exceeds the ring order cap");
    return make_zmod(n, limits);
  }
  if (e.is_call("gf")) {
    expect_args(e, 2, 3);
    const auto p = small_positive(e.arg(0), "characteristic");
    const auto k = small_positive(e.arg(1), "degree");
    if (!is_prime(p)) throw ConstructionError("gf: " + std::to_string(p) + " is not prime");
    std::optional<FpPoly> modulus;
    if (e.args.size() == 3) modulus = FpPoly::parse(p, e.arg(2).to_string());
    return make_gf(p, k, modulus, limits);
  }
  if (e.is_call("prod")) {
    expect_args(e, 2, 2);
    return product(build_ring(e.arg(0), limits), build_ring(e.arg(1), limits), limits);
  }
  if (e.is_call("quotient")) {
    expect_args(e, 2, 2);
    const RingPtr A = build_ring(e.arg(0), limits);
    const auto gens = parse_labels(*A, e.arg(1));
    const SubringHandle whole = SubringHandle::whole(A);
    ElementSet ideal(A->order());
    ideal.insert(A->zero());
    for (Elem g : gens) {
      for (Elem r = 0; r < A->order(); ++r) ideal.insert(A->mul(r, g));
    }
    // Additive closure of the products.
    for (bool grew = true; grew;) {
      grew = false;
      for (Elem a : ideal.members()) {
        for (Elem b : ideal.members()) grew |= ideal.insert(A->add(a, b));
      }
    }
    return quotient_ring(A, ideal, e.to_string());
  }
  if (e.is_call("idealization")) {
    expect_args(e, 2, 2);
    const RingPtr A = build_ring(e.arg(0), limits);
    const Expr& m = e.arg(1);
    ModulePtr module;
    if (m.is_atom("self")) {
      module = FiniteModule::over_itself(A);
    } else if (m.is_call("free")) {
      module = FiniteModule::free(A, small_positive(m.arg(0), "free rank"));
    } else if (m.is_call("cyclic")) {
      module = FiniteModule::cyclic(A, parse_labels(*A, m.arg(0)));
    } else {
      throw ParseError("unknown module spec " + m.to_string());
    }
    return idealization(module, limits);
  }
  if (e.is_call("funcfield")) throw PreconditionError("funcfield(...) is not a finite ring");
  throw ParseError("unknown ring construction " + e.to_string());
}

RingPtr build_ring(std::string_view text, const Limits& limits) { return build_ring(Expr::parse(text), limits); }

SubringHandle named_subring(const RingPtr& T, const Expr& spec) {
  if (spec.is_atom("all")) return SubringHandle::whole(T);
  if (spec.is_atom("prime")) return subring_closure(T, {});
  if (spec.is_atom("diag")) {
    const auto* parts = std::get_if<ProductParts>(&T->parts());
    if (parts == nullptr || parts->left->construction() != parts->right->construction()) {
      throw PreconditionError("diag needs a product of identical factors, got " + T->construction());
    }
    const std::size_t n = parts->right->order();
    ElementSet members(T->order());
    for (Elem a = 0; a < n; ++a) members.insert(static_cast<Elem>(a * n + a));
    return SubringHandle::from_members(T, std::move(members));
  }
  if (spec.is_atom("base")) {
    const auto* parts = std::get_if<IdealizationParts>(&T->parts());
    if (parts == nullptr) throw PreconditionError("base needs an idealization, got " + T->construction());
    const std::size_t nm = parts->module->order();
    ElementSet members(T->order());
    for (Elem r = 0; r < parts->base->order(); ++r) members.insert(static_cast<Elem>(r * nm + parts->module->zero()));
    return SubringHandle::from_members(T, std::move(members));
  }
  if (spec.is_call("subfield")) {
    const auto* parts = std::get_if<GaloisParts>(&T->parts());
    if (parts == nullptr) throw PreconditionError("subfield needs a Galois field, got " + T->construction());
    const auto d = small_positive(spec.arg(0), "subfield degree");
    if (parts->k % d != 0) {
      throw PreconditionError("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(parts->k));
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) q *= parts->p;
    ElementSet members(T->order());
    for (Elem a = 0; a < T->order(); ++a) {
      if (T->pow(a, q) == a) members.insert(a);
    }
    return SubringHandle::from_members(T, std::move(members));
  }
  throw ParseError("unknown subring spec " + spec.to_string());
}

SubringHandle generated_subring(const RingPtr& T, const std::vector<std::string>& labels) {
  std::vector<Elem> seed;
  for (const auto& l : labels) seed.push_back(T->parse_label(l));
  return subring_closure(T, seed);
}

}  // namespace ringlab
