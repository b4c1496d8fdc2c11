#include <algorithm>

#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

namespace {

ElementSet ideal_closure(const FiniteRing& ring, const std::vector<Elem>& gens) {
  ElementSet members(ring.order());
  std::vector<Elem> list;
  auto push = [&](Elem e) {
    if (members.insert(e)) list.push_back(e);
  };
  push(ring.zero());
  for (Elem g : gens) {
    for (Elem r = 0; r < ring.order(); ++r) push(ring.mul(r, g));
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) push(ring.add(list[i], list[j]));
  }
  return members;
}

}  // namespace

ModulePtr FiniteModule::build(RingPtr base, Tables tables, std::string description) {
  const std::size_t n = tables.labels.size();
  const std::size_t nr = base->order();
  if (n == 0) throw PreconditionError("a module needs at least one element");
  if (tables.add.size() != n * n || tables.scalar.size() != nr * n || tables.zero >= n) {
    throw PreconditionError("module tables have the wrong shape");
  }
  auto mod = std::shared_ptr<FiniteModule>(new FiniteModule());
  mod->base_ = std::move(base);
  mod->labels_ = std::move(tables.labels);
  mod->add_ = std::move(tables.add);
  mod->scalar_ = std::move(tables.scalar);
  mod->zero_ = tables.zero;
  mod->description_ = std::move(description);
  const FiniteRing& R = *mod->base_;
  auto L = [&](Elem m) { return mod->labels_[m]; };
  auto RL = [&](Elem r) { return R.label(r); };

  mod->neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (mod->add(mod->zero_, a) != a) throw AxiomViolation("module: zero is not an additive identity at " + L(a));
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (mod->add(a, b) != mod->add(b, a)) {
        throw AxiomViolation("module: addition not commutative at (" + L(a) + ", " + L(b) + ")");
      }
      if (!found && mod->add(a, b) == mod->zero_) {
        mod->neg_[a] = b;
        found = true;
      }
      for (Elem c = 0; c < n; ++c) {
        if (mod->add(mod->add(a, b), c) != mod->add(a, mod->add(b, c))) {
          throw AxiomViolation("module: addition not associative at (" + L(a) + ", " + L(b) + ", " + L(c) + ")");
        }
      }
    }
    if (!found) throw AxiomViolation("module: " + L(a) + " has no additive inverse");
  }
  for (Elem m = 0; m < n; ++m) {
    if (mod->scale(R.one(), m) != m) throw AxiomViolation("module: 1*m != m at m = " + L(m));
  }
  for (Elem r = 0; r < nr; ++r) {
    for (Elem m = 0; m < n; ++m) {
      for (Elem m2 = 0; m2 < n; ++m2) {
        if (mod->scale(r, mod->add(m, m2)) != mod->add(mod->scale(r, m), mod->scale(r, m2))) {
          throw AxiomViolation("module: r(m+n) != rm+rn at (" + RL(r) + ", " + L(m) + ", " + L(m2) + ")");
        }
      }
      for (Elem s = 0; s < nr; ++s) {
        if (mod->scale(R.add(r, s), m) != mod->add(mod->scale(r, m), mod->scale(s, m))) {
          throw AxiomViolation("module: (r+s)m != rm+sm at (" + RL(r) + ", " + RL(s) + ", " + L(m) + ")");
        }
        if (mod->scale(R.mul(r, s), m) != mod->scale(r, mod->scale(s, m))) {
          throw AxiomViolation("module: (rs)m != r(sm) at (" + RL(r) + ", " + RL(s) + ", " + L(m) + ")");
        }
      }
    }
  }
  return mod;
}

ModulePtr FiniteModule::over_itself(const RingPtr& base) {
  const std::size_t n = base->order();
  Tables t;
  t.labels.reserve(n);
  for (Elem a = 0; a < n; ++a) t.labels.push_back(base->label(a));
  t.add.resize(n * n);
  t.scalar.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      t.add[a * n + b] = base->add(a, b);
      t.scalar[a * n + b] = base->mul(a, b);
    }
  }
  t.zero = base->zero();
  return build(base, std::move(t), "self");
}

ModulePtr FiniteModule::free(const RingPtr& base, std::uint32_t rank) {
  if (rank == 0) throw PreconditionError("free module rank must be positive");
  const std::size_t nr = base->order();
  std::size_t n = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    n *= nr;
    if (n > 4096) throw CapExceeded("free module carrier exceeds 4096 elements");
  }
  auto digits = [&](std::size_t code) {
    std::vector<Elem> d(rank);
    for (std::uint32_t i = 0; i < rank; ++i) {
      d[i] = static_cast<Elem>(code % nr);
      code /= nr;
    }
    return d;
  };
  auto encode = [&](const std::vector<Elem>& d) {
    std::size_t code = 0;
    for (std::uint32_t i = rank; i-- > 0;) code = code * nr + d[i];
    return static_cast<Elem>(code);
  };
  Tables t;
  std::vector<std::vector<Elem>> comps(n);
  for (std::size_t m = 0; m < n; ++m) {
    comps[m] = digits(m);
    std::string label = "(";
    for (std::uint32_t i = 0; i < rank; ++i) {
      if (i != 0) label += ",";
      label += base->label(comps[m][i]);
    }
    t.labels.push_back(label + ")");
  }
  t.add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Elem> d(rank);
      for (std::uint32_t i = 0; i < rank; ++i) d[i] = base->add(comps[a][i], comps[b][i]);
      t.add[a * n + b] = encode(d);
    }
  }
  t.scalar.resize(nr * n);
  for (Elem r = 0; r < nr; ++r) {
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<Elem> d(rank);
      for (std::uint32_t i = 0; i < rank; ++i) d[i] = base->mul(r, comps[m][i]);
      t.scalar[r * n + m] = encode(d);
    }
  }
  std::vector<Elem> zero(rank, base->zero());
  t.zero = encode(zero);
  return build(base, std::move(t), "free(" + std::to_string(rank) + ")");
}

ModulePtr FiniteModule::cyclic(const RingPtr& base, const std::vector<Elem>& gens) {
  const std::size_t nr = base->order();
  const ElementSet ideal = ideal_closure(*base, gens);
  const auto members = ideal.members();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> projection(nr, kUnset);
  std::vector<Elem> reps;
  for (Elem a = 0; a < nr; ++a) {
    if (projection[a] != kUnset) continue;
    const auto cls = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem i : members) projection[base->add(a, i)] = cls;
  }
  const std::size_t n = reps.size();
  Tables t;
  for (Elem rep : reps) t.labels.push_back("[" + base->label(rep) + "]");
  t.add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.add[a * n + b] = projection[base->add(reps[a], reps[b])];
  }
  t.scalar.resize(nr * n);
  for (Elem r = 0; r < nr; ++r) {
    for (std::size_t m = 0; m < n; ++m) t.scalar[r * n + m] = projection[base->mul(r, reps[m])];
  }
  t.zero = projection[base->zero()];
  std::string description = "cyclic([";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i != 0) description += ",";
    description += base->label(gens[i]);
  }
  return build(base, std::move(t), description + "])");
}

bool is_simple_module(const FiniteModule& module) {
  if (module.order() <= 1) throw PreconditionError("the zero module is not considered for simplicity");
  const FiniteRing& R = *module.base();
  for (Elem m = 0; m < module.order(); ++m) {
    if (m == module.zero()) continue;
    ElementSet span(module.order());
    for (Elem r = 0; r < R.order(); ++r) span.insert(module.scale(r, m));
    if (span.size() != module.order()) return false;
  }
  return true;
}

}  // namespace ringlab
