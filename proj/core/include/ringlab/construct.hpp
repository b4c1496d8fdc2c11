#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ringlab/expr.hpp"
#include "ringlab/limits.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

/// Builds a finite ring from a construction expression:
///   zmod(n) | gf(p,k[,modulus]) | prod(A,B) | quotient(A,[gens]) |
///   idealization(A, self | free(k) | cyclic([gens]))
RingPtr build_ring(const Expr& expr, const Limits& limits = {});
RingPtr build_ring(std::string_view text, const Limits& limits = {});

/// Named subrings: "all", "prime", "diag" (products of identical factors),
/// "base" (R(+)0 in an idealization), "subfield(d)" (GF(p^k), d | k).
SubringHandle named_subring(const RingPtr& T, const Expr& spec);
/// Subring generated by the labelled elements.
SubringHandle generated_subring(const RingPtr& T, const std::vector<std::string>& labels);

}  // namespace ringlab
