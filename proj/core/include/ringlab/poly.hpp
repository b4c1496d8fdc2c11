#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ringlab {

bool is_prime(std::uint64_t n);

/// Multiplicative inverse of a modulo prime p; a must be nonzero mod p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Dense univariate polynomial over F_p, coefficients stored low degree
/// first with no trailing zeros. The zero polynomial has degree -1.
class FpPoly {
 public:
  explicit FpPoly(std::uint32_t p);
  FpPoly(std::uint32_t p, std::vector<std::int64_t> coeffs);

  static FpPoly constant(std::uint32_t p, std::int64_t c);
  static FpPoly monomial(std::uint32_t p, std::int64_t c, std::size_t degree);
  static FpPoly x(std::uint32_t p) { return monomial(p, 1, 1); }

  /// Parses sums of terms like "3x^2 - x + 1", with optional '*' and
  /// parenthesized sub-expressions raised to non-negative powers.
  static FpPoly parse(std::uint32_t p, std::string_view text, char var = 'x');

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  FpPoly operator-() const;
  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly scaled(std::uint32_t c) const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return a.divmod(b).first; }
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return a.divmod(b).second; }

  FpPoly monic() const;
  FpPoly pow(std::uint64_t n) const;
  std::uint32_t evaluate(std::uint32_t value) const;
  /// f(a*x + b).
  FpPoly substitute_affine(std::uint32_t a, std::uint32_t b) const;

  /// A nontrivial monic factor of degree <= deg/2 found by trial division,
  /// or nullopt when the polynomial is irreducible. Degree must be >= 1.
  std::optional<FpPoly> find_factor() const;
  bool is_irreducible() const { return degree() >= 1 && !find_factor(); }

  std::string to_string(char var = 'x') const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  /// Total order by degree, then coefficients from the top down.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

 private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(0, 0) is 0.
FpPoly gcd(FpPoly a, FpPoly b);

/// All monic polynomials of exactly the given degree, in the canonical
/// order: lower coefficients read as a base-p integer.
std::vector<FpPoly> monic_polynomials(std::uint32_t p, std::size_t degree);

/// The first monic irreducible of the given degree in canonical order.
FpPoly first_irreducible(std::uint32_t p, std::size_t degree);

}  // namespace ringlab
