#include "ringlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw PreconditionError("zero has no inverse mod " + std::to_string(p));
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m);
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.characteristic() != b.characteristic()) {
    throw PreconditionError("polynomials over different prime fields");
  }
}

}  // namespace

FpPoly::FpPoly(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::int64_t> coeffs) : FpPoly(p) {
  c_.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c_.push_back(reduce(v, p));
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::int64_t c, std::size_t degree) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator-() const {
  FpPoly out(*this);
  for (auto& c : out.c_) c = c == 0 ? 0 : p_ - c;
  return out;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly out(a.p_);
  out.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    out.c_[i] = static_cast<std::uint32_t>((std::uint64_t{a.coeff(i)} + b.coeff(i)) % a.p_);
  }
  out.trim();
  return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.p_;
    }
  }
  out.c_.assign(acc.begin(), acc.end());
  out.trim();
  return out;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  FpPoly out(*this);
  for (auto& v : out.c_) v = static_cast<std::uint32_t>(std::uint64_t{v} * (c % p_) % p_);
  out.trim();
  return out;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
  require_same_field(*this, divisor);
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  FpPoly quotient(p_);
  FpPoly rem(*this);
  if (rem.degree() < divisor.degree()) return {quotient, rem};
  quotient.c_.assign(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), 0);
  const std::uint32_t lead_inv = mod_inverse(divisor.leading(), p_);
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{rem.leading()} * lead_inv % p_);
    quotient.c_[shift] = factor;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) {
      const std::uint64_t sub = std::uint64_t{factor} * divisor.c_[j] % p_;
      rem.c_[shift + j] = static_cast<std::uint32_t>((rem.c_[shift + j] + p_ - sub) % p_);
    }
    rem.trim();
  }
  quotient.trim();
  return {quotient, rem};
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(leading(), p_));
}

FpPoly FpPoly::pow(std::uint64_t n) const {
  FpPoly result = constant(p_, 1);
  FpPoly base = *this;
  while (n > 0) {
    if ((n & 1U) != 0) result = result * base;
    base = base * base;
    n >>= 1U;
  }
  return result;
}

std::uint32_t FpPoly::evaluate(std::uint32_t value) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = (acc * value + *it) % p_;
  }
  return static_cast<std::uint32_t>(acc);
}

FpPoly FpPoly::substitute_affine(std::uint32_t a, std::uint32_t b) const {
  const FpPoly inner(p_, {static_cast<std::int64_t>(b), static_cast<std::int64_t>(a)});
  FpPoly acc(p_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * inner + constant(p_, *it);
  }
  return acc;
}

std::optional<FpPoly> FpPoly::find_factor() const {
  if (degree() < 1) throw PreconditionError("irreducibility is defined for degree >= 1");
  for (std::size_t d = 1; d <= static_cast<std::size_t>(degree()) / 2; ++d) {
    for (const FpPoly& candidate : monic_polynomials(p_, d)) {
      if ((*this % candidate).is_zero()) return candidate;
    }
  }
  return std::nullopt;
}

std::string FpPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::uint32_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<FpPoly> monic_polynomials(std::uint32_t p, std::size_t degree) {
  std::vector<FpPoly> out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= p;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::int64_t> coeffs(degree + 1, 0);
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < degree; ++i) {
      coeffs[i] = static_cast<std::int64_t>(rest % p);
      rest /= p;
    }
    coeffs[degree] = 1;
    out.emplace_back(p, std::move(coeffs));
  }
  return out;
}

FpPoly first_irreducible(std::uint32_t p, std::size_t degree) {
  for (const FpPoly& f : monic_polynomials(p, degree)) {
    if (f.is_irreducible()) return f;
  }
  throw ConstructionError("no irreducible polynomial found");  // unreachable for degree >= 1
}

namespace {

class PolyParser {
 public:
  PolyParser(std::uint32_t p, std::string_view text, char var) : p_(p), text_(text), var_(var) {}

  FpPoly parse() {
    FpPoly result = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + std::string(text_) + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  FpPoly expression() {
    FpPoly acc(p_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    FpPoly first = term();
    acc = negate ? -first : first;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(';
  }

  FpPoly term() {
    FpPoly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  FpPoly factor() {
    FpPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::uint64_t e = number();
      base = base.pow(e);
    }
    return base;
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  FpPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FpPoly inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == var_) {
      ++pos_;
      return FpPoly::x(p_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return FpPoly::constant(p_, static_cast<std::int64_t>(number() % p_));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::uint32_t p_;
  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

FpPoly FpPoly::parse(std::uint32_t p, std::string_view text, char var) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  return PolyParser(p, text, var).parse();
}

}  // namespace ringlab
