#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

/// Parsed form of the textual construction language, e.g.
/// `prod(gf(3,2,x^2+1), gf(3,2))` or `componentwise(frobenius, scale(4))`.
///
/// A node is one of
///   - a call `name(arg, ...)`,
///   - a list `[item, ...]` whose items are kept as raw (trimmed) text,
///   - an atom: any balanced text that is neither of the above
///     (numbers, polynomials, element labels such as `(1,0)`).
struct Expr {
  enum class Kind { Call, List, Atom };

  Kind kind = Kind::Atom;
  std::string text;  ///< call name, or atom text
  std::vector<Expr> args;          ///< call arguments
  std::vector<std::string> items;  ///< list items

  static Expr parse(std::string_view source);

  bool is_call(std::string_view name) const { return kind == Kind::Call && text == name; }
  bool is_atom(std::string_view value) const { return kind == Kind::Atom && text == value; }

  /// Integer value of an atom; throws ParseError otherwise.
  std::int64_t as_integer() const;
  const Expr& arg(std::size_t i) const;

  /// Canonical rendering: no whitespace, ", " never used.
  std::string to_string() const;
};

/// Strips surrounding whitespace.
std::string trim(std::string_view s);

/// Splits at top-level commas, respecting (), [] nesting.
std::vector<std::string> split_top_level(std::string_view s);

}  // namespace ringlab
