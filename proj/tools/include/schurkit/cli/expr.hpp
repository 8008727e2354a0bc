#pragma once

#include "schurkit/schur.hpp"
#include "schurkit/straighten.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schurkit::cli {

/// Expression tree for inputs such as "e*f - f*e" or "F(2)*binom(H2,1)*E(1)".
///
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" NAT)?
///   atom   := e | f | h | H1 | H2 | E(NAT) | F(NAT) | binom(H1|H2, NAT)
///           | INT ("/" NAT)? | "(" expr ")"
///
/// A difference a - b is stored as Sum(a, Neg(b)).
struct Expr {
  enum class Kind { sum, neg, product, power, scalar, generator, divided, binomial };

  Kind kind = Kind::scalar;
  std::vector<Expr> children;
  Rational value;            // scalar
  Symbol symbol = Symbol::e; // generator
  Letter letter = Letter::e; // divided
  Var var = Var::H1;         // binomial
  unsigned n = 0;            // exponent, divided-power or binomial index
};

/// Compact prefix form, e.g. "Sum(Prod(e,f),Neg(Prod(f,e)))".
std::string to_string(const Expr& x);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);

  /// Byte offset of the offending token.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

Expr parse(std::string_view input);

/// Evaluates the tree in the enveloping algebra of the given flavor. Plain
/// powers become divided powers times factorials (f^2 = 2*F(2)).
Element lower(const Expr& x, Flavor flavor);

/// Evaluates in the truncated algebra, reducing after every product.
Element lower(const Expr& x, const SchurContext& ctx);

}  // namespace schurkit::cli
