#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schurkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

bool is_integral(const Rational& q);

/// n(n-1)...(n-k+1)/k! for k >= 0, and 0 for k < 0. Any integer n is allowed.
Integer binom(const Integer& n, long k);
Integer binom(long n, long k);

Integer factorial(unsigned long n);

/// Which Cartan symbol an integer-valued polynomial is written in.
enum class Var { H1, H2, h };

std::string_view name(Var v);

/// Integer-valued polynomial in one variable, stored over the basis binom(H, b).
///
/// coeffs()[b] is the coefficient of binom(H, b). Trailing zeros are always
/// trimmed, so the zero polynomial has an empty coefficient list and
/// degree() == -1.
class IVPoly {
 public:
  explicit IVPoly(Var v = Var::H2) : var_(v) {}
  IVPoly(Var v, std::vector<Integer> coeffs);

  static IVPoly constant(Var v, const Integer& c);
  static IVPoly binomial(Var v, std::size_t b, const Integer& coeff = 1);

  Var var() const { return var_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t b) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Integer evaluate(const Integer& n) const;

  IVPoly& operator+=(const IVPoly& other);
  IVPoly& operator-=(const IVPoly& other);
  IVPoly& operator*=(const Integer& s);

  friend IVPoly operator+(IVPoly a, const IVPoly& b) { return a += b; }
  friend IVPoly operator-(IVPoly a, const IVPoly& b) { return a -= b; }
  friend IVPoly operator*(IVPoly a, const Integer& s) { return a *= s; }
  friend bool operator==(const IVPoly& a, const IVPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();
  void check_same_var(const IVPoly& other) const;

  Var var_;
  std::vector<Integer> coeffs_;
};

/// Unique IVPoly of degree <= values.size()-1 taking values[n] at H = n.
/// The binomial coefficients are the forward differences at 0.
IVPoly ivp_from_values(Var v, std::span<const Integer> values);

/// Product in the binomial basis. Throws std::invalid_argument when the
/// variables differ.
IVPoly ivp_product(const IVPoly& p, const IVPoly& q);

/// P(H + s), built from repeated Pascal steps.
IVPoly ivp_shift(const IVPoly& p, long s);

/// P(d - H).
IVPoly ivp_complement(const IVPoly& p, long d);

/// binom(H,i) * binom(H,j) = sum_k c_k binom(H,k); returns c indexed by k
/// (entries below max(i,j) are zero). Cached; safe to call concurrently.
const std::vector<Integer>& binomial_product(std::size_t i, std::size_t j);

/// Coefficients of binom(H + s, b) over binom(H, k), k = 0..b. Cached.
const std::vector<Integer>& shifted_binomial(std::size_t b, long s);

/// Coefficients of binom(d - H, b) over binom(H, k). Cached.
const std::vector<Integer>& complemented_binomial(std::size_t b, long d);

/// Dense univariate polynomial in T with rational coefficients, low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  /// prod (T - r) over the given roots.
  static Polynomial from_roots(std::span<const Rational> roots);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Rational evaluate(const Rational& t) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// e.g. "T^3 - 4*T"; the zero polynomial renders as "0".
  std::string to_string(std::string_view var = "T") const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace schurkit
