#pragma once

#include "schurkit/exactmath.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

namespace schurkit {

/// Normal order of a monomial.
///
/// FHE: f^(a) binom(H2,b) e^(c).  EHF: e^(a) binom(H1,b) f^(c).
/// The two are exchanged by the e<->f, H1<->H2 automorphism.
enum class Flavor { FHE, EHF };

enum class Letter { e, f };

std::string_view name(Flavor f);
std::string_view name(Letter l);

/// Divided power written on the left of a normal monomial (f for FHE).
Letter left_letter(Flavor f);
/// Divided power written on the right (e for FHE).
Letter right_letter(Flavor f);
/// The Cartan symbol the normal form is written in (H2 for FHE).
Var primary_var(Flavor f);
/// The other Cartan symbol; only present in untruncated (U-mode) elements.
Var aux_var(Flavor f);

/// Sign s with g * P(H) = P(H + s) * g, for H one of H1, H2.
int commutation_shift(Letter g, Var h);

/// left^(a) binom(primary,b) binom(aux,b_aux) right^(c).
///
/// In the truncated algebra aux is eliminated, so b_aux is always 0 there.
struct NormalMonomial {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
  unsigned b_aux = 0;

  unsigned degree() const { return a + b + c + b_aux; }
  unsigned height() const { return a + c; }

  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

/// Finite rational combination of normal monomials of one flavor.
///
/// Terms are kept in lexicographic (a,b,c,b_aux) order and never hold a zero
/// coefficient, so the zero element is the empty map and equality is
/// term-wise.
class Element {
 public:
  using TermMap = std::map<NormalMonomial, Rational>;

  explicit Element(Flavor flavor = Flavor::FHE) : flavor_(flavor) {}

  static Element scalar(Flavor flavor, const Rational& s);
  static Element one(Flavor flavor) { return scalar(flavor, 1); }
  static Element monomial(Flavor flavor, NormalMonomial m, const Rational& coeff = 1);

  Flavor flavor() const { return flavor_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const NormalMonomial& m) const;

  /// Every coefficient has denominator 1.
  bool is_integral() const;
  /// No term carries the auxiliary Cartan symbol.
  bool is_single_variable() const;

  void add_term(const NormalMonomial& m, const Rational& coeff);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& s);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator-(Element x) { return x *= Rational(-1); }
  friend Element operator*(Element x, const Rational& s) { return x *= s; }
  friend Element operator*(const Rational& s, Element x) { return x *= s; }
  friend bool operator==(const Element& x, const Element& y) {
    return x.flavor_ == y.flavor_ && x.terms_ == y.terms_;
  }

 private:
  void check_flavor(const Element& other) const;

  Flavor flavor_;
  TermMap terms_;
};

enum class Symbol { e, f, H1, H2, h };

/// One of the generators e, f, H1, H2 or h = H1 - H2.
Element generator(Flavor flavor, Symbol s);
/// e^(m) or f^(m).
Element divided_power(Flavor flavor, Letter g, unsigned m);
/// binom(H, m) for H = H1 or H2.
Element binomial(Flavor flavor, Var h, unsigned m);

/// f^(i) f^(j) = binom(i+j, i) f^(i+j); returns the coefficient and exponent.
std::pair<Integer, unsigned> fdiv_merge(unsigned i, unsigned j);

/// Q with g * P(H) = Q(H) * g. P must be in H1 or H2.
IVPoly commute_poly_left(Letter g, const IVPoly& p);

/// e * f^(k) = f^(k) e + f^(k-1) (H1 - H2 - k + 1), as an FHE element of
/// the enveloping algebra. Requires k >= 1.
Element commute_e_past_fdiv(unsigned k);

/// Product in the enveloping algebra, straightened into the normal order of
/// the operands' flavor. Throws std::invalid_argument on a flavor mismatch.
Element mul(const Element& x, const Element& y);

Element power(const Element& x, unsigned n);

/// The automorphism e<->f, H1<->H2. Maps an FHE element onto the EHF element
/// with identical terms, and back.
Element symmetry(const Element& x);

/// Substitutes aux = d - primary (H1 + H2 = d), leaving a single-variable
/// element.
Element collapse(const Element& x, long d);

namespace testing {

/// While alive, the e/f commutator rule used by the straightener carries the
/// wrong sign on its H1 - H2 part. Exists so checkers can be shown to fail.
class ScopedCommutatorSignFault {
 public:
  ScopedCommutatorSignFault();
  ~ScopedCommutatorSignFault();
  ScopedCommutatorSignFault(const ScopedCommutatorSignFault&) = delete;
  ScopedCommutatorSignFault& operator=(const ScopedCommutatorSignFault&) = delete;

 private:
  bool previous_;
};

bool commutator_sign_fault_active();

}  // namespace testing

}  // namespace schurkit
