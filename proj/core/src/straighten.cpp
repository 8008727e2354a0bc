#include "schurkit/straighten.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace schurkit {

std::string_view name(Flavor f) { return f == Flavor::FHE ? "fhe" : "ehf"; }
std::string_view name(Letter l) { return l == Letter::e ? "e" : "f"; }

Letter left_letter(Flavor f) { return f == Flavor::FHE ? Letter::f : Letter::e; }
Letter right_letter(Flavor f) { return f == Flavor::FHE ? Letter::e : Letter::f; }
Var primary_var(Flavor f) { return f == Flavor::FHE ? Var::H2 : Var::H1; }
Var aux_var(Flavor f) { return f == Flavor::FHE ? Var::H1 : Var::H2; }

int commutation_shift(Letter g, Var h) {
  // e P(H1) = P(H1-1) e, e P(H2) = P(H2+1) e, f P(H1) = P(H1+1) f, f P(H2) = P(H2-1) f
  if (h == Var::h) throw std::invalid_argument("commutation_shift: expected H1 or H2");
  const bool is_h1 = h == Var::H1;
  if (g == Letter::e) return is_h1 ? -1 : 1;
  return is_h1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Element

Element Element::scalar(Flavor flavor, const Rational& s) {
  Element x(flavor);
  x.add_term({}, s);
  return x;
}

Element Element::monomial(Flavor flavor, NormalMonomial m, const Rational& coeff) {
  Element x(flavor);
  x.add_term(m, coeff);
  return x;
}

Rational Element::coefficient(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::is_integral() const {
  for (const auto& [m, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool Element::is_single_variable() const {
  for (const auto& [m, c] : terms_) {
    if (m.b_aux != 0) return false;
  }
  return true;
}

void Element::add_term(const NormalMonomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void Element::check_flavor(const Element& other) const {
  if (flavor_ != other.flavor_) throw std::invalid_argument("element flavor mismatch");
}

Element& Element::operator+=(const Element& other) {
  check_flavor(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_flavor(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Generators

Element divided_power(Flavor flavor, Letter g, unsigned m) {
  NormalMonomial mono;
  if (g == left_letter(flavor)) {
    mono.a = m;
  } else {
    mono.c = m;
  }
  return Element::monomial(flavor, mono);
}

Element binomial(Flavor flavor, Var h, unsigned m) {
  if (h == Var::h) throw std::invalid_argument("binomial: expected H1 or H2");
  NormalMonomial mono;
  if (h == primary_var(flavor)) {
    mono.b = m;
  } else {
    mono.b_aux = m;
  }
  return Element::monomial(flavor, mono);
}

Element generator(Flavor flavor, Symbol s) {
  switch (s) {
    case Symbol::e: return divided_power(flavor, Letter::e, 1);
    case Symbol::f: return divided_power(flavor, Letter::f, 1);
    case Symbol::H1: return binomial(flavor, Var::H1, 1);
    case Symbol::H2: return binomial(flavor, Var::H2, 1);
    case Symbol::h: return binomial(flavor, Var::H1, 1) - binomial(flavor, Var::H2, 1);
  }
  throw std::invalid_argument("unknown generator");
}

std::pair<Integer, unsigned> fdiv_merge(unsigned i, unsigned j) { return {binom(long(i + j), long(i)), i + j}; }

IVPoly commute_poly_left(Letter g, const IVPoly& p) { return ivp_shift(p, commutation_shift(g, p.var())); }

// ---------------------------------------------------------------------------
// Straightening

namespace testing {
namespace {
std::atomic<bool> sign_fault{false};
}

ScopedCommutatorSignFault::ScopedCommutatorSignFault() : previous_(sign_fault.exchange(true)) {}
ScopedCommutatorSignFault::~ScopedCommutatorSignFault() { sign_fault.store(previous_); }
bool commutator_sign_fault_active() { return sign_fault.load(); }

}  // namespace testing

namespace {

struct Cartan {
  Var primary;
  Var aux;
};

Cartan cartan(Flavor f) { return {primary_var(f), aux_var(f)}; }

// Coefficients of binom(H,b) moved past `times` copies of g in the given
// direction: +1 for g*P(H) = P(H+s)*g, -1 for P(H)*g = g*P(H-s).
const std::vector<Integer>& moved_binomial(unsigned b, Letter g, Var h, long times) {
  return shifted_binomial(b, times * commutation_shift(g, h));
}

std::vector<Integer> product(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  return ivp_product(IVPoly(Var::H2, x), IVPoly(Var::H2, y)).coeffs();
}

std::vector<Integer> unit_binomial(unsigned b) {
  std::vector<Integer> v(b + 1);
  v[b] = 1;
  return v;
}

// Adds coeff * left^(a) [P-part x A-part] right^(c) to out.
void add_separable(Element& out, unsigned a, unsigned c, const Rational& coeff, const std::vector<Integer>& p_part,
                   const std::vector<Integer>& a_part) {
  for (std::size_t k = 0; k < p_part.size(); ++k) {
    if (p_part[k] == 0) continue;
    for (std::size_t l = 0; l < a_part.size(); ++l) {
      if (a_part[l] == 0) continue;
      out.add_term({a, unsigned(k), c, unsigned(l)}, coeff * p_part[k] * a_part[l]);
    }
  }
}

// R * L^(k) = L^(k) R + L^(k-1) Q  with Q = H_R - H_L - k + 1, where
// H_R is H1 for R = e and H2 for R = f (and H_L the other one).
struct CommutatorPart {
  Integer constant;
  Integer h1;
  Integer h2;
};

CommutatorPart commutator_part(Letter right, unsigned k) {
  CommutatorPart q{Integer(1) - Integer(k), 0, 0};
  const int sign = testing::commutator_sign_fault_active() ? -1 : 1;
  if (right == Letter::e) {
    q.h1 = sign;
    q.h2 = -sign;
  } else {
    q.h1 = -sign;
    q.h2 = sign;
  }
  return q;
}

// right * x for a normal-ordered x.
Element left_mul_by_right_letter(const Element& x) {
  const Flavor flavor = x.flavor();
  const Letter right = right_letter(flavor);
  const Cartan h = cartan(flavor);
  Element out(flavor);
  for (const auto& [m, coeff] : x.terms()) {
    // R binom(P,b) binom(A,b_aux) = binom(P+s,b) binom(A+s',b_aux) R, then R R^(c) = (c+1) R^(c+1).
    add_separable(out, m.a, m.c + 1, coeff * (m.c + 1), moved_binomial(m.b, right, h.primary, 1),
                  moved_binomial(m.b_aux, right, h.aux, 1));
    if (m.a == 0) continue;
    const CommutatorPart q = commutator_part(right, m.a);
    const Integer& q_primary = h.primary == Var::H1 ? q.h1 : q.h2;
    const Integer& q_aux = h.primary == Var::H1 ? q.h2 : q.h1;
    // Q binom(P,b) binom(A,b') with binom(X,1) binom(X,b) = b binom(X,b) + (b+1) binom(X,b+1).
    NormalMonomial base{m.a - 1, m.b, m.c, m.b_aux};
    out.add_term(base, coeff * q.constant);
    if (q_primary != 0) {
      out.add_term(base, coeff * q_primary * m.b);
      out.add_term({base.a, base.b + 1, base.c, base.b_aux}, coeff * q_primary * (m.b + 1));
    }
    if (q_aux != 0) {
      out.add_term(base, coeff * q_aux * m.b_aux);
      out.add_term({base.a, base.b, base.c, base.b_aux + 1}, coeff * q_aux * (m.b_aux + 1));
    }
  }
  return out;
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

using MemoKey = std::tuple<Flavor, unsigned, unsigned, bool>;

// Normal form of right^(c) left^(a), peeling one plain right letter at a time:
// right^(c) = (1/c) right * right^(c-1).
const Element& right_left_normal(Flavor flavor, unsigned c, unsigned a) {
  static std::map<MemoKey, Element> memo;
  const MemoKey key{flavor, c, a, testing::commutator_sign_fault_active()};
  {
    std::lock_guard lock(memo_mutex());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Element result(flavor);
  if (c == 0 || a == 0) {
    result = Element::monomial(flavor, {a, 0, c, 0});
  } else {
    result = left_mul_by_right_letter(right_left_normal(flavor, c - 1, a));
    result *= make_rational(1, c);
  }
  std::lock_guard lock(memo_mutex());
  return memo.emplace(key, std::move(result)).first->second;
}

// m1 * m2 for normal monomials m1, m2 of the given flavor.
void mul_monomials(Element& out, Flavor flavor, const NormalMonomial& m1, const NormalMonomial& m2,
                   const Rational& coeff) {
  const Letter left = left_letter(flavor);
  const Letter right = right_letter(flavor);
  const Cartan h = cartan(flavor);
  const Element& middle = right_left_normal(flavor, m1.c, m2.a);
  for (const auto& [n, cn] : middle.terms()) {
    // L^(a1) M1 [L^(i) N R^(j)] M2 R^(c2) = L^(a1) L^(i) M1' N M2' R^(j) R^(c2)
    // where M1' = M1 moved right past L^(i) and M2' = M2 moved left past R^(j).
    const long i = n.a;
    const long j = n.c;
    std::vector<Integer> p_part =
        product(product(moved_binomial(m1.b, left, h.primary, -i), unit_binomial(n.b)),
                moved_binomial(m2.b, right, h.primary, j));
    std::vector<Integer> a_part =
        product(product(moved_binomial(m1.b_aux, left, h.aux, -i), unit_binomial(n.b_aux)),
                moved_binomial(m2.b_aux, right, h.aux, j));
    const auto [left_coeff, left_exp] = fdiv_merge(m1.a, n.a);
    const auto [right_coeff, right_exp] = fdiv_merge(n.c, m2.c);
    const Rational scale = coeff * cn * left_coeff * right_coeff;
    add_separable(out, left_exp, right_exp, scale, p_part, a_part);
  }
}

}  // namespace

Element commute_e_past_fdiv(unsigned k) {
  if (k == 0) throw std::invalid_argument("commute_e_past_fdiv: k must be positive");
  return left_mul_by_right_letter(divided_power(Flavor::FHE, Letter::f, k));
}

Element mul(const Element& x, const Element& y) {
  if (x.flavor() != y.flavor()) throw std::invalid_argument("mul: flavor mismatch");
  Element out(x.flavor());
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) mul_monomials(out, x.flavor(), m1, m2, c1 * c2);
  }
  return out;
}

Element power(const Element& x, unsigned n) {
  Element acc = Element::one(x.flavor());
  for (unsigned i = 0; i < n; ++i) acc = mul(acc, x);
  return acc;
}

Element symmetry(const Element& x) {
  Element out(x.flavor() == Flavor::FHE ? Flavor::EHF : Flavor::FHE);
  for (const auto& [m, c] : x.terms()) out.add_term(m, c);
  return out;
}

Element collapse(const Element& x, long d) {
  Element out(x.flavor());
  for (const auto& [m, c] : x.terms()) {
    if (m.b_aux == 0) {
      out.add_term(m, c);
      continue;
    }
    const std::vector<Integer> poly = product(unit_binomial(m.b), complemented_binomial(m.b_aux, d));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (poly[k] != 0) out.add_term({m.a, unsigned(k), m.c, 0}, c * poly[k]);
    }
  }
  return out;
}

}  // namespace schurkit
