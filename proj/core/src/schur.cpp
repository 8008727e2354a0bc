#include "schurkit/schur.hpp"

#include "schurkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schurkit {

std::vector<NormalMonomial> basis(const SchurContext& ctx) {
  std::vector<NormalMonomial> out;
  out.reserve(dimension(ctx.d).get_ui());
  for (unsigned a = 0; a <= ctx.d; ++a) {
    for (unsigned b = 0; a + b <= ctx.d; ++b) {
      for (unsigned c = 0; a + b + c <= ctx.d; ++c) out.push_back({a, b, c, 0});
    }
  }
  return out;
}

Integer dimension(unsigned d) { return binom(long(d) + 3, 3); }

std::size_t basis_index(const NormalMonomial& m, unsigned d) {
  if (m.b_aux != 0 || m.a + m.b + m.c > d) throw std::out_of_range("monomial is not in the truncated basis");
  auto triangle = [](std::size_t r) { return (r + 1) * (r + 2) / 2; };
  std::size_t index = 0;
  for (unsigned a = 0; a < m.a; ++a) index += triangle(d - a);
  for (unsigned b = 0; b < m.b; ++b) index += d - m.a - b + 1;
  return index + m.c;
}

Element reduce_monomial(unsigned a, unsigned b, unsigned c, const SchurContext& ctx) {
  Element out(ctx.flavor);
  const long degree = long(a) + b + c;
  if (degree <= long(ctx.d)) {
    out.add_term({a, b, c, 0}, 1);
    return out;
  }
  const long s = degree - long(ctx.d);
  const long top = std::min(a, c);
  for (long k = s; k <= top; ++k) {
    Integer coeff = binom(k - 1, s - 1) * binom(long(b) + k, k);
    if ((k - s) % 2 == 1) coeff = -coeff;
    const NormalMonomial m{unsigned(a - k), unsigned(b + k), unsigned(c - k), 0};
    if (m.degree() > ctx.d) throw std::logic_error("reduction produced a term above the truncation degree");
    out.add_term(m, Rational(coeff));
  }
  return out;
}

Element normalize(const Element& x, const SchurContext& ctx) {
  if (x.flavor() != ctx.flavor) throw std::invalid_argument("normalize: flavor mismatch");
  const Element single = collapse(x, long(ctx.d));
  Element out(ctx.flavor);
  for (const auto& [m, coeff] : single.terms()) {
    if (m.degree() <= ctx.d) {
      out.add_term(m, coeff);
      continue;
    }
    const Element reduced = reduce_monomial(m.a, m.b, m.c, ctx);
    for (const auto& [r, rc] : reduced.terms()) out.add_term(r, coeff * rc);
  }
  return out;
}

Element mul_bd(const Element& x, const Element& y, const SchurContext& ctx) {
  if (x.flavor() != ctx.flavor || y.flavor() != ctx.flavor) throw std::invalid_argument("mul_bd: flavor mismatch");
  return normalize(mul(x, y), ctx);
}

StructureTable structure_constants(const SchurContext& ctx) {
  StructureTable table;
  table.d = ctx.d;
  table.flavor = ctx.flavor;
  table.basis = basis(ctx);
  const std::size_t n = table.basis.size();
  table.products.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element left = Element::monomial(ctx.flavor, table.basis[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Element prod = mul_bd(left, Element::monomial(ctx.flavor, table.basis[j]), ctx);
      auto& row = table.products[i * n + j];
      row.reserve(prod.size());
      // Term order in an Element is the basis order, so k comes out sorted.
      for (const auto& [m, coeff] : prod.terms()) row.emplace_back(basis_index(m, ctx.d), coeff);
    }
  }
  return table;
}

std::vector<Rational> coordinates(const Element& x, const SchurContext& ctx) {
  std::vector<Rational> out(dimension(ctx.d).get_ui());
  for (const auto& [m, coeff] : x.terms()) out[basis_index(m, ctx.d)] = coeff;
  return out;
}

Element from_coordinates(const std::vector<Rational>& coords, const SchurContext& ctx) {
  const auto monos = basis(ctx);
  if (coords.size() != monos.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  Element out(ctx.flavor);
  for (std::size_t i = 0; i < monos.size(); ++i) out.add_term(monos[i], coords[i]);
  return out;
}

namespace {

// Coefficients of binom(H,b) over H^k.
std::vector<Rational> binomial_in_powers(unsigned b) {
  std::vector<Rational> roots;
  for (unsigned i = 0; i < b; ++i) roots.emplace_back(i);
  std::vector<Rational> c = Polynomial::from_roots(roots).coeffs();
  const Integer bf = factorial(b);
  for (auto& x : c) x /= bf;
  return c;
}

// Coefficients of H^k over binom(H,b).
std::vector<Integer> power_in_binomials(unsigned k) {
  std::vector<Integer> values;
  for (unsigned n = 0; n <= k; ++n) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), n, k);
    values.push_back(v);
  }
  std::vector<Integer> c = ivp_from_values(Var::H2, values).coeffs();
  c.resize(k + 1);
  return c;
}

// Sign of h when the flavor's Cartan symbol is written as (d + sign*h)/2.
int h_sign(Flavor f) { return f == Flavor::FHE ? -1 : 1; }

}  // namespace

std::vector<Rational> to_power_basis(const Element& x, const SchurContext& ctx) {
  const Element y = normalize(x, ctx);
  std::vector<Rational> out(dimension(ctx.d).get_ui());
  for (const auto& [m, coeff] : y.terms()) {
    const Rational scale = coeff / (factorial(m.a) * factorial(m.c));
    const auto powers = binomial_in_powers(m.b);
    for (unsigned k = 0; k < powers.size(); ++k) {
      if (powers[k] != 0) out[basis_index({m.a, k, m.c, 0}, ctx.d)] += scale * powers[k];
    }
  }
  return out;
}

Element from_power_basis(const std::vector<Rational>& coeffs, const SchurContext& ctx) {
  const auto monos = basis(ctx);
  if (coeffs.size() != monos.size()) throw std::invalid_argument("coefficient vector has the wrong length");
  Element out(ctx.flavor);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const NormalMonomial& m = monos[i];
    const Rational scale = coeffs[i] * factorial(m.a) * factorial(m.c);
    const auto binoms = power_in_binomials(m.b);
    for (unsigned b = 0; b < binoms.size(); ++b) out.add_term({m.a, b, m.c, 0}, scale * binoms[b]);
  }
  return out;
}

std::vector<Rational> to_h_basis(const Element& x, const SchurContext& ctx) {
  const auto power = to_power_basis(x, ctx);
  const auto monos = basis(ctx);
  const int sign = h_sign(ctx.flavor);
  std::vector<Rational> out(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (power[i] == 0) continue;
    const NormalMonomial& m = monos[i];
    // H^k = ((d + sign*h)/2)^k = 2^-k sum_j binom(k,j) d^(k-j) sign^j h^j
    const unsigned k = m.b;
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
    for (unsigned j = 0; j <= k; ++j) {
      Integer dk;
      mpz_ui_pow_ui(dk.get_mpz_t(), ctx.d, k - j);
      Rational term = power[i] * binom(long(k), long(j)) * dk / two_k;
      if (sign < 0 && j % 2 == 1) term = -term;
      out[basis_index({m.a, j, m.c, 0}, ctx.d)] += term;
    }
  }
  return out;
}

Element from_h_basis(const std::vector<Rational>& coeffs, const SchurContext& ctx) {
  const auto monos = basis(ctx);
  if (coeffs.size() != monos.size()) throw std::invalid_argument("coefficient vector has the wrong length");
  const int sign = h_sign(ctx.flavor);
  std::vector<Rational> power(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const NormalMonomial& m = monos[i];
    // h^j = sign^j (2H - d)^j = sign^j sum_t binom(j,t) 2^t H^t (-d)^(j-t)
    const unsigned j = m.b;
    for (unsigned t = 0; t <= j; ++t) {
      Integer two_t, dt;
      mpz_ui_pow_ui(two_t.get_mpz_t(), 2, t);
      mpz_ui_pow_ui(dt.get_mpz_t(), ctx.d, j - t);
      Rational term = coeffs[i] * binom(long(j), long(t)) * two_t * dt;
      if ((j - t) % 2 == 1) term = -term;
      if (sign < 0 && j % 2 == 1) term = -term;
      power[basis_index({m.a, t, m.c, 0}, ctx.d)] += term;
    }
  }
  return from_power_basis(power, ctx);
}

Polynomial min_poly(const Element& x, const SchurContext& ctx) {
  // The algebra is unital, so a polynomial kills left multiplication by x
  // exactly when it kills x itself; the Krylov sequence of the unit vector
  // under left multiplication, x^k = x * x^(k-1), finds it.
  const Element y = normalize(x, ctx);
  DependencyFinder finder;
  Element power = Element::one(ctx.flavor);
  for (;;) {
    SparseVector v;
    for (const auto& [m, coeff] : power.terms()) v.emplace_back(basis_index(m, ctx.d), coeff);
    if (auto relation = finder.add(std::move(v))) return Polynomial(std::move(*relation));
    power = mul_bd(y, power, ctx);
  }
}

// ---------------------------------------------------------------------------
// Relations

namespace {

struct Builder {
  Flavor flavor;

  Element e() const { return generator(flavor, Symbol::e); }
  Element f() const { return generator(flavor, Symbol::f); }
  Element h() const { return generator(flavor, Symbol::h); }
  Element H1() const { return generator(flavor, Symbol::H1); }
  Element H2() const { return generator(flavor, Symbol::H2); }
  Element k(const Rational& s) const { return Element::scalar(flavor, s); }
  Element bin(Var v, unsigned m) const { return binomial(flavor, v, m); }

  static Element comm(const Element& x, const Element& y) { return mul(x, y) - mul(y, x); }

  // prod_{i} (x - roots[i])
  Element product_of_shifts(const Element& x, const std::vector<long>& roots) const {
    Element acc = k(1);
    for (long r : roots) acc = mul(acc, x - k(r));
    return acc;
  }
};

std::vector<long> range_roots(long lo, long hi, long step) {
  std::vector<long> r;
  for (long v = lo; v <= hi; v += step) r.push_back(v);
  return r;
}

}  // namespace

std::vector<Relation> sl2_relations(Flavor flavor, unsigned d_source) {
  const Builder g{flavor};
  const long d = d_source;
  return {
      {"sl2: he - eh = 2e", Builder::comm(g.h(), g.e()) - Rational(2) * g.e()},
      {"sl2: ef - fe = h", Builder::comm(g.e(), g.f()) - g.h()},
      {"sl2: hf - fh = -2f", Builder::comm(g.h(), g.f()) + Rational(2) * g.f()},
      {"sl2: (h+" + std::to_string(d) + ")...(h-" + std::to_string(d) + ") = 0",
       g.product_of_shifts(g.h(), range_roots(-d, d, 2))},
  };
}

std::vector<Relation> defining_relations(const SchurContext& ctx) {
  const Builder g{ctx.flavor};
  const long d = ctx.d;
  const auto d_str = std::to_string(d);
  std::vector<Relation> out;

  // U(gl2) together with H1 + H2 = d and the truncation relation.
  out.push_back({"gl2: H1H2 = H2H1", Builder::comm(g.H1(), g.H2())});
  out.push_back({"gl2: H1e - eH1 = e", Builder::comm(g.H1(), g.e()) - g.e()});
  out.push_back({"gl2: H1f - fH1 = -f", Builder::comm(g.H1(), g.f()) + g.f()});
  out.push_back({"gl2: H2e - eH2 = -e", Builder::comm(g.H2(), g.e()) + g.e()});
  out.push_back({"gl2: H2f - fH2 = f", Builder::comm(g.H2(), g.f()) - g.f()});
  out.push_back({"gl2: ef - fe = H1 - H2", Builder::comm(g.e(), g.f()) - (g.H1() - g.H2())});
  out.push_back({"H1 + H2 = " + d_str, g.H1() + g.H2() - g.k(d)});
  out.push_back({"H1(H1-1)...(H1-" + d_str + ") = 0", g.product_of_shifts(g.H1(), range_roots(0, d, 1))});
  out.push_back({"H2(H2-1)...(H2-" + d_str + ") = 0", g.product_of_shifts(g.H2(), range_roots(0, d, 1))});

  for (auto& r : sl2_relations(ctx.flavor, ctx.d)) out.push_back(std::move(r));

  out.push_back({"(e,f,H1): H1e - eH1 = e", Builder::comm(g.H1(), g.e()) - g.e()});
  out.push_back({"(e,f,H1): ef - fe = 2H1 - " + d_str, Builder::comm(g.e(), g.f()) - (Rational(2) * g.H1() - g.k(d))});
  out.push_back({"(e,f,H1): H1f - fH1 = -f", Builder::comm(g.H1(), g.f()) + g.f()});
  out.push_back({"(e,f,H1): H1(H1-1)...(H1-" + d_str + ") = 0",
                 g.product_of_shifts(g.H1(), range_roots(0, d, 1))});
  out.push_back({"(e,f,H2): H2e - eH2 = -e", Builder::comm(g.H2(), g.e()) + g.e()});
  out.push_back({"(e,f,H2): ef - fe = " + d_str + " - 2H2", Builder::comm(g.e(), g.f()) - (g.k(d) - Rational(2) * g.H2())});
  out.push_back({"(e,f,H2): H2f - fH2 = f", Builder::comm(g.H2(), g.f()) - g.f()});
  out.push_back({"(e,f,H2): H2(H2-1)...(H2-" + d_str + ") = 0",
                 g.product_of_shifts(g.H2(), range_roots(0, d, 1))});

  // binom(H1,b1) binom(H2,b2) = 0 for b1 + b2 in {d+1, d+2}.
  for (unsigned total = ctx.d + 1; total <= ctx.d + 2; ++total) {
    for (unsigned b1 = 0; b1 <= total; ++b1) {
      out.push_back({"binom(H1," + std::to_string(b1) + ")binom(H2," + std::to_string(total - b1) + ") = 0",
                     mul(g.bin(Var::H1, b1), g.bin(Var::H2, total - b1))});
    }
  }

  // f^a binom(H2,b) = 0 = binom(H2,b) e^a and e^a binom(H1,b) = 0 = binom(H1,b) f^a for a + b = d+1.
  for (unsigned a = 0; a <= ctx.d + 1; ++a) {
    const unsigned b = ctx.d + 1 - a;
    const auto tag = "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
    const Element fa = power(g.f(), a);
    const Element ea = power(g.e(), a);
    out.push_back({"f^a binom(H2,b) = 0 " + tag, mul(fa, g.bin(Var::H2, b))});
    out.push_back({"binom(H2,b) e^a = 0 " + tag, mul(g.bin(Var::H2, b), ea)});
    out.push_back({"e^a binom(H1,b) = 0 " + tag, mul(ea, g.bin(Var::H1, b))});
    out.push_back({"binom(H1,b) f^a = 0 " + tag, mul(g.bin(Var::H1, b), fa)});
  }

  // (H1-H2) binom(H2,b) = (d-2b) binom(H2,b) - (2b+2) binom(H2,b+1), and the mirror.
  for (unsigned b = 0; b <= ctx.d; ++b) {
    const long lin = d - 2 * long(b);
    const long next = 2 * long(b) + 2;
    const auto tag = "(b=" + std::to_string(b) + ")";
    out.push_back({"(H1-H2)binom(H2,b) identity " + tag,
                   mul(g.H1() - g.H2(), g.bin(Var::H2, b)) -
                       (Rational(lin) * g.bin(Var::H2, b) - Rational(next) * g.bin(Var::H2, b + 1))});
    out.push_back({"(H2-H1)binom(H1,b) identity " + tag,
                   mul(g.H2() - g.H1(), g.bin(Var::H1, b)) -
                       (Rational(lin) * g.bin(Var::H1, b) - Rational(next) * g.bin(Var::H1, b + 1))});
  }
  return out;
}

bool RelationReport::all_hold() const {
  for (const auto& r : results) {
    if (!r.holds()) return false;
  }
  return true;
}

RelationReport check_relations(const SchurContext& ctx, const std::vector<Relation>& extra) {
  RelationReport report;
  auto run = [&](const Relation& r) { report.results.push_back({r.name, normalize(r.difference, ctx)}); };
  for (const auto& r : defining_relations(ctx)) run(r);
  for (const auto& r : extra) run(r);
  return report;
}

bool quotient_map_check(const SchurContext& ctx) {
  for (const auto& r : sl2_relations(ctx.flavor, ctx.d + 2)) {
    if (!normalize(r.difference, ctx).is_zero()) return false;
  }
  return true;
}

}  // namespace schurkit
