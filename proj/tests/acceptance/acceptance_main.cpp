// Runs the eight acceptance criteria with exact equality and prints one line
// per criterion. Exit status is 0 only if all of them pass.

#include "schurkit/oracle.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/straighten.hpp"
#include "support/random_elements.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace schurkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (cond || !ok) {
      ok = ok && cond;
      return;
    }
    ok = false;
    note = what;
  }
};

std::string at(unsigned d) { return "d=" + std::to_string(d); }

Element from_row(const std::vector<std::pair<std::size_t, Rational>>& row, const std::vector<NormalMonomial>& basis,
                 Flavor flavor) {
  Element x(flavor);
  for (const auto& [k, c] : row) x.add_term(basis[k], c);
  return x;
}

Outcome dimension_and_rank() {
  Outcome r;
  const long expected[] = {1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364, 455};
  for (unsigned d = 0; d <= 12; ++d) {
    const auto b = basis(SchurContext(d));
    r.require(long(b.size()) == expected[d] && dimension(d) == expected[d], "basis size " + at(d));
    const Rep rep = d <= 8 ? tensor_rep(d) : weight_rep(d);
    r.require(long(rank_of_images(b, rep)) == expected[d], "rank " + at(d));
  }
  r.note = r.ok ? "d=0..8 tensor rank, d=9..12 weight rank" : r.note;
  return r;
}

Outcome minimal_polynomials() {
  Outcome r;
  for (unsigned d = 1; d <= 8; ++d) {
    const SchurContext ctx(d);
    const Rep t = tensor_rep(d), w = weight_rep(d);
    const Polynomial cartan = cartan_min_poly(d), hpoly = h_min_poly(d);
    r.require(min_poly(generator(ctx.flavor, Symbol::H1), ctx) == cartan, "symbolic H1 " + at(d));
    r.require(min_poly(generator(ctx.flavor, Symbol::H2), ctx) == cartan, "symbolic H2 " + at(d));
    r.require(min_poly(generator(ctx.flavor, Symbol::h), ctx) == hpoly, "symbolic h " + at(d));
    for (const Rep* rep : {&t, &w}) {
      const std::string tag = std::string(name(rep->kind)) + " ";
      r.require(matrix_min_poly(rep->H1) == cartan, tag + "H1 " + at(d));
      r.require(matrix_min_poly(rep->H2) == cartan, tag + "H2 " + at(d));
      r.require(matrix_min_poly(rep->H1 - rep->H2) == hpoly, tag + "h " + at(d));
    }
  }
  r.note = r.ok ? "d=1..8, symbolic and both oracles agree" : r.note;
  return r;
}

Outcome presentations() {
  Outcome r;
  std::size_t count = 0;
  for (unsigned d = 0; d <= 8; ++d) {
    const SchurContext ctx(d);
    const RelationReport report = check_relations(ctx);
    for (const auto& res : report.results) r.require(res.holds(), res.name + " " + at(d));
    const Rep t = tensor_rep(d), w = weight_rep(d);
    Evaluator te(t), we(w);
    for (const auto& rel : defining_relations(ctx)) {
      r.require(te.eval(rel.difference).is_zero(), "tensor " + rel.name + " " + at(d));
      r.require(we.eval(rel.difference).is_zero(), "weight " + rel.name + " " + at(d));
      ++count;
    }
  }
  r.note = r.ok ? std::to_string(count) + " relations over d=0..8" : r.note;
  return r;
}

Outcome reduction_formula() {
  Outcome r;
  std::size_t count = 0;
  for (unsigned d = 1; d <= 6; ++d) {
    const SchurContext ctx(d);
    const Rep rep = tensor_rep(d);
    Evaluator ev(rep);
    for (unsigned a = 0; a <= d + 3; ++a) {
      for (unsigned b = 0; a + b <= d + 3; ++b) {
        for (unsigned c = 0; a + b + c <= d + 3; ++c) {
          const Element raw = Element::monomial(ctx.flavor, {a, b, c, 0});
          r.require(ev.eval(reduce_monomial(a, b, c, ctx)) == ev.eval(raw),
                    "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") " + at(d));
          ++count;
        }
      }
    }
  }
  r.note = r.ok ? std::to_string(count) + " monomials" : r.note;
  return r;
}

Outcome integrality_and_products() {
  Outcome r;
  std::size_t pairs = 0;
  for (unsigned d = 1; d <= 6; ++d) {
    const SchurContext ctx(d);
    const StructureTable table = structure_constants(ctx);
    const Rep rep = tensor_rep(d);
    Evaluator ev(rep);
    std::vector<ExactMatrix> images;
    for (const auto& m : table.basis) images.push_back(ev.monomial(ctx.flavor, m));
    const std::size_t n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ExactMatrix rhs(images[0].size());
        for (const auto& [k, c] : table.product(i, j)) {
          r.require(is_integral(c), "denominator in product (" + std::to_string(i) + "," + std::to_string(j) + ") " + at(d));
          rhs.add_scaled(c, images[k]);
        }
        r.require(images[i] * images[j] == rhs, "product (" + std::to_string(i) + "," + std::to_string(j) + ") " + at(d));
        ++pairs;
      }
    }
  }
  r.note = r.ok ? std::to_string(pairs) + " ordered pairs, all coefficients integral" : r.note;
  return r;
}

Outcome quotient_maps() {
  Outcome r;
  for (unsigned d = 0; d <= 6; ++d) r.require(quotient_map_check(SchurContext(d)), at(d));
  r.note = r.ok ? "d=0..6" : r.note;
  return r;
}

Outcome symmetry_of_tables() {
  Outcome r;
  for (unsigned d = 1; d <= 5; ++d) {
    const StructureTable fhe = structure_constants(SchurContext(d, Flavor::FHE));
    const StructureTable ehf = structure_constants(SchurContext(d, Flavor::EHF));
    r.require(fhe.basis == ehf.basis, "basis " + at(d));
    for (std::size_t i = 0; i < fhe.size(); ++i) {
      for (std::size_t j = 0; j < fhe.size(); ++j) {
        const Element x = symmetry(from_row(fhe.product(i, j), fhe.basis, Flavor::FHE));
        r.require(x == from_row(ehf.product(i, j), ehf.basis, Flavor::EHF), "pair " + at(d));
      }
    }
  }
  r.note = r.ok ? "d=1..5" : r.note;
  return r;
}

Outcome property_suites() {
  Outcome r;
  std::mt19937 rng(20260);
  const unsigned triples = 1200;
  for (unsigned i = 0; i < triples; ++i) {
    const SchurContext ctx(i % 6, i % 2 ? Flavor::EHF : Flavor::FHE);
    const Element x = test::random_element(rng, ctx.flavor, 5, true, 2);
    const Element x2 = test::random_element(rng, ctx.flavor, 5, true, 2);
    const Element y = test::random_element(rng, ctx.flavor, 5, true, 2);
    const Element z = test::random_element(rng, ctx.flavor, 5, true, 2);
    const Element nx = normalize(x, ctx);
    r.require(normalize(nx, ctx) == nx, "idempotence");
    r.require(mul_bd(mul_bd(x, y, ctx), z, ctx) == mul_bd(x, mul_bd(y, z, ctx), ctx), "associativity " + at(ctx.d));
    r.require(mul_bd(x + x2, y, ctx) == mul_bd(x, y, ctx) + mul_bd(x2, y, ctx), "left additivity");
    r.require(mul_bd(y, x + x2, ctx) == mul_bd(y, x, ctx) + mul_bd(y, x2, ctx), "right additivity");
    const Rational s = make_rational(int(i % 7) - 3, 1 + i % 4);
    r.require(mul_bd(s * x, y, ctx) == s * mul_bd(x, y, ctx), "scalars");
    r.require(normalize(mul(x, y), ctx) == mul_bd(nx, normalize(y, ctx), ctx), "quotient map");
  }
  for (unsigned i = 0; i < 1000; ++i) {
    const Flavor fl = i % 2 ? Flavor::EHF : Flavor::FHE;
    const Element x = test::random_element(rng, fl, 5, true, 2);
    const Element y = test::random_element(rng, fl, 5, true, 2);
    const Element z = test::random_element(rng, fl, 5, true, 2);
    r.require(mul(mul(x, y), z) == mul(x, mul(y, z)), "enveloping associativity");
  }
  for (unsigned d = 0; d <= 8; ++d) {
    const SchurContext ctx(d);
    for (unsigned a = 0; a <= d + 1; ++a) {
      for (unsigned b = 0; a + b <= d + 1; ++b) {
        const unsigned c = d + 1 - a - b;
        const Element reduced = reduce_monomial(a, b, c, ctx);
        for (const auto& [m, coeff] : reduced.terms()) {
          r.require(m.degree() < a + b + c && m.height() < a + c, "degree/height " + at(d));
        }
      }
    }
  }
  std::uniform_int_distribution<int> coeff(-20, 20), deg(0, 8), shift(-6, 6), dd(0, 12);
  for (unsigned i = 0; i < 500; ++i) {
    std::vector<Integer> cs(deg(rng) + 1);
    for (auto& c : cs) c = coeff(rng);
    const IVPoly p(Var::H2, cs);
    const long s = shift(rng), d = dd(rng);
    r.require(ivp_shift(ivp_shift(p, s), -s) == p, "shift round trip");
    r.require(ivp_complement(ivp_complement(p, d), d) == p, "complement round trip");
    std::vector<Integer> vals;
    for (long x = 0; x <= std::max(0, p.degree()); ++x) vals.push_back(p.evaluate(x));
    r.require(ivp_from_values(Var::H2, vals) == p, "finite difference round trip");
  }
  r.note = r.ok ? std::to_string(triples) + " truncated triples, 1000 enveloping triples" : r.note;
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"dimension and oracle rank", dimension_and_rank},
      {"minimal polynomials", minimal_polynomials},
      {"presentations", presentations},
      {"reduction formula", reduction_formula},
      {"integrality and all-pairs products", integrality_and_products},
      {"quotient maps", quotient_maps},
      {"symmetry of structure tables", symmetry_of_tables},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%s) [%.1fs]\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                out.note.c_str(), secs);
    std::fflush(stdout);
    if (!out.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
