#pragma once

#include "schurkit/exactmath.hpp"
#include "schurkit/straighten.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace schurkit {

/// The truncated algebra of degree d in a chosen normal-order flavor.
struct SchurContext {
  SchurContext(unsigned degree, Flavor flavor_ = Flavor::FHE) : d(degree), flavor(flavor_) {}

  unsigned d;
  Flavor flavor;

  /// The Cartan symbol of the flavor's normal form (H2 for FHE).
  Var cartan() const { return primary_var(flavor); }
};

/// All (a,b,c) with a+b+c <= d, lexicographic. Size binom(d+3,3).
std::vector<NormalMonomial> basis(const SchurContext& ctx);

/// binom(d+3,3).
Integer dimension(unsigned d);

/// Position of a truncated monomial in basis(ctx).
std::size_t basis_index(const NormalMonomial& m, unsigned d);

/// The monomial left^(a) binom(H,b) right^(c) rewritten as a combination of
/// monomials of degree <= d. With s = a+b+c-d > 0 the result is
///   sum_{k=s}^{min(a,c)} (-1)^(k-s) binom(k-1,s-1) binom(b+k,k) (a-k, b+k, c-k)
/// and zero when min(a,c) < s.
Element reduce_monomial(unsigned a, unsigned b, unsigned c, const SchurContext& ctx);

/// Eliminates the auxiliary Cartan symbol (H1 + H2 = d) and reduces every
/// term into the truncated basis. Idempotent.
Element normalize(const Element& x, const SchurContext& ctx);

/// normalize(mul(x, y)).
Element mul_bd(const Element& x, const Element& y, const SchurContext& ctx);

struct StructureTable {
  unsigned d = 0;
  Flavor flavor = Flavor::FHE;
  std::vector<NormalMonomial> basis;
  /// products[i * n + j] is basis[i] * basis[j] as (k, coefficient), sorted by k.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> products;

  std::size_t size() const { return basis.size(); }
  const std::vector<std::pair<std::size_t, Rational>>& product(std::size_t i, std::size_t j) const {
    return products[i * basis.size() + j];
  }
};

StructureTable structure_constants(const SchurContext& ctx);

/// Coordinates of a truncated element over the basis order.
std::vector<Rational> coordinates(const Element& x, const SchurContext& ctx);
Element from_coordinates(const std::vector<Rational>& coords, const SchurContext& ctx);

/// Coefficients over the PBW monomials left^a H^b right^c (a+b+c <= d),
/// indexed like basis(ctx). H is the flavor's Cartan symbol.
std::vector<Rational> to_power_basis(const Element& x, const SchurContext& ctx);
Element from_power_basis(const std::vector<Rational>& coeffs, const SchurContext& ctx);

/// Coefficients over left^a h^b right^c, h = H1 - H2 (so H2 = (d-h)/2 and
/// H1 = (d+h)/2), indexed like basis(ctx).
std::vector<Rational> to_h_basis(const Element& x, const SchurContext& ctx);
Element from_h_basis(const std::vector<Rational>& coeffs, const SchurContext& ctx);

/// Minimal polynomial of left multiplication by normalize(x) on the algebra.
Polynomial min_poly(const Element& x, const SchurContext& ctx);

struct RelationResult {
  std::string name;
  Element residual;
  bool holds() const { return residual.is_zero(); }
};

/// A named relation lhs - rhs in the enveloping algebra (not yet normalized).
struct Relation {
  std::string name;
  Element difference;
};

/// The defining relations of the three presentations (e,f,h), (e,f,H1),
/// (e,f,H2) and of the four-generator algebra, plus the derived vanishing
/// rules and Cartan identities, all at degree d.
std::vector<Relation> defining_relations(const SchurContext& ctx);

/// Relations of the (e,f,h) presentation at degree d_source.
std::vector<Relation> sl2_relations(Flavor flavor, unsigned d_source);

struct RelationReport {
  std::vector<RelationResult> results;
  bool all_hold() const;
};

RelationReport check_relations(const SchurContext& ctx, const std::vector<Relation>& extra = {});

/// True iff every (e,f,h) relation of degree d+2 vanishes at degree d.
bool quotient_map_check(const SchurContext& ctx);

}  // namespace schurkit
