#pragma once

#include "schurkit/schur.hpp"
#include "schurkit/straighten.hpp"

#include <random>

namespace schurkit::test {

// Small random elements with exponents up to max_exp. U-mode elements may
// carry an auxiliary binomial.
inline Element random_element(std::mt19937& rng, Flavor flavor, unsigned max_exp, bool with_aux, unsigned max_terms = 3) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<unsigned> aux(0, with_aux ? 2 : 0);
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Element x(flavor);
  const unsigned n = terms(rng);
  for (unsigned i = 0; i < n; ++i) {
    const NormalMonomial m{exp(rng), exp(rng), exp(rng), aux(rng)};
    x.add_term(m, make_rational(num(rng), den(rng)));
  }
  return x;
}

// A random element of the truncated basis at degree d.
inline Element random_truncated(std::mt19937& rng, const SchurContext& ctx, unsigned max_terms = 3) {
  const auto monos = basis(ctx);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<int> num(-5, 5);
  Element x(ctx.flavor);
  const unsigned n = terms(rng);
  for (unsigned i = 0; i < n; ++i) x.add_term(monos[pick(rng)], num(rng));
  return x;
}

}  // namespace schurkit::test
