#pragma once

#include "schurkit/schur.hpp"
#include "schurkit/straighten.hpp"

#include <string>
#include <string_view>

namespace schurkit::cli {

enum class OutputBasis { kostant, power, hbasis };

std::string_view name(OutputBasis b);

/// "F(2)*binom(H2,1)*E(1)"; the identity monomial renders as "1".
std::string render_monomial(const NormalMonomial& m, Flavor flavor);

/// Terms by descending height, then lexicographically; coefficients as p or
/// p/q. Zero renders as "0". The output parses back to the same element.
std::string render(const Element& x, const SchurContext& ctx, OutputBasis basis = OutputBasis::kostant);

}  // namespace schurkit::cli
