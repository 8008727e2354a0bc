#include "schurkit/cli/render.hpp"

#include <algorithm>
#include <vector>

namespace schurkit::cli {

namespace {

struct Term {
  NormalMonomial m;
  Rational coeff;
};

std::string power_factor(std::string_view symbol, unsigned n) {
  std::string s(symbol);
  if (n > 1) s += "^" + std::to_string(n);
  return s;
}

// Plain-power monomial left^a H^b right^c, with H named by the caller.
std::string render_plain(const NormalMonomial& m, Flavor flavor, std::string_view cartan) {
  std::vector<std::string> parts;
  if (m.a) parts.push_back(power_factor(name(left_letter(flavor)), m.a));
  if (m.b) parts.push_back(power_factor(cartan, m.b));
  if (m.c) parts.push_back(power_factor(name(right_letter(flavor)), m.c));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

std::string join(const std::vector<Term>& terms, auto&& monomial_text) {
  std::vector<Term> sorted = terms;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Term& x, const Term& y) {
    if (x.m.height() != y.m.height()) return x.m.height() > y.m.height();
    return x.m < y.m;
  });
  std::string out;
  for (const auto& t : sorted) {
    if (t.coeff == 0) continue;
    const bool negative = t.coeff < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(t.coeff);
    const std::string mono = monomial_text(t.m);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Term> from_vector(const std::vector<Rational>& coeffs, const SchurContext& ctx) {
  const auto monos = basis(ctx);
  std::vector<Term> out;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (coeffs[i] != 0) out.push_back({monos[i], coeffs[i]});
  }
  return out;
}

}  // namespace

std::string_view name(OutputBasis b) {
  switch (b) {
    case OutputBasis::kostant: return "kostant";
    case OutputBasis::power: return "power";
    case OutputBasis::hbasis: return "hbasis";
  }
  return "?";
}

std::string render_monomial(const NormalMonomial& m, Flavor flavor) {
  std::vector<std::string> parts;
  auto divided = [](Letter g, unsigned n) { return std::string(g == Letter::e ? "E(" : "F(") + std::to_string(n) + ")"; };
  auto binom_text = [](Var v, unsigned n) { return "binom(" + std::string(name(v)) + "," + std::to_string(n) + ")"; };
  if (m.a) parts.push_back(divided(left_letter(flavor), m.a));
  if (m.b) parts.push_back(binom_text(primary_var(flavor), m.b));
  if (m.b_aux) parts.push_back(binom_text(aux_var(flavor), m.b_aux));
  if (m.c) parts.push_back(divided(right_letter(flavor), m.c));
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

std::string render(const Element& x, const SchurContext& ctx, OutputBasis basis) {
  switch (basis) {
    case OutputBasis::kostant: {
      std::vector<Term> terms;
      for (const auto& [m, c] : x.terms()) terms.push_back({m, c});
      return join(terms, [&](const NormalMonomial& m) {
        return m == NormalMonomial{} ? std::string() : render_monomial(m, x.flavor());
      });
    }
    case OutputBasis::power:
      return join(from_vector(to_power_basis(x, ctx), ctx), [&](const NormalMonomial& m) {
        return render_plain(m, ctx.flavor, name(ctx.cartan()));
      });
    case OutputBasis::hbasis:
      return join(from_vector(to_h_basis(x, ctx), ctx),
                  [&](const NormalMonomial& m) { return render_plain(m, ctx.flavor, "h"); });
  }
  return "0";
}

}  // namespace schurkit::cli
