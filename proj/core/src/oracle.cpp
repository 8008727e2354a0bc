#include "schurkit/oracle.hpp"

#include <bit>
#include <optional>
#include <stdexcept>
#include <utility>

namespace schurkit {

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rational> entries) {
  ExactMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool ExactMatrix::is_integral() const {
  for (const auto& x : data_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (other.data_[i] != 0) data_[i] += other.data_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (other.data_[i] != 0) data_[i] -= other.data_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) {
    if (x != 0) x *= s;
  }
  return *this;
}

void ExactMatrix::add_scaled(const Rational& s, const ExactMatrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (other.data_[i] != 0) data_[i] += s * other.data_[i];
  }
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  std::vector<std::vector<std::size_t>> b_rows(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b(k, j) != 0) b_rows[k].push_back(j);
    }
  }
  ExactMatrix c(n);
  Rational t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j : b_rows[k]) {
        mpq_mul(t.get_mpq_t(), aik.get_mpq_t(), b(k, j).get_mpq_t());
        c(i, j) += t;
      }
    }
  }
  return c;
}

SparseVector ExactMatrix::flatten() const {
  SparseVector v;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] != 0) v.emplace_back(i, data_[i]);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Representations

std::string_view name(RepKind k) { return k == RepKind::tensor ? "tensor" : "weight"; }

const ExactMatrix& Rep::cartan(Var v) const {
  if (v == Var::H1) return H1;
  if (v == Var::H2) return H2;
  throw std::invalid_argument("Rep::cartan: expected H1 or H2");
}

Rep tensor_rep(unsigned d) {
  if (d > 20) throw std::invalid_argument("tensor_rep: degree too large");
  const std::size_t dim = std::size_t{1} << d;
  Rep rep{RepKind::tensor, d, dim, ExactMatrix(dim), ExactMatrix(dim), ExactMatrix(dim), ExactMatrix(dim)};
  for (std::size_t w = 0; w < dim; ++w) {
    const unsigned twos = static_cast<unsigned>(std::popcount(w));
    rep.H2(w, w) = twos;
    rep.H1(w, w) = d - twos;
    for (unsigned pos = 0; pos < d; ++pos) {
      const std::size_t bit = std::size_t{1} << pos;
      // e turns a letter 2 into 1, f a letter 1 into 2; M(target, source).
      if (w & bit) {
        rep.e(w & ~bit, w) += 1;
      } else {
        rep.f(w | bit, w) += 1;
      }
    }
  }
  return rep;
}

Rep weight_rep(unsigned d) {
  std::size_t dim = 0;
  for (unsigned k = 0; 2 * k <= d; ++k) dim += d - 2 * k + 1;
  Rep rep{RepKind::weight, d, dim, ExactMatrix(dim), ExactMatrix(dim), ExactMatrix(dim), ExactMatrix(dim)};
  std::size_t offset = 0;
  for (unsigned k = 0; 2 * k <= d; ++k) {
    const unsigned m = d - 2 * k;
    for (unsigned j = 0; j <= m; ++j) {
      const std::size_t v = offset + j;
      rep.H2(v, v) = k + j;
      rep.H1(v, v) = d - (k + j);
      if (j < m) rep.f(v + 1, v) = j + 1;
      if (j > 0) rep.e(v - 1, v) = m - j + 1;
    }
    offset += m + 1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Evaluation

Evaluator::Evaluator(const Rep& rep) : rep_(rep) {
  if (!rep.H1.is_diagonal() || !rep.H2.is_diagonal()) throw std::invalid_argument("Evaluator: Cartan matrices must be diagonal");
  for (std::size_t i = 0; i < rep.dim; ++i) {
    h1_.push_back(rep.H1(i, i));
    h2_.push_back(rep.H2(i, i));
  }
}

const ExactMatrix& Evaluator::divided_power(Letter g, unsigned m) {
  auto it = powers_.find({g, m});
  if (it != powers_.end()) return it->second;
  ExactMatrix p = m == 0 ? ExactMatrix::identity(rep_.dim) : divided_power(g, m - 1) * rep_.letter(g);
  if (m > 1) p *= make_rational(1, m);
  return powers_.emplace(std::pair{g, m}, std::move(p)).first->second;
}

ExactMatrix Evaluator::monomial(Flavor flavor, const NormalMonomial& m) {
  const auto& primary = primary_var(flavor) == Var::H1 ? h1_ : h2_;
  const auto& aux = primary_var(flavor) == Var::H1 ? h2_ : h1_;
  // binom of a diagonal matrix, entrywise on the eigenvalues.
  ExactMatrix right = divided_power(right_letter(flavor), m.c);
  for (std::size_t i = 0; i < rep_.dim; ++i) {
    Integer scale = 1;
    if (m.b != 0) scale *= binom(primary[i].get_num(), long(m.b));
    if (m.b_aux != 0) scale *= binom(aux[i].get_num(), long(m.b_aux));
    if (scale == 1) continue;
    for (std::size_t j = 0; j < rep_.dim; ++j) {
      if (right(i, j) != 0) right(i, j) *= scale;
    }
  }
  if (m.a == 0) return right;
  return divided_power(left_letter(flavor), m.a) * right;
}

ExactMatrix Evaluator::eval(const Element& x) {
  ExactMatrix out(rep_.dim);
  for (const auto& [m, coeff] : x.terms()) out.add_scaled(coeff, monomial(x.flavor(), m));
  return out;
}

ExactMatrix eval_element(const Element& x, const Rep& rep) { return Evaluator(rep).eval(x); }

std::size_t rank_of_images(std::span<const NormalMonomial> monos, const Rep& rep, Flavor flavor) {
  // Identical columns and zero columns do not change the rank; dropping them
  // leaves a matrix about as wide as it is tall.
  Evaluator ev(rep);
  std::map<std::size_t, IntegerRow> columns;
  for (std::size_t r = 0; r < monos.size(); ++r) {
    const SparseVector flat = ev.monomial(flavor, monos[r]).flatten();
    Integer lcm = 1;
    for (const auto& [idx, val] : flat) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), val.get_den_mpz_t());
    for (const auto& [idx, val] : flat) {
      Integer scaled = val.get_num() * (lcm / val.get_den());
      columns[idx].emplace_back(r, std::move(scaled));
    }
  }
  std::map<IntegerRow, std::size_t> distinct;
  std::vector<IntegerRow> rows(monos.size());
  for (auto& [idx, column] : columns) {
    auto [it, inserted] = distinct.try_emplace(std::move(column), distinct.size());
    if (!inserted) continue;
    for (const auto& [r, val] : it->first) rows[r].emplace_back(it->second, val);
  }
  return fraction_free_rank(std::move(rows));
}

Polynomial matrix_min_poly(const ExactMatrix& m) {
  DependencyFinder finder;
  ExactMatrix power = ExactMatrix::identity(m.size());
  for (;;) {
    if (auto relation = finder.add(power.flatten())) return Polynomial(std::move(*relation));
    power = power * m;
  }
}

Polynomial cartan_min_poly(unsigned d) {
  std::vector<Rational> roots;
  for (unsigned i = 0; i <= d; ++i) roots.emplace_back(i);
  return Polynomial::from_roots(roots);
}

Polynomial h_min_poly(unsigned d) {
  std::vector<Rational> roots;
  for (unsigned k = 0; k <= d; ++k) roots.emplace_back(long(d) - 2 * long(k));
  return Polynomial::from_roots(roots);
}

// ---------------------------------------------------------------------------
// Verification suite

bool VerifyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.skipped && !c.passed) return false;
  }
  return true;
}

namespace {

CheckResult make_check(std::string name, std::string oracle, bool passed, std::string detail = {}) {
  return CheckResult{std::move(name), std::move(oracle), passed, false, std::move(detail)};
}

CheckResult skipped_check(std::string name, std::string oracle, std::string why) {
  return CheckResult{std::move(name), std::move(oracle), true, true, std::move(why)};
}

void oracle_checks(VerifyReport& report, const Rep& rep, const SchurContext& ctx, const StructureTable& table,
                   const std::vector<Relation>& relations, bool products) {
  const std::string oracle{name(rep.kind)};
  Evaluator ev(rep);

  std::size_t failed = 0;
  std::string first_failure;
  for (const auto& r : relations) {
    if (!ev.eval(r.difference).is_zero()) {
      if (failed++ == 0) first_failure = r.name;
    }
  }
  report.checks.push_back(make_check("relations hold as matrices", oracle, failed == 0,
                                     failed == 0 ? std::to_string(relations.size()) + " relations"
                                                 : std::to_string(failed) + " failed, first: " + first_failure));

  const ExactMatrix cartan_sum = rep.H1 + rep.H2;
  report.checks.push_back(make_check("H1 + H2 = d", oracle, cartan_sum == ExactMatrix::identity(rep.dim) * Rational(ctx.d)));

  bool integral = true;
  for (unsigned a = 0; a <= ctx.d; ++a) {
    integral = integral && ev.divided_power(Letter::e, a).is_integral() && ev.divided_power(Letter::f, a).is_integral();
  }
  report.checks.push_back(make_check("divided powers are integral", oracle, integral));

  const std::size_t rank = rank_of_images(table.basis, rep, ctx.flavor);
  report.checks.push_back(make_check("rank of basis images = dimension", oracle, rank == table.size(),
                                     "rank " + std::to_string(rank) + ", basis " + std::to_string(table.size())));

  const Polynomial expect_cartan = cartan_min_poly(ctx.d);
  const Polynomial expect_h = h_min_poly(ctx.d);
  report.checks.push_back(make_check("min poly of H1", oracle, matrix_min_poly(rep.H1) == expect_cartan));
  report.checks.push_back(make_check("min poly of H2", oracle, matrix_min_poly(rep.H2) == expect_cartan));
  report.checks.push_back(make_check("min poly of h", oracle, matrix_min_poly(rep.H1 - rep.H2) == expect_h));

  if (!products) {
    report.checks.push_back(skipped_check("all-pairs products match", oracle,
                                          "product sweep not run in this module at d = " + std::to_string(ctx.d)));
    return;
  }
  std::vector<ExactMatrix> images;
  images.reserve(table.size());
  for (const auto& m : table.basis) images.push_back(ev.monomial(ctx.flavor, m));
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      ExactMatrix expected(rep.dim);
      for (const auto& [k, coeff] : table.product(i, j)) expected.add_scaled(coeff, images[k]);
      if (!(images[i] * images[j] == expected)) ++mismatches;
    }
  }
  report.checks.push_back(make_check("all-pairs products match", oracle, mismatches == 0,
                                     std::to_string(table.size() * table.size()) + " products, " +
                                         std::to_string(mismatches) + " mismatches"));
}

}  // namespace

VerifyReport verify_suite(unsigned d, const VerifyOptions& options) {
  std::optional<testing::ScopedCommutatorSignFault> fault;
  if (options.inject_sign_fault) fault.emplace();

  VerifyReport report;
  report.d = d;
  const SchurContext ctx(d, options.flavor);

  const StructureTable table = structure_constants(ctx);
  report.checks.push_back(make_check("basis size = binom(d+3,3)", "symbolic", dimension(d) == table.size(),
                                     std::to_string(table.size()) + " monomials"));

  const RelationReport relations = check_relations(ctx);
  std::size_t failed = 0;
  std::string first_failure;
  for (const auto& r : relations.results) {
    if (!r.holds() && failed++ == 0) first_failure = r.name;
  }
  report.checks.push_back(make_check("relations normalize to zero", "symbolic", failed == 0,
                                     failed == 0 ? std::to_string(relations.results.size()) + " relations"
                                                 : std::to_string(failed) + " failed, first: " + first_failure));
  report.checks.push_back(make_check("quotient map from degree d+2", "symbolic", quotient_map_check(ctx)));

  bool integral = true;
  for (const auto& entry : table.products) {
    for (const auto& [k, coeff] : entry) integral = integral && is_integral(coeff);
  }
  report.checks.push_back(make_check("structure constants are integers", "symbolic", integral));

  const Polynomial expect_cartan = cartan_min_poly(d);
  report.checks.push_back(make_check("min poly of H1", "symbolic",
                                     min_poly(generator(ctx.flavor, Symbol::H1), ctx) == expect_cartan));
  report.checks.push_back(make_check("min poly of H2", "symbolic",
                                     min_poly(generator(ctx.flavor, Symbol::H2), ctx) == expect_cartan));
  report.checks.push_back(make_check("min poly of h", "symbolic",
                                     min_poly(generator(ctx.flavor, Symbol::h), ctx) == h_min_poly(d)));

  std::vector<Relation> raw = defining_relations(ctx);
  const bool want_tensor = options.oracle != OracleChoice::weight;
  const bool want_weight = options.oracle != OracleChoice::tensor;
  if (want_tensor) {
    if (d > options.tensor_max_d) {
      report.checks.push_back(skipped_check("tensor oracle", "tensor",
                                            "d above tensor limit " + std::to_string(options.tensor_max_d)));
    } else {
      oracle_checks(report, tensor_rep(d), ctx, table, raw, d <= options.tensor_product_max_d);
    }
  }
  if (want_weight) oracle_checks(report, weight_rep(d), ctx, table, raw, true);
  return report;
}

}  // namespace schurkit
