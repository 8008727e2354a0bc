#pragma once

#include "schurkit/exactmath.hpp"
#include "schurkit/linalg.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/straighten.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace schurkit {

/// Dense square matrix of exact rationals. Products skip zero entries, which
/// keeps the sparse generator images cheap.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const Rational> entries);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_integral() const;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  ExactMatrix& operator*=(const Rational& s);
  /// this += s * other
  void add_scaled(const Rational& s, const ExactMatrix& other);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  /// Nonzero entries keyed by i * size() + j.
  SparseVector flatten() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

enum class RepKind { tensor, weight };

std::string_view name(RepKind k);

/// Matrices of e, f, H1, H2 in a representation of degree d. H1 and H2 are
/// diagonal in both kinds.
struct Rep {
  RepKind kind;
  unsigned d;
  std::size_t dim;
  ExactMatrix e, f, H1, H2;

  const ExactMatrix& letter(Letter g) const { return g == Letter::e ? e : f; }
  const ExactMatrix& cartan(Var v) const;
};

/// The action on words w in {1,2}^d (d-fold tensor power of a 2-dimensional
/// space); basis index reads the word as binary with letter 1 -> 0 and the
/// first letter most significant. Dimension 2^d; practical up to d = 12.
Rep tensor_rep(unsigned d);

/// Direct sum of the irreducible modules of highest weight m = d, d-2, ...:
/// in block m = d-2k, f v_j = (j+1) v_{j+1}, e v_j = (m-j+1) v_{j-1},
/// H2 v_j = (k+j) v_j, H1 = d - H2.
Rep weight_rep(unsigned d);

/// Evaluates elements in a representation, caching divided powers.
/// Holds a reference to the Rep, which must outlive it.
class Evaluator {
 public:
  explicit Evaluator(const Rep& rep);
  explicit Evaluator(Rep&&) = delete;

  const Rep& rep() const { return rep_; }
  const ExactMatrix& divided_power(Letter g, unsigned m);
  ExactMatrix monomial(Flavor flavor, const NormalMonomial& m);
  ExactMatrix eval(const Element& x);

 private:
  const Rep& rep_;
  std::vector<Rational> h1_, h2_;
  std::map<std::pair<Letter, unsigned>, ExactMatrix> powers_;
};

ExactMatrix eval_element(const Element& x, const Rep& rep);

/// Rank over Q of the images of the given monomials, as flattened vectors.
std::size_t rank_of_images(std::span<const NormalMonomial> monos, const Rep& rep, Flavor flavor = Flavor::FHE);

/// Exact minimal polynomial of a square matrix.
Polynomial matrix_min_poly(const ExactMatrix& m);

enum class OracleChoice { tensor, weight, both };

struct VerifyOptions {
  OracleChoice oracle = OracleChoice::both;
  Flavor flavor = Flavor::FHE;
  /// Tensor checks are skipped above this degree (the module has dimension 2^d).
  unsigned tensor_max_d = 10;
  /// The all-pairs product sweep uses the tensor module only up to this degree.
  unsigned tensor_product_max_d = 6;
  /// Runs the symbolic side with a wrong-sign commutator; every honest
  /// checker must then fail.
  bool inject_sign_fault = false;
};

struct CheckResult {
  std::string name;
  std::string oracle;  // "symbolic", "tensor" or "weight"
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  unsigned d = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Relations, dimension and rank, all-pairs product agreement, integrality
/// and minimal polynomials at degree d, against the chosen oracles.
VerifyReport verify_suite(unsigned d, const VerifyOptions& options = {});

/// prod_{i=0}^{d} (T - i).
Polynomial cartan_min_poly(unsigned d);
/// prod_{k=0}^{d} (T - (d - 2k)).
Polynomial h_min_poly(unsigned d);

}  // namespace schurkit
