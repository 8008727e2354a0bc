#include "schurkit/exactmath.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace schurkit {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer binom(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer r;
  // mpz_bin_ui handles negative n via binom(-n,k) = (-1)^k binom(n+k-1,k).
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Integer binom(long n, long k) { return binom(Integer(n), k); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string_view name(Var v) {
  switch (v) {
    case Var::H1: return "H1";
    case Var::H2: return "H2";
    case Var::h: return "h";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// IVPoly

IVPoly::IVPoly(Var v, std::vector<Integer> coeffs) : var_(v), coeffs_(std::move(coeffs)) { trim(); }

IVPoly IVPoly::constant(Var v, const Integer& c) { return IVPoly(v, {c}); }

IVPoly IVPoly::binomial(Var v, std::size_t b, const Integer& coeff) {
  std::vector<Integer> c(b + 1);
  c[b] = coeff;
  return IVPoly(v, std::move(c));
}

Integer IVPoly::coeff(std::size_t b) const { return b < coeffs_.size() ? coeffs_[b] : Integer(0); }

Integer IVPoly::evaluate(const Integer& n) const {
  Integer sum = 0;
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    if (coeffs_[b] != 0) sum += coeffs_[b] * binom(n, static_cast<long>(b));
  }
  return sum;
}

void IVPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void IVPoly::check_same_var(const IVPoly& other) const {
  if (var_ != other.var_) {
    throw std::invalid_argument("IVPoly variable mismatch: " + std::string(name(var_)) + " vs " +
                                std::string(name(other.var_)));
  }
}

IVPoly& IVPoly::operator+=(const IVPoly& other) {
  check_same_var(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IVPoly& IVPoly::operator-=(const IVPoly& other) {
  check_same_var(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IVPoly& IVPoly::operator*=(const Integer& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

std::string IVPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    const Integer& c = coeffs_[b];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (b == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "binom(" << name(var_) << "," << b << ")";
    }
  }
  return out.str();
}

IVPoly ivp_from_values(Var v, std::span<const Integer> values) {
  // Repeated forward differences; after step b, diff[0] is the b-th difference at 0.
  std::vector<Integer> diff(values.begin(), values.end());
  std::vector<Integer> coeffs;
  coeffs.reserve(diff.size());
  for (std::size_t b = 0; b < values.size(); ++b) {
    coeffs.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  return IVPoly(v, std::move(coeffs));
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Integer> compute_binomial_product(std::size_t i, std::size_t j) {
  std::vector<Integer> c(i + j + 1);
  for (std::size_t k = std::max(i, j); k <= i + j; ++k) {
    c[k] = binom(static_cast<long>(k), static_cast<long>(i)) *
           binom(static_cast<long>(i), static_cast<long>(k - j));
  }
  return c;
}

}  // namespace

const std::vector<Integer>& binomial_product(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<Integer>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find({i, j});
  if (it == cache.end()) it = cache.emplace(std::pair{i, j}, compute_binomial_product(i, j)).first;
  return it->second;
}

IVPoly ivp_product(const IVPoly& p, const IVPoly& q) {
  if (p.var() != q.var()) {
    throw std::invalid_argument("ivp_product: variable mismatch " + std::string(name(p.var())) +
                                " vs " + std::string(name(q.var())));
  }
  if (p.is_zero() || q.is_zero()) return IVPoly(p.var());
  std::vector<Integer> out(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
      if (q.coeffs()[j] == 0) continue;
      const Integer pq = p.coeffs()[i] * q.coeffs()[j];
      const auto& table = binomial_product(i, j);
      for (std::size_t k = std::max(i, j); k < table.size(); ++k) out[k] += pq * table[k];
    }
  }
  return IVPoly(p.var(), std::move(out));
}

IVPoly ivp_shift(const IVPoly& p, long s) {
  std::vector<Integer> c = p.coeffs();
  for (; s > 0; --s) {
    // binom(H+1,b) = binom(H,b) + binom(H,b-1)
    for (std::size_t b = 0; b + 1 < c.size(); ++b) c[b] += c[b + 1];
  }
  for (; s < 0; ++s) {
    // inverse of the step above: solve from the top coefficient down
    for (std::size_t b = c.size(); b-- > 1;) c[b - 1] -= c[b];
  }
  return IVPoly(p.var(), std::move(c));
}

IVPoly ivp_complement(const IVPoly& p, long d) {
  // binom(d-H,b) = sum_k binom(d,b-k) binom(-H,k), and
  // binom(-H,k) = (-1)^k sum_j binom(k-1,k-j) binom(H,j).
  std::vector<Integer> out(p.coeffs().size());
  for (std::size_t b = 0; b < p.coeffs().size(); ++b) {
    const Integer& pb = p.coeffs()[b];
    if (pb == 0) continue;
    for (long k = 0; k <= static_cast<long>(b); ++k) {
      Integer outer = pb * binom(d, static_cast<long>(b) - k);
      if (outer == 0) continue;
      if (k % 2 == 1) outer = -outer;
      for (long j = 0; j <= k; ++j) {
        const Integer inner = binom(k - 1, k - j);
        if (inner != 0) out[static_cast<std::size_t>(j)] += outer * inner;
      }
    }
  }
  return IVPoly(p.var(), std::move(out));
}

const std::vector<Integer>& shifted_binomial(std::size_t b, long s) {
  static std::map<std::pair<std::size_t, long>, std::vector<Integer>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({b, s});
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> c = ivp_shift(IVPoly::binomial(Var::H2, b), s).coeffs();
  c.resize(b + 1);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(std::pair{b, s}, std::move(c)).first->second;
}

const std::vector<Integer>& complemented_binomial(std::size_t b, long d) {
  static std::map<std::pair<std::size_t, long>, std::vector<Integer>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({b, d});
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> c = ivp_complement(IVPoly::binomial(Var::H2, b), d).coeffs();
  c.resize(b + 1);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(std::pair{b, d}, std::move(c)).first->second;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  std::vector<Rational> c{Rational(1)};
  for (const Rational& r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t p = coeffs_.size(); p-- > 0;) {
    const Rational& c = coeffs_[p];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (p == 0) {
      out << schurkit::to_string(mag);
      continue;
    }
    if (mag != 1) out << schurkit::to_string(mag) << "*";
    out << var;
    if (p > 1) out << "^" << p;
  }
  return out.str();
}

}  // namespace schurkit
