#include "schurkit/linalg.hpp"

#include <algorithm>
#include <map>

namespace schurkit {

namespace {

const Rational* find_entry(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  return (it != v.end() && it->first == index) ? &it->second : nullptr;
}

// a - s*b, both sorted.
SparseVector axpy(const SparseVector& a, const Rational& s, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -s * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> DependencyFinder::add(SparseVector v) {
  const std::size_t k = count_++;
  std::vector<Rational> combo(k + 1);
  combo[k] = 1;
  // Each stored row is already reduced against all earlier pivots, so one
  // pass in insertion order clears every pivot column.
  for (const Row& row : rows_) {
    const Rational* entry = find_entry(v, row.pivot);
    if (entry == nullptr) continue;
    const Rational s = *entry / *find_entry(row.vec, row.pivot);
    v = axpy(v, s, row.vec);
    for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] -= s * row.combo[i];
  }
  if (v.empty()) return combo;
  const std::size_t pivot = v.front().first;
  rows_.push_back(Row{pivot, std::move(v), std::move(combo)});
  return std::nullopt;
}

namespace {

void remove_content(IntegerRow& row) {
  Integer g = 0;
  for (const auto& [col, val] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [col, val] : row) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), g.get_mpz_t());
  }
}

// p*a - q*b where p is b's leading entry and q is a's leading entry; the
// leading column cancels.
IntegerRow eliminate(const IntegerRow& a, const IntegerRow& b) {
  const Integer& p = b.front().second;
  const Integer& q = a.front().second;
  IntegerRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 1, j = 1;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, p * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -q * b[j].second);
      ++j;
    } else {
      Integer v = p * a[i].second - q * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  remove_content(out);
  return out;
}

}  // namespace

std::size_t fraction_free_rank(std::vector<IntegerRow> rows) {
  std::map<std::size_t, IntegerRow> pivots;
  for (IntegerRow& row : rows) {
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    remove_content(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::size_t col = row.front().first;
        pivots.emplace(col, std::move(row));
        break;
      }
      row = eliminate(row, it->second);
    }
  }
  return pivots.size();
}

}  // namespace schurkit
