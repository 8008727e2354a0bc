#pragma once

#include "schurkit/exactmath.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace schurkit {

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;
using IntegerRow = std::vector<std::pair<std::size_t, Integer>>;

/// Finds the first linear dependency in a sequence v_0, v_1, ... fed one at a time.
///
/// Used for minimal polynomials: feed the Krylov sequence x^k and the first
/// dependency is the monic minimal relation.
class DependencyFinder {
 public:
  /// Adds the next vector. When it lies in the span of the previous ones,
  /// returns c_0..c_k with c_k = 1 and sum c_i v_i = 0.
  std::optional<std::vector<Rational>> add(SparseVector v);

  std::size_t size() const { return count_; }

 private:
  struct Row {
    std::size_t pivot;
    SparseVector vec;
    std::vector<Rational> combo;  // vec = sum combo[i] v_i
  };
  std::vector<Row> rows_;
  std::size_t count_ = 0;
};

/// Rank over Q of integer rows, by fraction-free row reduction (each reduced
/// row is divided by its content, so entries stay integral and small).
std::size_t fraction_free_rank(std::vector<IntegerRow> rows);

}  // namespace schurkit
