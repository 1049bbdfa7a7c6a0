#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bmenet/pair_vector.hpp"
#include "bmenet/rational.hpp"

namespace bmenet {

// Rank by fraction-free (Bareiss) elimination after clearing denominators;
// pivots are chosen as the first nonzero entry in column order.
int matrix_rank(std::vector<std::vector<Rational>> rows);
int matrix_rank_int(std::vector<std::vector<Int>> rows);

// Dimension of the affine hull of the vectors: rank of {v - v0}.
int affine_dimension(std::span<const PairVector> vectors);

// Exact solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> matrix,
                                                  std::vector<Rational> rhs);

// Incremental fraction-free elimination over integer rows, used to walk
// combinations of constraint rows with rank pruning.
class IntEliminator {
 public:
  explicit IntEliminator(std::size_t columns) : columns_(columns) {}

  int rank() const { return static_cast<int>(pivots_.size()); }
  // Reduces the row against the current basis; returns false (leaving the
  // state unchanged) when the row is dependent, true after absorbing it.
  bool add_row(std::vector<Int> row);
  void pop_row();
  // Back-substitutes the absorbed rows; requires rank == columns. The last
  // column is the right-hand side.
  std::vector<Rational> solve() const;

 private:
  std::size_t columns_;
  std::vector<std::vector<Int>> rows_;   // echelon rows, in insertion order
  std::vector<std::size_t> pivots_;      // pivot column of each row
};

}  // namespace bmenet
