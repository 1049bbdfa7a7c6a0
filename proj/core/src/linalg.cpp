#include "bmenet/linalg.hpp"

#include <algorithm>

#include "bmenet/error.hpp"

namespace bmenet {

namespace {

std::vector<Int> clear_denominators(const std::vector<Rational>& row) {
  Int common = 1;
  for (const Rational& v : row)
    common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(v));
  std::vector<Int> out;
  out.reserve(row.size());
  for (const Rational& v : row)
    out.push_back(boost::multiprecision::numerator(v) *
                  (common / boost::multiprecision::denominator(v)));
  return out;
}

}  // namespace

int matrix_rank_int(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  Int previous_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows.size() && rows[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[rank], rows[pivot_row]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        rows[r][c] = (rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c]) /
                     previous_pivot;  // Bareiss: the division is exact
      rows[r][col] = 0;
    }
    previous_pivot = rows[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  std::vector<std::vector<Int>> cleared;
  cleared.reserve(rows.size());
  for (const auto& row : rows) cleared.push_back(clear_denominators(row));
  return matrix_rank_int(std::move(cleared));
}

int affine_dimension(std::span<const PairVector> vectors) {
  if (vectors.empty()) fail(ErrorCode::EmptyInput, "no vectors given");
  const PairVector& base = vectors.front();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t idx = 1; idx < vectors.size(); ++idx) {
    if (vectors[idx].size() != base.size())
      fail(ErrorCode::AmbientMismatch, "vectors of different lengths");
    std::vector<Rational> row;
    row.reserve(base.size());
    for (std::size_t c = 0; c < base.size(); ++c)
      row.push_back(vectors[idx][c] - base[c]);
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> matrix,
                                                  std::vector<Rational> rhs) {
  const std::size_t size = matrix.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && matrix[pivot][col] == 0) ++pivot;
    if (pivot == size) return std::nullopt;
    std::swap(matrix[col], matrix[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || matrix[r][col] == 0) continue;
      const Rational factor = matrix[r][col] / matrix[col][col];
      for (std::size_t c = col; c < size; ++c)
        matrix[r][c] -= factor * matrix[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Rational> solution(size);
  for (std::size_t r = 0; r < size; ++r) solution[r] = rhs[r] / matrix[r][r];
  return solution;
}

bool IntEliminator::add_row(std::vector<Int> row) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (row[p] == 0) continue;
    const Int a = rows_[r][p];
    const Int b = row[p];
    for (std::size_t c = 0; c < row.size(); ++c)
      row[c] = a * row[c] - b * rows_[r][c];
  }
  std::size_t pivot = columns_;
  Int norm = 0;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0 && c < columns_ && pivot == columns_) pivot = c;
    norm = boost::multiprecision::gcd(norm, row[c]);
  }
  if (pivot == columns_) return false;  // dependent (or inconsistent) row
  if (norm > 1)
    for (Int& v : row) v /= norm;
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

void IntEliminator::pop_row() {
  rows_.pop_back();
  pivots_.pop_back();
}

std::vector<Rational> IntEliminator::solve() const {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  for (const auto& row : rows_) {
    std::vector<Rational> coeffs;
    coeffs.reserve(columns_);
    for (std::size_t c = 0; c < columns_; ++c) coeffs.emplace_back(row[c]);
    matrix.push_back(std::move(coeffs));
    rhs.emplace_back(row[columns_]);
  }
  auto solution = solve_square(std::move(matrix), std::move(rhs));
  if (!solution) fail(ErrorCode::OutOfRange, "eliminator is not at full rank");
  return *solution;
}

}  // namespace bmenet
