#include "fpbm/matrix.hpp"

#include <utility>

#include "fpbm/error.hpp"

namespace fpbm {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  row_ids_.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) row_ids_.push_back(std::to_string(r));
  col_ids_.reserve(cols);
  for (std::size_t c = 0; c < cols; ++c) col_ids_.push_back(std::to_string(c));
}

RatMatrix::RatMatrix(std::vector<std::string> row_ids, std::vector<std::string> col_ids)
    : rows_(row_ids.size()),
      cols_(col_ids.size()),
      row_ids_(std::move(row_ids)),
      col_ids_(std::move(col_ids)),
      entries_(rows_ * cols_) {}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(col_ids_, row_ids_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> columns) const {
  std::vector<std::string> ids;
  ids.reserve(columns.size());
  for (std::size_t c : columns) ids.push_back(col_ids_.at(c));
  RatMatrix out(row_ids_, std::move(ids));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  return out;
}

RationalVector RatMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw ValidationError("matrix-vector size mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

namespace {

// Reduced row echelon form in place over an augmented block of `cols` columns
// (extra trailing columns are carried along). Pivot: first nonzero entry of
// the lowest row at or below the current row, scanning columns left to right.
std::vector<std::size_t> reduce(std::vector<RationalVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t found = next;
    while (found < rows.size() && sgn(rows[found][c]) == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    const Rational inv = 1 / rows[next][c];
    for (auto& v : rows[next]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || sgn(rows[r][c]) == 0) continue;
      const Rational factor = rows[r][c];
      for (std::size_t k = c; k < rows[r].size(); ++k) rows[r][k] -= factor * rows[next][k];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::vector<RationalVector> as_rows(const RatMatrix& m, std::size_t extra) {
  std::vector<RationalVector> rows(m.rows(), RationalVector(m.cols() + extra));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

}  // namespace

RankNullity rank_nullity(const RatMatrix& m) {
  auto rows = as_rows(m, 0);
  const std::size_t rank = reduce(rows, m.cols()).size();
  return {rank, m.cols() - rank};
}

LinSolveResult solve_affine(const RatMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows())
    throw ValidationError("rhs has " + std::to_string(rhs.size()) + " entries, matrix has " +
                          std::to_string(m.rows()) + " rows");
  auto rows = as_rows(m, 1);
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r][m.cols()] = rhs[r];
  const auto pivots = reduce(rows, m.cols());

  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (sgn(rows[r][m.cols()]) != 0) return Infeasible{};

  AffineSolution sol;
  sol.particular.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = rows[i][m.cols()];

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector k(m.cols());
    k[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -rows[i][free];
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

}  // namespace fpbm
