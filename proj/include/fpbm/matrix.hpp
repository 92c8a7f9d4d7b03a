#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fpbm/rational.hpp"

namespace fpbm {

/// Dense rational matrix whose rows and columns carry ids (vertex and edge ids,
/// for incidence matrices). Ids are informational and fix the canonical order.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::vector<std::string> row_ids, std::vector<std::string> col_ids);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<std::string>& row_ids() const noexcept { return row_ids_; }
  const std::vector<std::string>& col_ids() const noexcept { return col_ids_; }

  RatMatrix transpose() const;
  /// Submatrix keeping the listed columns, in the listed order.
  RatMatrix select_columns(std::span<const std::size_t> columns) const;
  RationalVector multiply(std::span<const Rational> x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::string> row_ids_;
  std::vector<std::string> col_ids_;
  std::vector<Rational> entries_;
};

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

RankNullity rank_nullity(const RatMatrix& m);

struct Infeasible {};

struct AffineSolution {
  RationalVector particular;
  std::vector<RationalVector> kernel_basis;
};

/// Infeasible when rhs is outside the column space, otherwise a particular
/// solution (free variables zero) and a kernel basis, one vector per free column.
using LinSolveResult = std::variant<Infeasible, AffineSolution>;

/// Throws ValidationError if rhs.size() != m.rows().
LinSolveResult solve_affine(const RatMatrix& m, std::span<const Rational> rhs);

}  // namespace fpbm
