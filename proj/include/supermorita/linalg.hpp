#pragma once

#include <optional>
#include <vector>

#include "supermorita/matrix.hpp"

namespace supermorita {

// Reduced row echelon form with deterministic leftmost pivots (first nonzero
// row at or below the cursor wins). Exact arithmetic makes the result
// identical for the serial and parallel elimination kernels.
struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivot_cols;  // one per pivot row, increasing
  std::size_t rank = 0;
  // T with T * input = mat; tracked only on request.
  std::optional<Matrix> transform;
};

Rref rref(const Matrix& a, bool track_transform = false, ExecMode mode = ExecMode::Auto);

// Solution of A X = B with a kernel basis of A. When unsolvable, certificate
// holds a row vector y with y A = 0 and y B != 0 (exact infeasibility proof).
struct Solution {
  bool solvable = false;
  Matrix particular;  // cols(A) x cols(B)
  Matrix kernel;      // cols(A) x nullity
  std::optional<Matrix> certificate;
};

Solution solve(const Matrix& a, const Matrix& b, ExecMode mode = ExecMode::Auto);

// Canonical kernel basis: for each free column, the vector with 1 there and
// the negated pivot-row coefficients above; columns ordered by free column.
Matrix kernel_basis(const Matrix& a, ExecMode mode = ExecMode::Auto);

std::size_t rank_of(const Matrix& a);

Matrix inverse(const Matrix& a);  // throws ShapeMismatch / IllDefined if singular

// Canonical basis of the column space: reduced column echelon form (RREF of
// the transpose, transposed back, zero columns dropped). Two column spans are
// equal iff their rcef matrices are equal.
Matrix column_space_rcef(const Matrix& a);

// Is v in the column span of basis (any matrix, not necessarily canonical)?
bool in_column_span(const Matrix& basis, const Matrix& v);

}  // namespace supermorita
