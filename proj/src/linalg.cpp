#include "supermorita/linalg.hpp"

#include "supermorita/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supermorita {

namespace {

constexpr std::size_t kParallelCells = 1u << 14;

// Eliminate column `pc` from every row except `pr` (the pivot row, already
// normalized to 1). Row operations are independent, hence the parallel loop.
void eliminate(Matrix& m, Matrix* t, std::size_t pr, std::size_t pc, bool parallel) {
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(m.rows());
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
      const std::size_t r = static_cast<std::size_t>(i);
      if (r == pr || m.at(r, pc).is_zero()) continue;
      Scalar factor = -m.at(r, pc);
      m.add_scaled_row(r, pr, factor);
      if (t) t->add_scaled_row(r, pr, factor);
    }
    return;
  }
#else
  (void)parallel;
#endif
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const std::size_t r = static_cast<std::size_t>(i);
    if (r == pr || m.at(r, pc).is_zero()) continue;
    Scalar factor = -m.at(r, pc);
    m.add_scaled_row(r, pr, factor);
    if (t) t->add_scaled_row(r, pr, factor);
  }
}

}  // namespace

Rref rref(const Matrix& a, bool track_transform, ExecMode mode) {
  Rref out;
  out.mat = a;
  Matrix transform;
  Matrix* t = nullptr;
  if (track_transform) {
    transform = Matrix::identity(a.field(), a.rows());
    t = &transform;
  }
  bool parallel = false;
#ifdef _OPENMP
  parallel = mode == ExecMode::Parallel ||
             (mode == ExecMode::Auto && parallel_kernels_enabled() &&
              a.rows() * a.cols() >= kParallelCells);
#else
  (void)mode;
#endif

  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < a.cols() && pr < a.rows(); ++pc) {
    std::size_t hit = a.rows();
    for (std::size_t r = pr; r < a.rows(); ++r)
      if (!out.mat.at(r, pc).is_zero()) {
        hit = r;
        break;
      }
    if (hit == a.rows()) continue;
    out.mat.swap_rows(pr, hit);
    if (t) t->swap_rows(pr, hit);
    Scalar inv = out.mat.at(pr, pc).inverse();
    out.mat.scale_row(pr, inv);
    if (t) t->scale_row(pr, inv);
    eliminate(out.mat, t, pr, pc, parallel);
    out.pivot_cols.push_back(pc);
    ++pr;
  }
  out.rank = out.pivot_cols.size();
  if (track_transform) out.transform = std::move(transform);
  return out;
}

Matrix kernel_basis(const Matrix& a, ExecMode mode) {
  Rref r = rref(a, false, mode);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(a.field(), a.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    k.at(fc, j) = Scalar::one(a.field());
    for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
      k.at(r.pivot_cols[pi], j) = -r.mat.at(pi, fc);
  }
  return k;
}

Solution solve(const Matrix& a, const Matrix& b, ExecMode mode) {
  if (a.field() != b.field()) throw FieldMismatch("solve over different fields");
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: rhs row count");
  Solution s;
  Rref r = rref(a.hstack(b), true, mode);
  // A pivot in the appended block certifies infeasibility of that rhs.
  for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi) {
    if (r.pivot_cols[pi] >= a.cols()) {
      s.solvable = false;
      s.certificate = r.transform->row(pi);
      return s;
    }
  }
  s.solvable = true;
  s.particular = Matrix(a.field(), a.cols(), b.cols());
  for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
    for (std::size_t j = 0; j < b.cols(); ++j)
      s.particular.at(r.pivot_cols[pi], j) = r.mat.at(pi, a.cols() + j);
  s.kernel = kernel_basis(a, mode);
  return s;
}

std::size_t rank_of(const Matrix& a) { return rref(a).rank; }

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("inverse of non-square matrix");
  Rref r = rref(a, true);
  if (r.rank != a.rows()) throw IllDefined("inverse of singular matrix");
  return *r.transform;
}

Matrix column_space_rcef(const Matrix& a) {
  Rref r = rref(a.transpose());
  Matrix rows(a.field(), r.rank, a.rows());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) rows.at(i, j) = r.mat.at(i, j);
  return rows.transpose();
}

bool in_column_span(const Matrix& basis, const Matrix& v) {
  return solve(basis, v).solvable;
}

}  // namespace supermorita
