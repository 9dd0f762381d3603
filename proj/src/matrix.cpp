#include "supermorita/matrix.hpp"

#include <atomic>
#include <sstream>

#include "supermorita/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supermorita {

namespace {
#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif

// Below this many scalar multiplications the parallel kernels are not worth
// the fork/join overhead.
constexpr std::size_t kParallelWork = 1u << 15;
}  // namespace

void set_parallel_kernels(bool enabled) {
#ifdef _OPENMP
  g_parallel = enabled;
#else
  (void)enabled;
  g_parallel = false;
#endif
}

bool parallel_kernels_enabled() { return g_parallel.load(); }

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::unit_column(const FieldSpec& f, std::size_t dim, std::size_t i) {
  Matrix m(f, dim, 1);
  m.at(i, 0) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t dim,
                            const std::vector<Matrix>& cols) {
  Matrix m(f, dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rows() != dim || cols[j].cols() != 1)
      throw ShapeMismatch("from_columns: column " + std::to_string(j) + " has wrong shape");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j].at(i, 0);
  }
  return m;
}

Matrix Matrix::permutation(const FieldSpec& f, const std::vector<std::size_t>& perm) {
  Matrix m(f, perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m.at(perm[i], i) = Scalar::one(f);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (f_ != o.f_) throw FieldMismatch("matrix add over different fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix add shape");
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (f_ != o.f_) throw FieldMismatch("matrix sub over different fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sub shape");
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("matmul over different fields");
  if (a.cols() != b.rows()) throw ShapeMismatch("matmul inner dimension");
  Matrix m(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b, ExecMode mode) {
#ifdef _OPENMP
  bool parallel = mode == ExecMode::Parallel ||
                  (mode == ExecMode::Auto && g_parallel.load() &&
                   a.rows() * a.cols() * b.cols() >= kParallelWork);
  if (parallel) {
    if (a.field() != b.field()) throw FieldMismatch("matmul over different fields");
    if (a.cols() != b.rows()) throw ShapeMismatch("matmul inner dimension");
    Matrix m(a.field(), a.rows(), b.cols());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Scalar& aik = a.at(static_cast<std::size_t>(i), k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const Scalar& bkj = b.at(k, j);
          if (!bkj.is_zero()) m.at(static_cast<std::size_t>(i), j) += aik * bkj;
        }
      }
    return m;
  }
#else
  (void)mode;
#endif
  return matmul_serial(a, b);
}

Matrix Matrix::operator*(const Matrix& o) const { return matmul(*this, o, ExecMode::Auto); }

Matrix Matrix::col(std::size_t j) const {
  Matrix m(f_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
  return m;
}

Matrix Matrix::row(std::size_t i) const {
  Matrix m(f_, 1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) m.at(0, j) = at(i, j);
  return m;
}

void Matrix::set_col(std::size_t j, const Matrix& v) {
  if (v.rows() != rows_ || v.cols() != 1) throw ShapeMismatch("set_col shape");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (f_ != o.f_) throw FieldMismatch("hstack fields");
  if (rows_ != o.rows_) throw ShapeMismatch("hstack rows");
  Matrix m(f_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (f_ != o.f_) throw FieldMismatch("vstack fields");
  if (cols_ != o.cols_) throw ShapeMismatch("vstack cols");
  Matrix m(f_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

Matrix Matrix::sub_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(f_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

Matrix Matrix::sub_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(f_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  return m;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Matrix::scale_row(std::size_t i, const Scalar& s) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = at(i, c) * s;
}

void Matrix::add_scaled_row(std::size_t i, std::size_t j, const Scalar& s) {
  if (s.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) += s * at(j, c);
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

}  // namespace supermorita
