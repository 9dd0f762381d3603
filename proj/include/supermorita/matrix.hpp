#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supermorita/scalar.hpp"

namespace supermorita {

enum class ExecMode { Auto, Serial, Parallel };

// Dense matrix over one exact field, row-major. Dimensions may be zero.
class Matrix {
 public:
  Matrix() : f_(FieldSpec::rationals()), rows_(0), cols_(0) {}
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix unit_column(const FieldSpec& f, std::size_t dim, std::size_t i);
  static Matrix from_columns(const FieldSpec& f, std::size_t dim,
                             const std::vector<Matrix>& cols);
  // P with P(perm[i], i) = 1: relabels coordinate i as perm[i].
  static Matrix permutation(const FieldSpec& f, const std::vector<std::size_t>& perm);

  const FieldSpec& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return at(r, c); }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // size-dispatched serial/parallel
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  Matrix col(std::size_t j) const;
  Matrix row(std::size_t i) const;
  void set_col(std::size_t j, const Matrix& v);
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix sub_cols(const std::vector<std::size_t>& idx) const;
  Matrix sub_rows(const std::vector<std::size_t>& idx) const;

  void swap_rows(std::size_t i, std::size_t j);
  void scale_row(std::size_t i, const Scalar& s);
  // row[i] += s * row[j]
  void add_scaled_row(std::size_t i, std::size_t j, const Scalar& s);

  std::string str() const;

 private:
  FieldSpec f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Matrix matmul(const Matrix& a, const Matrix& b, ExecMode mode);
Matrix matmul_serial(const Matrix& a, const Matrix& b);

// Global switch for the parallel kernels (defaults to on when built with
// OpenMP); Auto mode also requires the problem to be large enough to matter.
void set_parallel_kernels(bool enabled);
bool parallel_kernels_enabled();

}  // namespace supermorita
