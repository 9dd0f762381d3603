#include "supermorita/superring.hpp"

#include <sstream>

#include "supermorita/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supermorita {

Matrix SuperAlgebra::right_mult(std::size_t j) const {
  Matrix r(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) r.set_col(i, left_mult[i].col(j));
  return r;
}

Matrix SuperAlgebra::left_mult_of(const Matrix& x) const {
  Matrix out(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x.at(i, 0).is_zero()) continue;
    out = out + left_mult[i].scaled(x.at(i, 0));
  }
  return out;
}

Matrix SuperAlgebra::right_mult_of(const Matrix& x) const {
  Matrix out(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (x.at(j, 0).is_zero()) continue;
    out = out + right_mult(j).scaled(x.at(j, 0));
  }
  return out;
}

Matrix SuperAlgebra::mul(const Matrix& x, const Matrix& y) const {
  return left_mult_of(x) * y;
}

bool SuperAlgebra::structurally_equal(const SuperAlgebra& o) const {
  if (!(space == o.space) || unit != o.unit) return false;
  return left_mult == o.left_mult;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "pass " : "FAIL ") << c.axiom;
    if (!c.pass && !c.witness.empty()) os << " [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

ValidationReport validate_algebra(const SuperAlgebra& a) {
  ValidationReport rep;
  const std::size_t d = a.dim();

  AxiomCheck shape{"shape", true, ""};
  if (a.unit.rows() != d || a.unit.cols() != 1 || a.left_mult.size() != d) {
    shape.pass = false;
    shape.witness = "structure tensor shape does not match dimension";
  } else {
    for (std::size_t i = 0; i < d && shape.pass; ++i)
      if (a.left_mult[i].rows() != d || a.left_mult[i].cols() != d) {
        shape.pass = false;
        shape.witness = "left_mult[" + std::to_string(i) + "] shape";
      }
  }
  rep.checks.push_back(shape);
  if (!shape.pass) return rep;

  AxiomCheck grading{"grading", true, ""};
  for (std::size_t i = 0; i < d && grading.pass; ++i)
    for (std::size_t j = 0; j < d && grading.pass; ++j) {
      int want = (a.parity(i) + a.parity(j)) & 1;
      for (std::size_t t = 0; t < d; ++t)
        if (a.parity(t) != want && !a.left_mult[i].at(t, j).is_zero()) {
          grading.pass = false;
          grading.witness = "(" + a.space.label(i) + ", " + a.space.label(j) +
                            ") -> component " + a.space.label(t);
          break;
        }
    }
  rep.checks.push_back(grading);

  // (e_i e_j) e_l = e_i (e_j e_l) for all l  <=>  L_{e_i e_j} = L_i L_j.
  AxiomCheck assoc{"associativity", true, ""};
  for (std::size_t i = 0; i < d && assoc.pass; ++i)
    for (std::size_t j = 0; j < d && assoc.pass; ++j) {
      Matrix lhs = a.left_mult_of(a.product(i, j));
      Matrix rhs = a.left_mult[i] * a.left_mult[j];
      if (lhs != rhs) {
        assoc.pass = false;
        for (std::size_t l = 0; l < d; ++l)
          if (lhs.col(l) != rhs.col(l)) {
            assoc.witness = "(" + a.space.label(i) + ", " + a.space.label(j) + ", " +
                            a.space.label(l) + ")";
            break;
          }
      }
    }
  rep.checks.push_back(assoc);

  AxiomCheck unit{"unit", true, ""};
  for (std::size_t t = a.space.dim_even; t < d; ++t)
    if (!a.unit.at(t, 0).is_zero()) {
      unit.pass = false;
      unit.witness = "unit has odd component " + a.space.label(t);
    }
  if (unit.pass) {
    Matrix lu = a.left_mult_of(a.unit);
    Matrix ru = a.right_mult_of(a.unit);
    Matrix id = Matrix::identity(a.field(), d);
    if (lu != id || ru != id) {
      unit.pass = false;
      unit.witness = lu != id ? "1*x != x" : "x*1 != x";
    }
  }
  rep.checks.push_back(unit);
  return rep;
}

namespace {
const std::string kOpMark = "^op";
std::string op_name(const std::string& n) {
  if (n.size() >= kOpMark.size() &&
      n.compare(n.size() - kOpMark.size(), kOpMark.size(), kOpMark) == 0)
    return n.substr(0, n.size() - kOpMark.size());
  return n + kOpMark;
}
}  // namespace

SuperAlgebra opposite(const SuperAlgebra& a) {
  SuperAlgebra o;
  o.space = a.space;
  o.name = op_name(a.name);
  o.unit = a.unit;
  o.left_mult.reserve(a.dim());
  // x ·op y = (-1)^{|x||y|} y x, so Lop_i = R_i J^{|i|}.
  Matrix j = parity_sign_matrix(a.space);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix r = a.right_mult(i);
    o.left_mult.push_back(a.parity(i) == 1 ? r * j : r);
  }
  return o;
}

AlgebraPtr opposite_ptr(const AlgebraPtr& a) {
  return std::make_shared<const SuperAlgebra>(opposite(*a));
}

TensorAlgebraResult tensor_algebra(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("tensor of algebras over different fields");
  TensorAlgebraResult out;
  out.pairs = PairBasis::make(a.space, b.space, "*");
  const PairBasis& pb = out.pairs;
  const std::size_t d = pb.space.dim();
  const FieldSpec& f = a.field();

  SuperAlgebra t;
  t.space = pb.space;
  t.name = a.name + "(x)" + b.name;
  t.unit = pb.pure(a.unit, b.unit);
  t.left_mult.assign(d, Matrix(f, d, d));
  // (a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd
  for (std::size_t p = 0; p < d; ++p) {
    auto [i, j] = pb.from_canon[p];
    Matrix& lp = t.left_mult[p];
    for (std::size_t q = 0; q < d; ++q) {
      auto [k, l] = pb.from_canon[q];
      int sign = koszul_sign(b.parity(j), a.parity(k));
      Matrix ac = a.product(i, k);
      Matrix bd = b.product(j, l);
      Matrix col = pb.pure(ac, bd);
      if (sign < 0) col = -col;
      lp.set_col(q, col);
    }
  }
  out.algebra = std::move(t);
  return out;
}

Subspace supercenter(const SuperAlgebra& a) {
  const std::size_t d = a.dim();
  const FieldSpec& f = a.field();
  std::vector<Matrix> found;
  for (int par = 0; par <= 1; ++par) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < d; ++c)
      if (a.parity(c) == par) cols.push_back(c);
    if (cols.empty()) continue;
    Matrix stack(f, 0, cols.size());
    for (std::size_t i = 0; i < d; ++i) {
      Matrix diff = a.left_mult[i] - a.right_mult(i).scaled(koszul(a.parity(i), par, f));
      stack = stack.vstack(diff.sub_cols(cols));
    }
    Matrix ker = kernel_basis(stack);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      Matrix v(f, d, 1);
      for (std::size_t c = 0; c < cols.size(); ++c) v.at(cols[c], 0) = ker.at(c, j);
      found.push_back(v);
    }
  }
  return Subspace::span(a.space, Matrix::from_columns(f, d, found));
}

bool supercenter_is_trivial(const SuperAlgebra& a) {
  Subspace z = supercenter(a);
  return z.dim() == 1 && z.contains(a.unit);
}

SuperAlgebra matrix_superalgebra(std::size_t m, std::size_t n, const FieldSpec& f) {
  SuperSpace v = SuperSpace::make(f, m, n, "v");
  EndAlgebra e = EndAlgebra::make(v, "M" + std::to_string(m) + "|" + std::to_string(n));
  return e.alg;
}

EndAlgebra EndAlgebra::make(const SuperSpace& v, const std::string& name) {
  EndAlgebra e;
  e.module_space = v;
  const std::size_t d = v.dim();
  const FieldSpec& f = v.field;
  e.unit_index.assign(d * d, 0);

  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::size_t even = 0;
  for (int par = 0; par <= 1; ++par)
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t w = 0; w < d; ++w) {
        if (((v.parity(u) + v.parity(w)) & 1) != par) continue;
        e.unit_index[u * d + w] = order.size();
        order.emplace_back(u, w);
        labels.push_back("E" + std::to_string(u) + std::to_string(w));
        if (par == 0) ++even;
      }

  SuperAlgebra alg;
  alg.space = SuperSpace::make(f, even, d * d - even, std::move(labels));
  alg.name = name.empty() ? "End(" + v.fmt_dims() + ")" : name;
  alg.unit = Matrix(f, d * d, 1);
  for (std::size_t u = 0; u < d; ++u) alg.unit.at(e.index(u, u), 0) = Scalar::one(f);
  alg.left_mult.assign(d * d, Matrix(f, d * d, d * d));
  // E_{uv} E_{wx} = δ_{vw} E_{ux}
  for (std::size_t p = 0; p < d * d; ++p) {
    auto [u, vv] = order[p];
    for (std::size_t w = 0; w < d; ++w) {
      if (w != vv) continue;
      for (std::size_t x = 0; x < d; ++x)
        alg.left_mult[p].at(e.index(u, x), e.index(w, x)) = Scalar::one(f);
    }
  }
  e.alg = std::move(alg);
  return e;
}

Matrix EndAlgebra::coords_of(const Matrix& op) const {
  const std::size_t d = module_space.dim();
  if (op.rows() != d || op.cols() != d) throw ShapeMismatch("EndAlgebra::coords_of shape");
  Matrix c(module_space.field, d * d, 1);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t w = 0; w < d; ++w) c.at(index(u, w), 0) = op.at(u, w);
  return c;
}

Matrix EndAlgebra::operator_of(const Matrix& coords) const {
  const std::size_t d = module_space.dim();
  if (coords.rows() != d * d || coords.cols() != 1)
    throw ShapeMismatch("EndAlgebra::operator_of shape");
  Matrix op(module_space.field, d, d);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t w = 0; w < d; ++w) op.at(u, w) = coords.at(index(u, w), 0);
  return op;
}

SuperAlgebra super_skew_field(const FieldSpec& f) {
  SuperAlgebra d;
  d.space = SuperSpace::make(f, 1, 1, std::vector<std::string>{"1", "th"});
  d.name = "D";
  d.unit = Matrix::unit_column(f, 2, 0);
  Matrix l0 = Matrix::identity(f, 2);
  Matrix l1(f, 2, 2);
  l1.at(1, 0) = Scalar::one(f);        // θ·1 = θ
  l1.at(0, 1) = -Scalar::one(f);       // θ·θ = −1
  d.left_mult = {l0, l1};
  return d;
}

SuperAlgebra dual_numbers(const FieldSpec& f) {
  SuperAlgebra d;
  d.space = SuperSpace::make(f, 2, 0, std::vector<std::string>{"1", "x"});
  d.name = "dual-numbers";
  d.unit = Matrix::unit_column(f, 2, 0);
  Matrix l0 = Matrix::identity(f, 2);
  Matrix l1(f, 2, 2);
  l1.at(1, 0) = Scalar::one(f);  // x·1 = x, x·x = 0
  d.left_mult = {l0, l1};
  return d;
}

SuperAlgebra ground_field_algebra(const FieldSpec& f) {
  SuperAlgebra k;
  k.space = SuperSpace::make(f, 1, 0, std::vector<std::string>{"1"});
  k.name = "k";
  k.unit = Matrix::unit_column(f, 1, 0);
  k.left_mult = {Matrix::identity(f, 1)};
  return k;
}

bool AlgebraMorphism::is_bijective() const {
  return source->dim() == target->dim() && rank_of(mat) == mat.cols();
}

ValidationReport validate_morphism(const AlgebraMorphism& m) {
  ValidationReport rep;
  const SuperAlgebra& a = *m.source;
  const SuperAlgebra& b = *m.target;
  GradedMap g(a.space, b.space, m.mat);

  rep.checks.push_back({"even", g.is_even(), ""});
  rep.checks.push_back({"unital", m.mat * a.unit == b.unit, ""});

  AxiomCheck mult{"multiplicative", true, ""};
  const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(a.dim());
  std::vector<Matrix> images;
  images.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(m.mat.col(i));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < d; ++i) {
    Matrix lhs_left = b.left_mult_of(images[static_cast<std::size_t>(i)]);
    for (std::ptrdiff_t j = 0; j < d; ++j) {
      Matrix lhs = m.mat * a.product(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      Matrix rhs = lhs_left * images[static_cast<std::size_t>(j)];
      if (lhs != rhs) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          mult.pass = false;
          if (mult.witness.empty())
            mult.witness = "(" + a.space.label(static_cast<std::size_t>(i)) + ", " +
                           a.space.label(static_cast<std::size_t>(j)) + ")";
        }
      }
    }
  }
  rep.checks.push_back(mult);
  return rep;
}

Subspace ideal_closure(const SuperAlgebra& a, const Matrix& v) {
  Subspace span = Subspace::span(a.space, v);
  for (;;) {
    std::vector<Matrix> next;
    for (std::size_t j = 0; j < span.basis.cols(); ++j) {
      Matrix w = span.basis.col(j);
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix lw = a.left_mult[i] * w;
        Matrix rw = a.right_mult(i) * w;
        if (!span.contains(lw)) next.push_back(lw);
        if (!span.contains(rw)) next.push_back(rw);
      }
    }
    if (next.empty()) return span;
    Matrix all = span.basis;
    for (const Matrix& w : next) all = all.hstack(w);
    span = Subspace::span(a.space, all);
  }
}

bool simplicity_probe(const SuperAlgebra& a, std::uint64_t seed, std::size_t extra_samples) {
  if (a.dim() == 0) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!ideal_closure(a, Matrix::unit_column(a.field(), a.dim(), i)).is_full()) return false;
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < extra_samples; ++s) {
    const int par = rng.parity();
    Matrix v(a.field(), a.dim(), 1);
    bool nonzero = false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.parity(i) != par) continue;
      v.at(i, 0) = rng.scalar(a.field());
      nonzero = nonzero || !v.at(i, 0).is_zero();
    }
    if (!nonzero) continue;
    if (!ideal_closure(a, v).is_full()) return false;
  }
  return true;
}

}  // namespace supermorita
