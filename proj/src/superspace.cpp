#include "supermorita/superspace.hpp"

#include "supermorita/errors.hpp"

namespace supermorita {

SuperSpace SuperSpace::make(const FieldSpec& f, std::size_t m, std::size_t n,
                            const std::string& prefix) {
  SuperSpace v;
  v.field = f;
  v.dim_even = m;
  v.dim_odd = n;
  v.labels.reserve(m + n);
  for (std::size_t i = 0; i < m + n; ++i) v.labels.push_back(prefix + std::to_string(i));
  return v;
}

SuperSpace SuperSpace::make(const FieldSpec& f, std::size_t m, std::size_t n,
                            std::vector<std::string> labels) {
  if (labels.size() != m + n) throw ShapeMismatch("label count != dimension");
  SuperSpace v;
  v.field = f;
  v.dim_even = m;
  v.dim_odd = n;
  v.labels = std::move(labels);
  return v;
}

std::string SuperSpace::fmt_dims() const {
  return std::to_string(dim_even) + "|" + std::to_string(dim_odd);
}

Matrix parity_sign_matrix(const SuperSpace& v) {
  Matrix j = Matrix::identity(v.field, v.dim());
  for (std::size_t i = v.dim_even; i < v.dim(); ++i) j.at(i, i) = -j.at(i, i);
  return j;
}

namespace {
const std::string kPiMark = "~";
std::string pi_label(const std::string& l) {
  if (l.rfind(kPiMark, 0) == 0) return l.substr(kPiMark.size());
  return kPiMark + l;
}
}  // namespace

SuperSpace pi_space(const SuperSpace& v) {
  SuperSpace p;
  p.field = v.field;
  p.dim_even = v.dim_odd;
  p.dim_odd = v.dim_even;
  p.labels.reserve(v.dim());
  for (std::size_t i = v.dim_even; i < v.dim(); ++i) p.labels.push_back(pi_label(v.labels[i]));
  for (std::size_t i = 0; i < v.dim_even; ++i) p.labels.push_back(pi_label(v.labels[i]));
  return p;
}

Matrix pi_swap_matrix(const SuperSpace& v) {
  std::vector<std::size_t> perm(v.dim());
  for (std::size_t i = 0; i < v.dim_even; ++i) perm[i] = v.dim_odd + i;
  for (std::size_t i = v.dim_even; i < v.dim(); ++i) perm[i] = i - v.dim_even;
  return Matrix::permutation(v.field, perm);
}

GradedMap::GradedMap(SuperSpace src, SuperSpace tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), mat(std::move(m)) {
  if (mat.rows() != target.dim() || mat.cols() != source.dim())
    throw ShapeMismatch("graded map matrix is " + std::to_string(mat.rows()) + "x" +
                        std::to_string(mat.cols()) + ", expected " +
                        std::to_string(target.dim()) + "x" + std::to_string(source.dim()));
  if (mat.field() != source.field || source.field != target.field)
    throw FieldMismatch("graded map field");
}

GradedMap GradedMap::identity(const SuperSpace& v) {
  return GradedMap(v, v, Matrix::identity(v.field, v.dim()));
}

GradedMap GradedMap::zero(const SuperSpace& src, const SuperSpace& tgt) {
  return GradedMap(src, tgt, Matrix(src.field, tgt.dim(), src.dim()));
}

std::pair<GradedMap, GradedMap> GradedMap::graded_parts() const {
  Matrix even(mat.field(), mat.rows(), mat.cols());
  Matrix odd(mat.field(), mat.rows(), mat.cols());
  for (std::size_t r = 0; r < mat.rows(); ++r)
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      if (target.parity(r) == source.parity(c))
        even.at(r, c) = mat.at(r, c);
      else
        odd.at(r, c) = mat.at(r, c);
    }
  return {GradedMap(source, target, even), GradedMap(source, target, odd)};
}

bool GradedMap::is_even() const {
  auto [e, o] = graded_parts();
  return o.mat.is_zero();
}

bool GradedMap::is_odd() const {
  auto [e, o] = graded_parts();
  return e.mat.is_zero();
}

std::optional<int> GradedMap::homogeneous_parity() const {
  auto [e, o] = graded_parts();
  bool ez = e.mat.is_zero(), oz = o.mat.is_zero();
  if (oz) return 0;  // zero map counts as even
  if (ez) return 1;
  return std::nullopt;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (!(inner.target == source)) throw ShapeMismatch("compose: middle space mismatch");
  return GradedMap(inner.source, target, mat * inner.mat);
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  return GradedMap(source, target, mat + o.mat);
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
  return GradedMap(source, target, mat - o.mat);
}

GradedMap GradedMap::scaled(const Scalar& s) const {
  return GradedMap(source, target, mat.scaled(s));
}

bool GradedMap::is_bijective() const {
  return source.dim() == target.dim() && rank() == source.dim();
}

Subspace Subspace::span(const SuperSpace& ambient, const Matrix& vectors) {
  if (vectors.rows() != ambient.dim()) throw ShapeMismatch("span: vector dimension");
  Subspace s;
  s.ambient = ambient;
  Matrix whole = column_space_rcef(vectors);

  // Graded part per parity: combinations supported on one block only.
  auto block_part = [&](int par) {
    std::vector<std::size_t> other;
    for (std::size_t i = 0; i < ambient.dim(); ++i)
      if (ambient.parity(i) != par) other.push_back(i);
    Matrix constraint = whole.sub_rows(other);
    Matrix combo = kernel_basis(constraint);
    return column_space_rcef(whole * combo);
  };
  Matrix even = block_part(0), odd = block_part(1);
  if (even.cols() + odd.cols() == whole.cols()) {
    s.homogeneous = true;
    s.dim_even = even.cols();
    s.dim_odd = odd.cols();
    s.basis = even.hstack(odd);
  } else {
    s.homogeneous = false;
    s.basis = whole;
  }
  return s;
}

Subspace Subspace::zero(const SuperSpace& ambient) {
  return span(ambient, Matrix(ambient.field, ambient.dim(), 0));
}

Subspace Subspace::full(const SuperSpace& ambient) {
  return span(ambient, Matrix::identity(ambient.field, ambient.dim()));
}

bool Subspace::contains(const Matrix& v) const { return in_column_span(basis, v); }

bool Subspace::contains_all(const Matrix& vectors) const {
  return solve(basis, vectors).solvable;
}

bool Subspace::equals(const Subspace& o) const {
  if (!(ambient == o.ambient)) return false;
  if (homogeneous != o.homogeneous) return false;
  return basis == o.basis;
}

std::string Subspace::fmt_dims() const {
  if (homogeneous) return std::to_string(dim_even) + "|" + std::to_string(dim_odd);
  return std::to_string(dim()) + " (not graded)";
}

QuotientResult quotient(const SuperSpace& ambient, const Subspace& rel) {
  if (!(rel.ambient == ambient)) throw ShapeMismatch("quotient: ambient mismatch");
  if (!rel.homogeneous)
    throw NonHomogeneousRelations("quotient by a non-graded subspace has no induced grading");
  const FieldSpec& f = ambient.field;

  // Pivot rows of the relation basis, per parity block. The complementary
  // unit vectors represent the quotient.
  std::vector<bool> is_pivot(ambient.dim(), false);
  {
    Rref r = rref(rel.basis.transpose());
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  }
  std::vector<std::size_t> survivors;
  std::size_t even = 0, odd = 0;
  for (std::size_t i = 0; i < ambient.dim(); ++i)
    if (!is_pivot[i]) {
      survivors.push_back(i);
      (ambient.parity(i) == 0 ? even : odd)++;
    }

  std::vector<std::string> labels;
  for (std::size_t i : survivors) labels.push_back("[" + ambient.label(i) + "]");
  QuotientResult q;
  q.space = SuperSpace::make(f, even, odd, std::move(labels));

  Matrix section(f, ambient.dim(), survivors.size());
  for (std::size_t j = 0; j < survivors.size(); ++j)
    section.at(survivors[j], j) = Scalar::one(f);

  // [rel | section] is square invertible; the projection reads off the
  // section coordinates.
  Matrix m = rel.basis.hstack(section);
  if (m.rows() != m.cols()) throw IllDefined("quotient: relation basis not independent");
  Matrix minv = inverse(m);
  Matrix proj(f, survivors.size(), ambient.dim());
  for (std::size_t i = 0; i < survivors.size(); ++i)
    for (std::size_t j = 0; j < ambient.dim(); ++j)
      proj.at(i, j) = minv.at(rel.basis.cols() + i, j);

  q.projection = GradedMap(ambient, q.space, std::move(proj));
  q.section = GradedMap(q.space, ambient, std::move(section));
  return q;
}

PairBasis PairBasis::make(const SuperSpace& u, const SuperSpace& v, const std::string& sep) {
  if (u.field != v.field) throw FieldMismatch("pair basis over different fields");
  PairBasis pb;
  pb.dim_u = u.dim();
  pb.dim_v = v.dim();
  const std::size_t total = pb.dim_u * pb.dim_v;
  pb.to_canon.assign(total, 0);
  pb.from_canon.reserve(total);

  std::vector<std::string> labels;
  std::size_t even = 0;
  for (int par = 0; par <= 1; ++par)
    for (std::size_t a = 0; a < pb.dim_u; ++a)
      for (std::size_t b = 0; b < pb.dim_v; ++b) {
        if (((u.parity(a) + v.parity(b)) & 1) != par) continue;
        pb.to_canon[a * pb.dim_v + b] = pb.from_canon.size();
        pb.from_canon.emplace_back(a, b);
        labels.push_back(u.label(a) + sep + v.label(b));
        if (par == 0) ++even;
      }
  pb.space = SuperSpace::make(u.field, even, total - even, std::move(labels));
  return pb;
}

Matrix PairBasis::pure(const Matrix& x, const Matrix& y) const {
  if (x.rows() != dim_u || y.rows() != dim_v || x.cols() != 1 || y.cols() != 1)
    throw ShapeMismatch("pure tensor operand shape");
  Matrix out(space.field, space.dim(), 1);
  for (std::size_t a = 0; a < dim_u; ++a) {
    if (x.at(a, 0).is_zero()) continue;
    for (std::size_t b = 0; b < dim_v; ++b) {
      if (y.at(b, 0).is_zero()) continue;
      out.at(index(a, b), 0) += x.at(a, 0) * y.at(b, 0);
    }
  }
  return out;
}

Matrix kron_signed(const PairBasis& target, const PairBasis& source,
                   const GradedMap& f, const GradedMap& g) {
  if (f.source.dim() != source.dim_u || g.source.dim() != source.dim_v ||
      f.target.dim() != target.dim_u || g.target.dim() != target.dim_v)
    throw ShapeMismatch("kron_signed operand shapes");
  const FieldSpec& ff = f.mat.field();
  Matrix out(ff, target.space.dim(), source.space.dim());
  auto [ge, go] = g.graded_parts();
  const Matrix* parts[2] = {&ge.mat, &go.mat};
  for (int gp = 0; gp <= 1; ++gp) {
    const Matrix& gm = *parts[gp];
    if (gm.is_zero()) continue;
    for (std::size_t a = 0; a < source.dim_u; ++a) {
      const int sign = koszul_sign(gp, f.source.parity(a));
      for (std::size_t r = 0; r < target.dim_u; ++r) {
        const Scalar& fra = f.mat.at(r, a);
        if (fra.is_zero()) continue;
        Scalar factor = sign < 0 ? -fra : fra;
        for (std::size_t b = 0; b < source.dim_v; ++b)
          for (std::size_t s = 0; s < target.dim_v; ++s) {
            const Scalar& gsb = gm.at(s, b);
            if (gsb.is_zero()) continue;
            out.at(target.index(r, s), source.index(a, b)) += factor * gsb;
          }
      }
    }
  }
  return out;
}

Matrix kron_plain(const PairBasis& target, const PairBasis& source,
                  const Matrix& f, const Matrix& g) {
  if (f.cols() != source.dim_u || g.cols() != source.dim_v ||
      f.rows() != target.dim_u || g.rows() != target.dim_v)
    throw ShapeMismatch("kron_plain operand shapes");
  Matrix out(f.field(), target.space.dim(), source.space.dim());
  for (std::size_t a = 0; a < source.dim_u; ++a)
    for (std::size_t r = 0; r < target.dim_u; ++r) {
      const Scalar& fra = f.at(r, a);
      if (fra.is_zero()) continue;
      for (std::size_t b = 0; b < source.dim_v; ++b)
        for (std::size_t s = 0; s < target.dim_v; ++s) {
          const Scalar& gsb = g.at(s, b);
          if (gsb.is_zero()) continue;
          out.at(target.index(r, s), source.index(a, b)) += fra * gsb;
        }
    }
  return out;
}

}  // namespace supermorita
