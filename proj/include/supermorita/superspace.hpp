#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supermorita/linalg.hpp"
#include "supermorita/matrix.hpp"

namespace supermorita {

// Finite-dimensional Z2-graded vector space with ordered homogeneous basis.
// Basis order is canonical: indices 0..m-1 even, m..m+n-1 odd, so the parity
// of an index is decidable in O(1). Labels are presentation metadata and do
// not participate in equality.
struct SuperSpace {
  FieldSpec field;
  std::size_t dim_even = 0;
  std::size_t dim_odd = 0;
  std::vector<std::string> labels;

  static SuperSpace make(const FieldSpec& f, std::size_t m, std::size_t n,
                         const std::string& prefix = "e");
  static SuperSpace make(const FieldSpec& f, std::size_t m, std::size_t n,
                         std::vector<std::string> labels);

  std::size_t dim() const { return dim_even + dim_odd; }
  int parity(std::size_t i) const { return i < dim_even ? 0 : 1; }
  const std::string& label(std::size_t i) const { return labels[i]; }
  std::string fmt_dims() const;

  bool operator==(const SuperSpace& o) const {
    return field == o.field && dim_even == o.dim_even && dim_odd == o.dim_odd;
  }
};

// diag(+1 on even coordinates, -1 on odd): the operator m -> (-1)^{|m|} m.
Matrix parity_sign_matrix(const SuperSpace& v);

// The space with reversed grading; labels gain/lose a leading parity-shift
// mark so that applying it twice restores the original labels.
SuperSpace pi_space(const SuperSpace& v);

// Permutation matrix taking coordinates of V to coordinates of pi_space(V)
// (the odd block moves in front of the even block).
Matrix pi_swap_matrix(const SuperSpace& v);

// Linear map between superspaces; column j holds the image of basis vector j.
struct GradedMap {
  SuperSpace source, target;
  Matrix mat;

  GradedMap() = default;
  GradedMap(SuperSpace src, SuperSpace tgt, Matrix m);

  static GradedMap identity(const SuperSpace& v);
  static GradedMap zero(const SuperSpace& src, const SuperSpace& tgt);

  // Even part keeps entries with parity_target(r) == parity_source(c), odd
  // part the complement; the two re-sum to the map.
  std::pair<GradedMap, GradedMap> graded_parts() const;
  bool is_even() const;
  bool is_odd() const;
  // 0, 1, or nullopt for maps that are neither homogeneous (and nonzero).
  std::optional<int> homogeneous_parity() const;

  GradedMap compose(const GradedMap& inner) const;  // this ∘ inner
  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap scaled(const Scalar& s) const;

  std::size_t rank() const { return rank_of(mat); }
  bool is_bijective() const;
};

// Subspace of a superspace in canonical form: columns of `basis` are a
// reduced column echelon basis; when the span is graded, the basis is split
// per parity (even-supported columns first) so equality stays structural.
struct Subspace {
  SuperSpace ambient;
  Matrix basis;
  bool homogeneous = false;
  std::size_t dim_even = 0, dim_odd = 0;  // meaningful when homogeneous

  static Subspace span(const SuperSpace& ambient, const Matrix& vectors);
  static Subspace zero(const SuperSpace& ambient);
  static Subspace full(const SuperSpace& ambient);

  std::size_t dim() const { return basis.cols(); }
  bool contains(const Matrix& v) const;
  bool contains_all(const Matrix& vectors) const;
  bool equals(const Subspace& o) const;
  bool is_full() const { return dim() == ambient.dim(); }
  std::string fmt_dims() const;
};

struct QuotientResult {
  SuperSpace space;
  GradedMap projection;  // ambient -> quotient, even
  GradedMap section;     // quotient -> ambient, projection ∘ section = id
};

// Quotient by a homogeneous subspace; the grading descends. Representatives
// are the non-pivot coordinates of the relation basis, per parity block.
QuotientResult quotient(const SuperSpace& ambient, const Subspace& rel);

// Canonical parity-ordered basis for a tensor product U ⊗ V: lexicographic
// pairs (u,v) stably partitioned into even-first order, with the permutation
// recorded both ways.
struct PairBasis {
  SuperSpace space;
  std::size_t dim_u = 0, dim_v = 0;
  std::vector<std::size_t> to_canon;                    // lex (u*dimV+v) -> canonical
  std::vector<std::pair<std::size_t, std::size_t>> from_canon;

  static PairBasis make(const SuperSpace& u, const SuperSpace& v,
                        const std::string& sep = "*");

  std::size_t index(std::size_t u, std::size_t v) const {
    return to_canon[u * dim_v + v];
  }
  // Embedding of the pure tensor x ⊗ y as a coordinate vector.
  Matrix pure(const Matrix& x, const Matrix& y) const;
};

// Matrix of f ⊗ g on pair bases with the sign rule
// (f⊗g)(u⊗v) = (-1)^{|g||u|} f(u) ⊗ g(v); g need not be homogeneous (its
// graded parts are summed), f never needs to be.
Matrix kron_signed(const PairBasis& target, const PairBasis& source,
                   const GradedMap& f, const GradedMap& g);

// Plain Kronecker on pair bases, no signs: used for the outer module actions
// on tensor products, where nothing transposes past anything.
Matrix kron_plain(const PairBasis& target, const PairBasis& source,
                  const Matrix& f, const Matrix& g);

}  // namespace supermorita
