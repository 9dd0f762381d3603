#pragma once

#include <memory>
#include <string>
#include <vector>

#include "supermorita/rng.hpp"
#include "supermorita/superspace.hpp"

namespace supermorita {

// Unital associative superalgebra presented by structure constants. The
// tensor is stored as the left–regular representation: left_mult[i] is the
// matrix of x -> e_i x, so its column j holds the coordinates of e_i e_j.
struct SuperAlgebra {
  SuperSpace space;
  std::string name;
  Matrix unit;                    // dim x 1
  std::vector<Matrix> left_mult;  // one dim x dim matrix per basis element

  std::size_t dim() const { return space.dim(); }
  int parity(std::size_t i) const { return space.parity(i); }
  const FieldSpec& field() const { return space.field; }

  Matrix product(std::size_t i, std::size_t j) const { return left_mult[i].col(j); }
  Matrix right_mult(std::size_t j) const;             // matrix of x -> x e_j
  Matrix left_mult_of(const Matrix& x) const;         // Σ x_i left_mult[i]
  Matrix right_mult_of(const Matrix& x) const;
  Matrix mul(const Matrix& x, const Matrix& y) const;
  bool is_unit_vector(const Matrix& x) const { return x == unit; }

  bool structurally_equal(const SuperAlgebra& o) const;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  std::string summary() const;
};

// Axioms: shape, grading compatibility (e_i e_j lands in parity |i|+|j|),
// associativity on basis triples (via the regular representation), two-sided
// even unit. Failures carry a witness.
ValidationReport validate_algebra(const SuperAlgebra& a);

SuperAlgebra opposite(const SuperAlgebra& a);
AlgebraPtr opposite_ptr(const AlgebraPtr& a);

struct TensorAlgebraResult {
  SuperAlgebra algebra;
  PairBasis pairs;
};

// A ⊗ B with (a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd; basis pairs reordered into
// canonical parity blocks with the permutation recorded in `pairs`.
TensorAlgebraResult tensor_algebra(const SuperAlgebra& a, const SuperAlgebra& b);

// Homogeneous solution space of e_i x = (-1)^{|e_i||x|} x e_i for all i.
Subspace supercenter(const SuperAlgebra& a);
bool supercenter_is_trivial(const SuperAlgebra& a);

// End_k(k^{m|n}): matrix units E_{uv} with parity |u|+|v|, evens first.
SuperAlgebra matrix_superalgebra(std::size_t m, std::size_t n, const FieldSpec& f);

// k[θ], θ odd, θ² = −1.
SuperAlgebra super_skew_field(const FieldSpec& f);

// k[x]/(x²), purely even; the stock non-semisimple example.
SuperAlgebra dual_numbers(const FieldSpec& f);

// k itself as a 1|0 algebra.
SuperAlgebra ground_field_algebra(const FieldSpec& f);

// End_k(V) for a concrete superspace V, with unit-index bookkeeping so that
// operators on V convert to coordinate vectors and back.
struct EndAlgebra {
  SuperAlgebra alg;
  SuperSpace module_space;
  std::vector<std::size_t> unit_index;  // (u,v) -> basis index, lex input

  static EndAlgebra make(const SuperSpace& v, const std::string& name = "");
  std::size_t index(std::size_t u, std::size_t v) const {
    return unit_index[u * module_space.dim() + v];
  }
  Matrix coords_of(const Matrix& op) const;   // operator on V -> coordinates
  Matrix operator_of(const Matrix& coords) const;
};

struct AlgebraMorphism {
  AlgebraPtr source, target;
  Matrix mat;  // target.dim x source.dim

  bool is_bijective() const;
};

// Even + unital + multiplicative on basis pairs; failures reported.
ValidationReport validate_morphism(const AlgebraMorphism& m);

// Semi-decision for absence of proper nonzero homogeneous two-sided ideals:
// closes every basis vector and `extra_samples` seeded random homogeneous
// elements under multiplication and tests that each ideal is everything.
bool simplicity_probe(const SuperAlgebra& a, std::uint64_t seed,
                      std::size_t extra_samples = 4);

// Two-sided ideal generated by a single vector (closure under basis
// multiplication on both sides).
Subspace ideal_closure(const SuperAlgebra& a, const Matrix& v);

}  // namespace supermorita
