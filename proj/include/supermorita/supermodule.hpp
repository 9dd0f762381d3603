#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supermorita/superring.hpp"

namespace supermorita {

enum class Side { Left, Right };

// Finite-dimensional super module; either or both actions may be present
// (bimodules carry both). Actions are stored as one matrix per algebra basis
// element: left_act[i] is m -> e_i·m, right_act[i] is m -> m·e_i.
struct SuperModule {
  SuperSpace space;
  std::string name;
  AlgebraPtr left_alg;   // may be null
  AlgebraPtr right_alg;  // may be null
  std::vector<Matrix> left_act;
  std::vector<Matrix> right_act;

  std::size_t dim() const { return space.dim(); }
  int parity(std::size_t i) const { return space.parity(i); }
  const FieldSpec& field() const { return space.field; }
  bool has_left() const { return left_alg != nullptr; }
  bool has_right() const { return right_alg != nullptr; }

  Matrix left_action_of(const Matrix& x) const;   // Σ x_i left_act[i]
  Matrix right_action_of(const Matrix& x) const;  // Σ x_i right_act[i]

  bool structurally_equal(const SuperModule& o) const;
};

using ModulePtr = std::shared_ptr<const SuperModule>;

inline ModulePtr wrap(SuperModule m) { return std::make_shared<const SuperModule>(std::move(m)); }

// Grading of both actions, associativity, unitality, and for bimodules the
// commutation (a·m)·b = a·(m·b), all on basis elements.
ValidationReport validate_module(const SuperModule& m);
void require_valid_module(const SuperModule& m, const std::string& what);

// ----- constructions ---------------------------------------------------

// R^{m|n} with coordinatewise action on the chosen side; basis pairs
// (generator, algebra basis) in canonical parity order.
ModulePtr free_module(const AlgebraPtr& r, std::size_t m, std::size_t n, Side side);

ModulePtr zero_module(const AlgebraPtr& r, Side side);

// R as a module over itself: one side or both.
ModulePtr regular_module(const AlgebraPtr& r, Side side);
ModulePtr regular_bimodule(const AlgebraPtr& r);

// Parity reversal: swapped grading, right action unchanged, left action
// twisted by (-1)^{|r|}. Involutive on the nose.
ModulePtr parity_reverse(const SuperModule& m);

struct DirectSumResult {
  ModulePtr module;
  std::vector<GradedMap> inject;   // summand -> sum
  std::vector<GradedMap> project;  // sum -> summand
};
DirectSumResult direct_sum(const std::vector<ModulePtr>& mods);

// Module on an action-invariant homogeneous subspace, with the inclusion.
struct SubmoduleResult {
  ModulePtr module;
  GradedMap inclusion;
};
SubmoduleResult submodule_from_subspace(const ModulePtr& m, const Subspace& w,
                                        const std::string& name = "");

// ----- maps -------------------------------------------------------------

// Matrices always act on the left of column vectors; the super conventions
// live in the linearity predicates: maps of right modules satisfy
// f(m r) = f(m) r, homogeneous maps of left modules satisfy
// f(r m) = (-1)^{|f||r|} r f(m).
struct ModuleMap {
  ModulePtr source, target;
  Matrix mat;

  GradedMap graded() const { return GradedMap(source->space, target->space, mat); }
  bool is_even() const { return graded().is_even(); }
  std::optional<int> homogeneous_parity() const { return graded().homogeneous_parity(); }
  bool is_bijective() const { return graded().is_bijective(); }
};

bool is_right_linear(const ModuleMap& f);
bool is_left_linear(const ModuleMap& f);  // graded parts each satisfy the signed law
bool is_bimodule_map(const ModuleMap& f);

// Πf : M -> ΠN (post) and fΠ : ΠM -> N (pre); parity flips.
ModuleMap pi_twist_post(const ModuleMap& f);
ModuleMap pi_twist_pre(const ModuleMap& f);

// ----- hom spaces ---------------------------------------------------------

enum class HomSide { LeftLinear, RightLinear, Bilinear };

// Basis of the full internal hom as a k-linear solution space, parity-split
// (even maps first, then odd, each block in kernel-basis order).
struct HomSpace {
  ModulePtr source, target;
  HomSide side = HomSide::RightLinear;
  SuperSpace space;            // dim = number of basis maps
  std::vector<Matrix> basis;   // matrices target.dim x source.dim
  std::size_t even_count = 0;

  int parity_of(std::size_t t) const { return space.parity(t); }
  Matrix coords_of(const Matrix& f) const;  // throws IllDefined if not in span
  Matrix matrix_of(const Matrix& coords) const;
  ModuleMap map_of(const Matrix& coords) const;
};

HomSpace underline_hom(const ModulePtr& m, const ModulePtr& n, HomSide side);

// The composition algebra of a hom space of endomorphisms (plain matrix
// composition; this is End of right modules, and — with the signed linearity
// predicate — also End of left modules).
SuperAlgebra algebra_from_end(const HomSpace& h, const std::string& name);

// Builds a module structure on a hom space from explicit action formulas:
// act(gen, t) must return the operator (as a matrix source->target) obtained
// by acting with algebra basis element `gen` on hom basis map `t`.
using HomAction = std::function<Matrix(std::size_t, std::size_t)>;
ModulePtr module_from_hom(const HomSpace& h, const std::string& name,
                          const AlgebraPtr& left, const HomAction& left_act,
                          const AlgebraPtr& right, const HomAction& right_act);

// ----- duals --------------------------------------------------------------

struct DualModule {
  ModulePtr module;  // P* with its natural structure on the other side
  HomSpace hom;      // underlying hom space into the regular module
};

// side = the action of P being dualized. Right module -> left dual via
// (r f)(x) = r f(x); left module -> right dual via (f r)(x) = (-1)^{|x||r|} f(x) r.
DualModule dual_module(const ModulePtr& p, Side side);

// ----- the side-swapping functor ------------------------------------------

// Left R-module -> right R^op-module (m ·o r = (-1)^{|r||m|} r m) and dually;
// bimodules swap both sides. Involutive on the nose.
ModulePtr o_functor(const ModulePtr& m);
ModuleMap o_functor_map(const ModuleMap& f, const ModulePtr& osrc, const ModulePtr& otgt);

// ----- tensor products ------------------------------------------------------

struct TensorModule {
  ModulePtr module;      // the quotient (M ⊗_R N) with inherited outer actions
  ModulePtr left_factor, right_factor;
  PairBasis pairs;       // k-tensor pair basis
  Subspace relations;    // span of m·r ⊗ n − m ⊗ r·n inside the k-tensor
  GradedMap projection;  // k-tensor -> quotient
  GradedMap section;

  Matrix pure(const Matrix& m, const Matrix& n) const;  // class of m ⊗ n
};

// M right-R ⊗_R N left-R; outer actions (left of M, right of N) descend.
TensorModule tensor_over(const ModulePtr& m, const ModulePtr& n);

// f ⊗ g on tensor quotients, with the Koszul sign on |g|·|source factor|.
ModuleMap tensor_of_maps(const TensorModule& src, const TensorModule& tgt,
                         const ModuleMap& f, const ModuleMap& g);

// ----- evaluation isomorphisms ρ: tensor with dual ≅ hom --------------------

struct TensorHomIso {
  TensorModule tensor;   // B ⊗ P* (right case) or P* ⊗ B (left case)
  HomSpace hom;          // underline Hom(P, B)
  DualModule dual;
  GradedMap map;         // tensor.module.space -> hom.space, even
  bool bijective = false;
};

// Right modules P, B over R: σ(b⊗f)(x) = b·f(x), from B ⊗_R P*.
TensorHomIso tensor_to_hom_right(const ModulePtr& p, const ModulePtr& b);

// Left modules P, B over R: σ(f⊗b)(x) = (-1)^{|x||b|} f(x)·b, from P* ⊗_R B.
TensorHomIso tensor_to_hom_left(const ModulePtr& p, const ModulePtr& b);

// Naturality square of the evaluation iso against k: B -> B' (same side):
// hom-pushforward ∘ σ_B  ==  σ_{B'} ∘ (id ⊗ k resp. k ⊗ id).
bool tensor_to_hom_natural(const TensorHomIso& at_b, const TensorHomIso& at_b2,
                           const ModuleMap& k);

// ----- misc ---------------------------------------------------------------

// Even natural iso M ⊗_R R -> M, m⊗r -> m·r (right case) and R ⊗_R N -> N.
ModuleMap tensor_unit_iso(const TensorModule& t, Side regular_side);

// Signed swap (M ⊗_R N)^o -> N^o ⊗_{R^o} M^o, m⊗n -> (-1)^{|m||n|} n⊗m.
ModuleMap tensor_o_swap(const TensorModule& t, const TensorModule& oswapped);

}  // namespace supermorita
