#include "supermorita/supermodule.hpp"

#include "supermorita/errors.hpp"

namespace supermorita {

namespace {

Matrix sum_scaled(const std::vector<Matrix>& mats, const Matrix& x, const FieldSpec& f,
                  std::size_t rows, std::size_t cols) {
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (x.at(i, 0).is_zero()) continue;
    out = out + mats[i].scaled(x.at(i, 0));
  }
  return out;
}

void require_same_structure(const AlgebraPtr& a, const AlgebraPtr& b, const std::string& what) {
  if (!a || !b || !a->structurally_equal(*b))
    throw SignatureMismatch(what + ": modules do not share the required algebra");
}

}  // namespace

Matrix SuperModule::left_action_of(const Matrix& x) const {
  return sum_scaled(left_act, x, field(), dim(), dim());
}

Matrix SuperModule::right_action_of(const Matrix& x) const {
  return sum_scaled(right_act, x, field(), dim(), dim());
}

bool SuperModule::structurally_equal(const SuperModule& o) const {
  if (!(space == o.space)) return false;
  if (has_left() != o.has_left() || has_right() != o.has_right()) return false;
  if (has_left() && (!left_alg->structurally_equal(*o.left_alg) || left_act != o.left_act))
    return false;
  if (has_right() && (!right_alg->structurally_equal(*o.right_alg) || right_act != o.right_act))
    return false;
  return true;
}

ValidationReport validate_module(const SuperModule& m) {
  ValidationReport rep;
  const std::size_t d = m.dim();

  auto check_action = [&](const AlgebraPtr& alg, const std::vector<Matrix>& act,
                          bool left, const std::string& tag) {
    const SuperAlgebra& a = *alg;
    AxiomCheck shape{tag + "-shape", act.size() == a.dim(), ""};
    for (const Matrix& x : act)
      if (x.rows() != d || x.cols() != d) shape.pass = false;
    rep.checks.push_back(shape);
    if (!shape.pass) return;

    AxiomCheck grading{tag + "-grading", true, ""};
    for (std::size_t i = 0; i < a.dim() && grading.pass; ++i)
      for (std::size_t v = 0; v < d && grading.pass; ++v) {
        int want = (a.parity(i) + m.parity(v)) & 1;
        for (std::size_t t = 0; t < d; ++t)
          if (m.parity(t) != want && !act[i].at(t, v).is_zero()) {
            grading.pass = false;
            grading.witness = "(" + a.space.label(i) + ", " + m.space.label(v) + ")";
            break;
          }
      }
    rep.checks.push_back(grading);

    AxiomCheck assoc{tag + "-associativity", true, ""};
    for (std::size_t i = 0; i < a.dim() && assoc.pass; ++i)
      for (std::size_t j = 0; j < a.dim() && assoc.pass; ++j) {
        Matrix prod = a.product(i, j);
        Matrix lhs = sum_scaled(act, prod, m.field(), d, d);
        // left: (e_i e_j)·x = e_i·(e_j·x); right: x·(e_i e_j) = (x·e_i)·e_j
        Matrix rhs = left ? act[i] * act[j] : act[j] * act[i];
        if (lhs != rhs) {
          assoc.pass = false;
          assoc.witness = "(" + a.space.label(i) + ", " + a.space.label(j) + ")";
        }
      }
    rep.checks.push_back(assoc);

    AxiomCheck unital{tag + "-unital", sum_scaled(act, a.unit, m.field(), d, d) ==
                                           Matrix::identity(m.field(), d),
                      ""};
    rep.checks.push_back(unital);
  };

  if (m.has_left()) check_action(m.left_alg, m.left_act, true, "left");
  if (m.has_right()) check_action(m.right_alg, m.right_act, false, "right");
  if (m.has_left() && m.has_right()) {
    AxiomCheck comm{"bimodule-commutation", true, ""};
    for (std::size_t i = 0; i < m.left_alg->dim() && comm.pass; ++i)
      for (std::size_t j = 0; j < m.right_alg->dim() && comm.pass; ++j)
        if (m.left_act[i] * m.right_act[j] != m.right_act[j] * m.left_act[i]) {
          comm.pass = false;
          comm.witness = "(" + m.left_alg->space.label(i) + ", " +
                         m.right_alg->space.label(j) + ")";
        }
    rep.checks.push_back(comm);
  }
  return rep;
}

void require_valid_module(const SuperModule& m, const std::string& what) {
  ValidationReport rep = validate_module(m);
  if (!rep.ok()) throw IllDefined(what + ": constructed module fails axioms:\n" + rep.summary());
}

ModulePtr free_module(const AlgebraPtr& r, std::size_t m, std::size_t n, Side side) {
  if (m + n == 0) throw PreconditionFailed("free module needs at least one generator");
  const SuperAlgebra& a = *r;
  SuperSpace gens = SuperSpace::make(a.field(), m, n, "g");
  PairBasis pb = PairBasis::make(gens, a.space, ".");
  SuperModule mod;
  mod.space = pb.space;
  mod.name = a.name + "^" + std::to_string(m) + "|" + std::to_string(n);
  const std::size_t d = pb.space.dim();
  std::vector<Matrix> act(a.dim(), Matrix(a.field(), d, d));
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t g = 0; g < gens.dim(); ++g)
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix prod = side == Side::Right ? a.product(i, j) : a.product(j, i);
        act[j].set_col(pb.index(g, i),
                       act[j].col(pb.index(g, i)) + pb.pure(Matrix::unit_column(a.field(), gens.dim(), g), prod));
      }
  if (side == Side::Right) {
    mod.right_alg = r;
    mod.right_act = std::move(act);
  } else {
    mod.left_alg = r;
    mod.left_act = std::move(act);
  }
  return wrap(std::move(mod));
}

ModulePtr zero_module(const AlgebraPtr& r, Side side) {
  SuperModule mod;
  mod.space = SuperSpace::make(r->field(), 0, 0);
  mod.name = "0";
  std::vector<Matrix> act(r->dim(), Matrix(r->field(), 0, 0));
  if (side == Side::Right) {
    mod.right_alg = r;
    mod.right_act = std::move(act);
  } else {
    mod.left_alg = r;
    mod.left_act = std::move(act);
  }
  return wrap(std::move(mod));
}

ModulePtr regular_module(const AlgebraPtr& r, Side side) {
  SuperModule mod;
  mod.space = r->space;
  mod.name = r->name;
  if (side == Side::Right) {
    mod.right_alg = r;
    for (std::size_t i = 0; i < r->dim(); ++i) mod.right_act.push_back(r->right_mult(i));
  } else {
    mod.left_alg = r;
    mod.left_act = r->left_mult;
  }
  return wrap(std::move(mod));
}

ModulePtr regular_bimodule(const AlgebraPtr& r) {
  SuperModule mod;
  mod.space = r->space;
  mod.name = r->name;
  mod.left_alg = r;
  mod.left_act = r->left_mult;
  mod.right_alg = r;
  for (std::size_t i = 0; i < r->dim(); ++i) mod.right_act.push_back(r->right_mult(i));
  return wrap(std::move(mod));
}

ModulePtr parity_reverse(const SuperModule& m) {
  SuperModule p;
  p.space = pi_space(m.space);
  p.name = m.name.rfind("~", 0) == 0 ? m.name.substr(1) : "~" + m.name;
  Matrix s = pi_swap_matrix(m.space);
  Matrix sinv = s.transpose();
  if (m.has_left()) {
    p.left_alg = m.left_alg;
    for (std::size_t i = 0; i < m.left_alg->dim(); ++i) {
      Matrix conj = s * m.left_act[i] * sinv;
      p.left_act.push_back(m.left_alg->parity(i) == 1 ? -conj : conj);
    }
  }
  if (m.has_right()) {
    p.right_alg = m.right_alg;
    for (std::size_t i = 0; i < m.right_alg->dim(); ++i)
      p.right_act.push_back(s * m.right_act[i] * sinv);
  }
  return wrap(std::move(p));
}

DirectSumResult direct_sum(const std::vector<ModulePtr>& mods) {
  if (mods.empty()) throw PreconditionFailed("direct sum of no modules");
  const SuperModule& first = *mods[0];
  for (const auto& m : mods) {
    if (first.has_left() != m->has_left() || first.has_right() != m->has_right())
      throw SignatureMismatch("direct sum: mixed module signatures");
    if (first.has_left()) require_same_structure(first.left_alg, m->left_alg, "direct sum");
    if (first.has_right()) require_same_structure(first.right_alg, m->right_alg, "direct sum");
  }
  const FieldSpec& f = first.field();

  std::size_t even = 0, odd = 0, total = 0;
  for (const auto& m : mods) {
    even += m->space.dim_even;
    odd += m->space.dim_odd;
    total += m->dim();
  }
  // canonical position of (summand k, local index i)
  std::vector<std::vector<std::size_t>> pos(mods.size());
  std::vector<std::string> labels(total);
  std::size_t at_even = 0, at_odd = even;
  for (std::size_t k = 0; k < mods.size(); ++k) {
    pos[k].resize(mods[k]->dim());
    for (std::size_t i = 0; i < mods[k]->dim(); ++i) {
      std::size_t& slot = mods[k]->parity(i) == 0 ? at_even : at_odd;
      pos[k][i] = slot;
      labels[slot] = "s" + std::to_string(k) + "." + mods[k]->space.label(i);
      ++slot;
    }
  }

  DirectSumResult out;
  SuperModule sum;
  sum.space = SuperSpace::make(f, even, odd, std::move(labels));
  sum.name = "sum";
  for (std::size_t k = 0; k < mods.size(); ++k) {
    Matrix inj(f, total, mods[k]->dim());
    for (std::size_t i = 0; i < mods[k]->dim(); ++i)
      inj.at(pos[k][i], i) = Scalar::one(f);
    out.inject.emplace_back(mods[k]->space, sum.space, inj);
    out.project.emplace_back(sum.space, mods[k]->space, inj.transpose());
  }
  auto assemble = [&](bool left) {
    const std::size_t gd = left ? first.left_alg->dim() : first.right_alg->dim();
    std::vector<Matrix> act(gd, Matrix(f, total, total));
    for (std::size_t g = 0; g < gd; ++g)
      for (std::size_t k = 0; k < mods.size(); ++k) {
        const Matrix& x = left ? mods[k]->left_act[g] : mods[k]->right_act[g];
        for (std::size_t i = 0; i < mods[k]->dim(); ++i)
          for (std::size_t j = 0; j < mods[k]->dim(); ++j)
            act[g].at(pos[k][i], pos[k][j]) = x.at(i, j);
      }
    return act;
  };
  if (first.has_left()) {
    sum.left_alg = first.left_alg;
    sum.left_act = assemble(true);
  }
  if (first.has_right()) {
    sum.right_alg = first.right_alg;
    sum.right_act = assemble(false);
  }
  out.module = wrap(std::move(sum));
  return out;
}

SubmoduleResult submodule_from_subspace(const ModulePtr& m, const Subspace& w,
                                        const std::string& name) {
  if (!w.homogeneous) throw NonHomogeneousRelations("submodule subspace must be graded");
  const FieldSpec& f = m->field();
  SuperModule sub;
  sub.space = SuperSpace::make(f, w.dim_even, w.dim_odd, "w");
  sub.name = name.empty() ? m->name + "|sub" : name;
  auto restrict_action = [&](const std::vector<Matrix>& act) {
    std::vector<Matrix> out;
    out.reserve(act.size());
    for (const Matrix& x : act) {
      Solution s = solve(w.basis, x * w.basis);
      if (!s.solvable) throw PreconditionFailed("subspace is not action-invariant");
      out.push_back(s.particular);
    }
    return out;
  };
  if (m->has_left()) {
    sub.left_alg = m->left_alg;
    sub.left_act = restrict_action(m->left_act);
  }
  if (m->has_right()) {
    sub.right_alg = m->right_alg;
    sub.right_act = restrict_action(m->right_act);
  }
  SubmoduleResult out;
  GradedMap inc(sub.space, m->space, w.basis);
  out.module = wrap(std::move(sub));
  out.inclusion = std::move(inc);
  return out;
}

bool is_right_linear(const ModuleMap& f) {
  if (!f.source->has_right() || !f.target->has_right()) return false;
  if (!f.source->right_alg->structurally_equal(*f.target->right_alg)) return false;
  for (std::size_t i = 0; i < f.source->right_alg->dim(); ++i)
    if (f.mat * f.source->right_act[i] != f.target->right_act[i] * f.mat) return false;
  return true;
}

bool is_left_linear(const ModuleMap& f) {
  if (!f.source->has_left() || !f.target->has_left()) return false;
  if (!f.source->left_alg->structurally_equal(*f.target->left_alg)) return false;
  auto [fe, fo] = f.graded().graded_parts();
  const SuperAlgebra& a = *f.source->left_alg;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    // even part: plain intertwining; odd part: sign (-1)^{|e_i|}
    if (fe.mat * f.source->left_act[i] != f.target->left_act[i] * fe.mat) return false;
    Matrix rhs = f.target->left_act[i] * fo.mat;
    if (a.parity(i) == 1) rhs = -rhs;
    if (fo.mat * f.source->left_act[i] != rhs) return false;
  }
  return true;
}

bool is_bimodule_map(const ModuleMap& f) { return is_left_linear(f) && is_right_linear(f); }

ModuleMap pi_twist_post(const ModuleMap& f) {
  if (!f.homogeneous_parity())
    throw NonHomogeneousInput("parity twist of a non-homogeneous map");
  ModulePtr pit = parity_reverse(*f.target);
  Matrix s = pi_swap_matrix(f.target->space);
  return ModuleMap{f.source, pit, s * f.mat};
}

ModuleMap pi_twist_pre(const ModuleMap& f) {
  if (!f.homogeneous_parity())
    throw NonHomogeneousInput("parity twist of a non-homogeneous map");
  ModulePtr pis = parity_reverse(*f.source);
  Matrix s = pi_swap_matrix(f.source->space);
  return ModuleMap{pis, f.target, f.mat * s.transpose()};
}

HomSpace underline_hom(const ModulePtr& m, const ModulePtr& n, HomSide side) {
  const bool need_left = side != HomSide::RightLinear;
  const bool need_right = side != HomSide::LeftLinear;
  if (need_left) require_same_structure(m->left_alg, n->left_alg, "underline_hom(left)");
  if (need_right) require_same_structure(m->right_alg, n->right_alg, "underline_hom(right)");
  const FieldSpec& f = m->field();
  const std::size_t dm = m->dim(), dn = n->dim();

  HomSpace h;
  h.source = m;
  h.target = n;
  h.side = side;

  for (int q = 0; q <= 1; ++q) {
    // unknowns: entries (r,c) with parity_N(r) = parity_M(c) + q
    std::vector<std::size_t> unknown_of(dn * dm, SIZE_MAX);
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c)
        if (n->parity(r) == ((m->parity(c) + q) & 1)) {
          unknown_of[r * dm + c] = unknowns.size();
          unknowns.emplace_back(r, c);
        }
    std::size_t n_rows = 0;
    if (need_right) n_rows += m->right_alg->dim() * dn * dm;
    if (need_left) n_rows += m->left_alg->dim() * dn * dm;
    Matrix sys(f, n_rows, unknowns.size());
    std::size_t row = 0;
    if (need_right) {
      for (std::size_t g = 0; g < m->right_alg->dim(); ++g) {
        const Matrix& rm = m->right_act[g];
        const Matrix& rn = n->right_act[g];
        for (std::size_t r = 0; r < dn; ++r)
          for (std::size_t c = 0; c < dm; ++c) {
            // (F Rm_g - Rn_g F)[r,c] = 0
            for (std::size_t t = 0; t < dm; ++t)
              if (unknown_of[r * dm + t] != SIZE_MAX && !rm.at(t, c).is_zero())
                sys.at(row, unknown_of[r * dm + t]) += rm.at(t, c);
            for (std::size_t t = 0; t < dn; ++t)
              if (unknown_of[t * dm + c] != SIZE_MAX && !rn.at(r, t).is_zero())
                sys.at(row, unknown_of[t * dm + c]) -= rn.at(r, t);
            ++row;
          }
      }
    }
    if (need_left) {
      for (std::size_t g = 0; g < m->left_alg->dim(); ++g) {
        const Matrix& lm = m->left_act[g];
        const Matrix& ln = n->left_act[g];
        const int sign = koszul_sign(q, m->left_alg->parity(g));
        for (std::size_t r = 0; r < dn; ++r)
          for (std::size_t c = 0; c < dm; ++c) {
            // (F Lm_g - (-1)^{q|g|} Ln_g F)[r,c] = 0
            for (std::size_t t = 0; t < dm; ++t)
              if (unknown_of[r * dm + t] != SIZE_MAX && !lm.at(t, c).is_zero())
                sys.at(row, unknown_of[r * dm + t]) += lm.at(t, c);
            for (std::size_t t = 0; t < dn; ++t)
              if (unknown_of[t * dm + c] != SIZE_MAX && !ln.at(r, t).is_zero()) {
                if (sign < 0)
                  sys.at(row, unknown_of[t * dm + c]) += ln.at(r, t);
                else
                  sys.at(row, unknown_of[t * dm + c]) -= ln.at(r, t);
              }
            ++row;
          }
      }
    }
    Matrix ker = kernel_basis(sys);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      Matrix fm(f, dn, dm);
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        fm.at(unknowns[u].first, unknowns[u].second) = ker.at(u, j);
      h.basis.push_back(std::move(fm));
    }
    if (q == 0) h.even_count = h.basis.size();
  }
  h.space = SuperSpace::make(f, h.even_count, h.basis.size() - h.even_count, "h");
  return h;
}

Matrix HomSpace::coords_of(const Matrix& f) const {
  const FieldSpec& ff = space.field;
  const std::size_t cells = f.rows() * f.cols();
  Matrix stack(ff, cells, basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t)
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c)
        stack.at(r * f.cols() + c, t) = basis[t].at(r, c);
  Matrix vecf(ff, cells, 1);
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) vecf.at(r * f.cols() + c, 0) = f.at(r, c);
  Solution s = solve(stack, vecf);
  if (!s.solvable) throw IllDefined("map is not in the hom space");
  return s.particular;
}

Matrix HomSpace::matrix_of(const Matrix& coords) const {
  Matrix out(space.field, target->dim(), source->dim());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (coords.at(t, 0).is_zero()) continue;
    out = out + basis[t].scaled(coords.at(t, 0));
  }
  return out;
}

ModuleMap HomSpace::map_of(const Matrix& coords) const {
  return ModuleMap{source, target, matrix_of(coords)};
}

SuperAlgebra algebra_from_end(const HomSpace& h, const std::string& name) {
  if (h.source->dim() != h.target->dim() || !(h.source->space == h.target->space))
    throw SignatureMismatch("algebra_from_end needs an endo hom space");
  SuperAlgebra s;
  s.space = h.space;
  s.name = name;
  s.unit = h.coords_of(Matrix::identity(h.space.field, h.source->dim()));
  const std::size_t d = h.basis.size();
  s.left_mult.assign(d, Matrix(h.space.field, d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      s.left_mult[i].set_col(j, h.coords_of(h.basis[i] * h.basis[j]));
  return s;
}

ModulePtr module_from_hom(const HomSpace& h, const std::string& name,
                          const AlgebraPtr& left, const HomAction& left_act,
                          const AlgebraPtr& right, const HomAction& right_act) {
  SuperModule mod;
  mod.space = h.space;
  mod.name = name;
  const std::size_t d = h.basis.size();
  if (left) {
    mod.left_alg = left;
    for (std::size_t g = 0; g < left->dim(); ++g) {
      Matrix act(h.space.field, d, d);
      for (std::size_t t = 0; t < d; ++t) act.set_col(t, h.coords_of(left_act(g, t)));
      mod.left_act.push_back(std::move(act));
    }
  }
  if (right) {
    mod.right_alg = right;
    for (std::size_t g = 0; g < right->dim(); ++g) {
      Matrix act(h.space.field, d, d);
      for (std::size_t t = 0; t < d; ++t) act.set_col(t, h.coords_of(right_act(g, t)));
      mod.right_act.push_back(std::move(act));
    }
  }
  require_valid_module(mod, "module_from_hom(" + name + ")");
  return wrap(std::move(mod));
}

DualModule dual_module(const ModulePtr& p, Side side) {
  DualModule out;
  if (side == Side::Right) {
    if (!p->has_right()) throw SignatureMismatch("dual_module: no right action to dualize");
    const AlgebraPtr r = p->right_alg;
    ModulePtr reg = regular_module(r, Side::Right);
    out.hom = underline_hom(p, reg, HomSide::RightLinear);
    // (r f)(x) = r · f(x)
    out.module = module_from_hom(
        out.hom, p->name + "*", r,
        [&](std::size_t g, std::size_t t) { return r->left_mult[g] * out.hom.basis[t]; },
        nullptr, {});
  } else {
    if (!p->has_left()) throw SignatureMismatch("dual_module: no left action to dualize");
    const AlgebraPtr r = p->left_alg;
    ModulePtr reg = regular_module(r, Side::Left);
    out.hom = underline_hom(p, reg, HomSide::LeftLinear);
    // (f r)(x) = (-1)^{|x||r|} f(x) · r
    Matrix jp = parity_sign_matrix(p->space);
    out.module = module_from_hom(
        out.hom, p->name + "*", nullptr, {}, r,
        [&, jp](std::size_t g, std::size_t t) {
          Matrix op = r->right_mult(g) * out.hom.basis[t];
          return r->parity(g) == 1 ? op * jp : op;
        });
  }
  return out;
}

ModulePtr o_functor(const ModulePtr& m) {
  SuperModule o;
  o.space = m->space;
  o.name = m->name.size() >= 2 && m->name.compare(m->name.size() - 2, 2, "^o") == 0
               ? m->name.substr(0, m->name.size() - 2)
               : m->name + "^o";
  Matrix j = parity_sign_matrix(m->space);
  if (m->has_left()) {
    o.right_alg = opposite_ptr(m->left_alg);
    for (std::size_t i = 0; i < m->left_alg->dim(); ++i)
      o.right_act.push_back(m->left_alg->parity(i) == 1 ? m->left_act[i] * j : m->left_act[i]);
  }
  if (m->has_right()) {
    o.left_alg = opposite_ptr(m->right_alg);
    for (std::size_t i = 0; i < m->right_alg->dim(); ++i)
      o.left_act.push_back(m->right_alg->parity(i) == 1 ? m->right_act[i] * j : m->right_act[i]);
  }
  return wrap(std::move(o));
}

ModuleMap o_functor_map(const ModuleMap& f, const ModulePtr& osrc, const ModulePtr& otgt) {
  return ModuleMap{osrc, otgt, f.mat};
}

TensorModule tensor_over(const ModulePtr& m, const ModulePtr& n) {
  if (!m->has_right() || !n->has_left())
    throw SignatureMismatch("tensor_over needs (right module) x (left module)");
  require_same_structure(m->right_alg, n->left_alg, "tensor_over");
  const SuperAlgebra& r = *m->right_alg;
  const FieldSpec& f = m->field();

  TensorModule t;
  t.left_factor = m;
  t.right_factor = n;
  t.pairs = PairBasis::make(m->space, n->space, "*");

  std::vector<Matrix> rels;
  rels.reserve(m->dim() * r.dim() * n->dim());
  for (std::size_t u = 0; u < m->dim(); ++u)
    for (std::size_t i = 0; i < r.dim(); ++i) {
      Matrix mu = m->right_act[i].col(u);
      for (std::size_t v = 0; v < n->dim(); ++v) {
        Matrix rel = t.pairs.pure(mu, Matrix::unit_column(f, n->dim(), v)) -
                     t.pairs.pure(Matrix::unit_column(f, m->dim(), u), n->left_act[i].col(v));
        if (!rel.is_zero()) rels.push_back(std::move(rel));
      }
    }
  t.relations = Subspace::span(t.pairs.space,
                               Matrix::from_columns(f, t.pairs.space.dim(), rels));
  if (!t.relations.homogeneous)
    throw IllDefined("tensor relations failed to be homogeneous");
  QuotientResult q = quotient(t.pairs.space, t.relations);
  t.projection = q.projection;
  t.section = q.section;

  SuperModule mod;
  mod.space = q.space;
  mod.name = m->name + "(x)" + n->name;
  auto descend = [&](const Matrix& big, const std::string& what) {
    if (!(t.projection.mat * (big * t.relations.basis)).is_zero())
      throw IllDefined("tensor_over: outer action does not descend (" + what + ")");
    return t.projection.mat * big * t.section.mat;
  };
  if (m->has_left()) {
    mod.left_alg = m->left_alg;
    Matrix idn = Matrix::identity(f, n->dim());
    for (std::size_t s = 0; s < m->left_alg->dim(); ++s)
      mod.left_act.push_back(
          descend(kron_plain(t.pairs, t.pairs, m->left_act[s], idn), "left"));
  }
  if (n->has_right()) {
    mod.right_alg = n->right_alg;
    Matrix idm = Matrix::identity(f, m->dim());
    for (std::size_t s = 0; s < n->right_alg->dim(); ++s)
      mod.right_act.push_back(
          descend(kron_plain(t.pairs, t.pairs, idm, n->right_act[s]), "right"));
  }
  t.module = wrap(std::move(mod));
  return t;
}

Matrix TensorModule::pure(const Matrix& m, const Matrix& n) const {
  return projection.mat * pairs.pure(m, n);
}

ModuleMap tensor_of_maps(const TensorModule& src, const TensorModule& tgt,
                         const ModuleMap& f, const ModuleMap& g) {
  if (f.source->dim() != src.left_factor->dim() || g.source->dim() != src.right_factor->dim() ||
      f.target->dim() != tgt.left_factor->dim() || g.target->dim() != tgt.right_factor->dim())
    throw ShapeMismatch("tensor_of_maps operand shapes");
  Matrix big = kron_signed(tgt.pairs, src.pairs, f.graded(), g.graded());
  if (!(tgt.projection.mat * (big * src.relations.basis)).is_zero())
    throw IllDefined("tensor_of_maps: map does not descend to the quotient");
  return ModuleMap{src.module, tgt.module, tgt.projection.mat * big * src.section.mat};
}

TensorHomIso tensor_to_hom_right(const ModulePtr& p, const ModulePtr& b) {
  require_same_structure(p->right_alg, b->right_alg, "tensor_to_hom_right");
  const SuperAlgebra& r = *p->right_alg;
  const FieldSpec& f = p->field();
  TensorHomIso out;
  out.dual = dual_module(p, Side::Right);
  out.tensor = tensor_over(b, out.dual.module);
  out.hom = underline_hom(p, b, HomSide::RightLinear);

  // σ(b ⊗ f): x -> b · f(x)
  Matrix big(f, out.hom.space.dim(), out.tensor.pairs.space.dim());
  for (std::size_t w = 0; w < b->dim(); ++w)
    for (std::size_t t = 0; t < out.dual.hom.basis.size(); ++t) {
      Matrix op(f, b->dim(), p->dim());
      for (std::size_t v = 0; v < p->dim(); ++v)
        op.set_col(v, b->right_action_of(out.dual.hom.basis[t].col(v)) *
                          Matrix::unit_column(f, b->dim(), w));
      big.set_col(out.tensor.pairs.index(w, t), out.hom.coords_of(op));
    }
  if (!(big * out.tensor.relations.basis).is_zero())
    throw IllDefined("tensor_to_hom_right: evaluation does not descend");
  out.map = GradedMap(out.tensor.module->space, out.hom.space, big * out.tensor.section.mat);
  out.bijective = out.map.is_bijective();
  return out;
}

TensorHomIso tensor_to_hom_left(const ModulePtr& p, const ModulePtr& b) {
  require_same_structure(p->left_alg, b->left_alg, "tensor_to_hom_left");
  const FieldSpec& f = p->field();
  TensorHomIso out;
  out.dual = dual_module(p, Side::Left);
  out.tensor = tensor_over(out.dual.module, b);
  out.hom = underline_hom(p, b, HomSide::LeftLinear);

  // σ(f ⊗ b): x -> (-1)^{|x||b|} f(x) · b
  Matrix big(f, out.hom.space.dim(), out.tensor.pairs.space.dim());
  for (std::size_t t = 0; t < out.dual.hom.basis.size(); ++t)
    for (std::size_t w = 0; w < b->dim(); ++w) {
      Matrix op(f, b->dim(), p->dim());
      for (std::size_t v = 0; v < p->dim(); ++v) {
        Matrix col = b->left_action_of(out.dual.hom.basis[t].col(v)) *
                     Matrix::unit_column(f, b->dim(), w);
        if (koszul_sign(p->parity(v), b->parity(w)) < 0) col = -col;
        op.set_col(v, col);
      }
      big.set_col(out.tensor.pairs.index(t, w), out.hom.coords_of(op));
    }
  if (!(big * out.tensor.relations.basis).is_zero())
    throw IllDefined("tensor_to_hom_left: evaluation does not descend");
  out.map = GradedMap(out.tensor.module->space, out.hom.space, big * out.tensor.section.mat);
  out.bijective = out.map.is_bijective();
  return out;
}

bool tensor_to_hom_natural(const TensorHomIso& at_b, const TensorHomIso& at_b2,
                           const ModuleMap& k) {
  // pushforward on hom spaces: h -> k ∘ h
  Matrix push(k.mat.field(), at_b2.hom.space.dim(), at_b.hom.space.dim());
  for (std::size_t t = 0; t < at_b.hom.basis.size(); ++t)
    push.set_col(t, at_b2.hom.coords_of(k.mat * at_b.hom.basis[t]));

  const bool right_case = at_b.tensor.right_factor.get() == at_b.dual.module.get();
  ModuleMap id_dual{at_b.dual.module, at_b2.dual.module,
                    Matrix::identity(k.mat.field(), at_b.dual.module->dim())};
  ModuleMap tens = right_case ? tensor_of_maps(at_b.tensor, at_b2.tensor, k, id_dual)
                              : tensor_of_maps(at_b.tensor, at_b2.tensor, id_dual, k);
  return push * at_b.map.mat == at_b2.map.mat * tens.mat;
}

ModuleMap tensor_unit_iso(const TensorModule& t, Side regular_side) {
  const FieldSpec& f = t.module->field();
  if (regular_side == Side::Right) {
    // M ⊗_R R -> M, m⊗r -> m·r
    const ModulePtr& m = t.left_factor;
    Matrix big(f, m->dim(), t.pairs.space.dim());
    for (std::size_t u = 0; u < m->dim(); ++u)
      for (std::size_t i = 0; i < t.right_factor->dim(); ++i)
        big.set_col(t.pairs.index(u, i), m->right_act[i].col(u));
    if (!(big * t.relations.basis).is_zero())
      throw IllDefined("tensor_unit_iso does not descend");
    return ModuleMap{t.module, m, big * t.section.mat};
  }
  // R ⊗_R N -> N, r⊗n -> r·n
  const ModulePtr& n = t.right_factor;
  Matrix big(f, n->dim(), t.pairs.space.dim());
  for (std::size_t i = 0; i < t.left_factor->dim(); ++i)
    for (std::size_t v = 0; v < n->dim(); ++v)
      big.set_col(t.pairs.index(i, v), n->left_act[i].col(v));
  if (!(big * t.relations.basis).is_zero())
    throw IllDefined("tensor_unit_iso does not descend");
  return ModuleMap{t.module, n, big * t.section.mat};
}

ModuleMap tensor_o_swap(const TensorModule& t, const TensorModule& oswapped) {
  const FieldSpec& f = t.module->field();
  Matrix big(f, oswapped.module->dim(), t.pairs.space.dim());
  for (std::size_t u = 0; u < t.left_factor->dim(); ++u)
    for (std::size_t v = 0; v < t.right_factor->dim(); ++v) {
      Matrix img = oswapped.pure(Matrix::unit_column(f, t.right_factor->dim(), v),
                                 Matrix::unit_column(f, t.left_factor->dim(), u));
      if (koszul_sign(t.left_factor->parity(u), t.right_factor->parity(v)) < 0) img = -img;
      big.set_col(t.pairs.index(u, v), img);
    }
  if (!(big * t.relations.basis).is_zero())
    throw IllDefined("tensor_o_swap does not descend");
  return ModuleMap{o_functor(t.module), oswapped.module, big * t.section.mat};
}

}  // namespace supermorita
