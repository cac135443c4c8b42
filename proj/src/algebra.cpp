#include "formcert/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "formcert/error.hpp"

namespace formcert {

namespace {

const SparseVec kEmptyRow{};

RatVec dense_of(const SparseVec& sv, int dim) {
  RatVec v(dim, Rational(0));
  for (const auto& [k, c] : sv) v[k] += c;
  return v;
}

SparseVec sparse_of(const RatVec& v) {
  SparseVec sv;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) sv.emplace_back(static_cast<int>(k), v[k]);
  return sv;
}

RatVec basis_vec(int i, int dim) {
  RatVec v(dim, Rational(0));
  v[i] = Rational(1);
  return v;
}

RatVec matrix_column(const RatMat& m, int j) {
  RatVec v(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i][j];
  return v;
}

}  // namespace

Algebra::Ptr Algebra::make(Spec spec) {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->name_ = std::move(spec.name);
  a->basis_ = std::move(spec.basis);
  const int dim = a->dim();
  if (dim == 0) throw ValidationError("algebra must have positive dimension");

  for (auto& [ij, row] : spec.product) {
    auto [i, j] = ij;
    if (i < 0 || i >= dim || j < 0 || j >= dim)
      throw ValidationError("structure constants reference invalid basis pair (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
    SparseVec cleaned;
    RatVec acc(dim, Rational(0));
    for (const auto& [k, c] : row) {
      if (k < 0 || k >= dim)
        throw ValidationError("structure constant c(" + std::to_string(i) + "," +
                              std::to_string(j) + ")^" + std::to_string(k) +
                              " references invalid basis index");
      acc[k] += c;
    }
    for (int k = 0; k < dim; ++k)
      if (!acc[k].is_zero()) cleaned.emplace_back(k, acc[k]);
    if (!cleaned.empty()) a->product_[ij] = std::move(cleaned);
  }

  a->grading_rank_ = spec.grading_rank;
  a->parity_rank_ = spec.parity_rank;
  if (spec.grades.has_value()) {
    if (spec.grades->size() != static_cast<std::size_t>(dim))
      throw ValidationError("grading must assign one grade per basis element");
    for (const auto& g : *spec.grades) {
      if (g.z.size() != a->grading_rank_ || g.parity.size() != a->parity_rank_)
        throw ValidationError("grade rank mismatch against declared grading ranks");
      for (int p : g.parity)
        if (p != 0 && p != 1) throw ValidationError("parity components must be 0 or 1");
    }
    a->grades_ = std::move(spec.grades);
    for (const auto& [ij, row] : a->product_) {
      auto [i, j] = ij;
      Grade expect = a->grade_of(i) + a->grade_of(j);
      for (const auto& [k, c] : row) {
        if (!(a->grade_of(k) == expect)) {
          if (spec.module_grading_only) {
            a->grading_multiplicative_ = false;
            break;
          }
          throw ValidationError("grading incompatible with product at (i,j,k) = (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + "): grade " + a->grade_of(k).str() +
                                " != " + expect.str());
        }
      }
    }
  } else if (a->grading_rank_ != 0 || a->parity_rank_ != 0) {
    throw ValidationError("nonzero grading ranks require a grade list");
  }

  if (spec.involution.has_value()) {
    const RatMat& s = *spec.involution;
    if (s.size() != static_cast<std::size_t>(dim))
      throw ValidationError("involution matrix must be dim x dim");
    for (const auto& row : s)
      if (row.size() != static_cast<std::size_t>(dim))
        throw ValidationError("involution matrix must be dim x dim");
    RatMat sq = matmul(s, s);
    if (!(sq == identity_matrix(dim)))
      throw ValidationError("involution does not square to the identity");
    a->involution_ = std::move(spec.involution);
    // product reversal: sigma(x*y) = sigma(y)*sigma(x) on all basis pairs
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        RatVec lhs = a->involute(dense_of(a->basis_product(i, j), dim));
        RatVec rev = a->product(a->involute(basis_vec(j, dim)),
                                a->involute(basis_vec(i, dim)));
        if (!(lhs == rev))
          throw ValidationError("involution fails product reversal on basis pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return a;
}

const SparseVec& Algebra::basis_product(int i, int j) const {
  auto it = product_.find({i, j});
  return it == product_.end() ? kEmptyRow : it->second;
}

RatVec Algebra::product(const RatVec& x, const RatVec& y) const {
  const int d = dim();
  if (x.size() != static_cast<std::size_t>(d) || y.size() != static_cast<std::size_t>(d))
    throw ValidationError("product: coordinate vector length mismatch");
  RatVec r(d, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Rational f = x[i] * y[j];
      for (const auto& [k, c] : basis_product(i, j)) r[k] += f * c;
    }
  }
  return r;
}

const Grade& Algebra::grade_of(int i) const {
  if (!grades_) throw ValidationError("algebra '" + name_ + "' is ungraded");
  return (*grades_)[i];
}

std::vector<Grade> Algebra::grade_set() const {
  std::vector<Grade> gs;
  if (!grades_) return gs;
  for (const auto& g : *grades_)
    if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
  std::sort(gs.begin(), gs.end());
  return gs;
}

const AlgebraFlags& Algebra::flags() const {
  std::call_once(flags_once_, [this] { flags_ = check_flags(*this); });
  return flags_;
}

AlgebraFlags check_flags(const Algebra& a) {
  const int d = a.dim();
  AlgebraFlags f;
  f.associative.holds = f.commutative.holds = f.anticommutative.holds = true;
  f.jacobi.holds = f.alternative.holds = true;

  auto prod = [&](const RatVec& x, const RatVec& y) { return a.product(x, y); };
  std::vector<RatVec> e(d);
  for (int i = 0; i < d; ++i) e[i] = basis_vec(i, d);

  // pairwise identities
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      RatVec ij = prod(e[i], e[j]), ji = prod(e[j], e[i]);
      if (f.commutative.holds && !(ij == ji)) {
        f.commutative.holds = false;
        f.commutative.witness = {i, j, -1};
      }
      if (f.anticommutative.holds && !vec_is_zero(vec_add(ij, ji))) {
        f.anticommutative.holds = false;
        f.anticommutative.witness = {i, j, -1};
      }
    }
  }

  // triple identities
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      RatVec ij = prod(e[i], e[j]);
      for (int k = 0; k < d; ++k) {
        RatVec left = prod(ij, e[k]);
        RatVec right = prod(e[i], prod(e[j], e[k]));
        if (f.associative.holds && !(left == right)) {
          f.associative.holds = false;
          f.associative.witness = {i, j, k};
        }
        if (f.jacobi.holds) {
          RatVec jac = prod(e[i], prod(e[j], e[k]));
          jac = vec_add(jac, prod(e[j], prod(e[k], e[i])));
          jac = vec_add(jac, prod(e[k], prod(e[i], e[j])));
          if (!vec_is_zero(jac)) {
            f.jacobi.holds = false;
            f.jacobi.witness = {i, j, k};
          }
        }
        if (f.alternative.holds) {
          // linearized alternativity: associator alternates in the first
          // two and the last two arguments
          auto assoc = [&](int x, int y, int z) {
            return vec_sub(prod(prod(e[x], e[y]), e[z]), prod(e[x], prod(e[y], e[z])));
          };
          RatVec s1 = vec_add(assoc(i, j, k), assoc(j, i, k));
          RatVec s2 = vec_add(assoc(i, j, k), assoc(i, k, j));
          if (!vec_is_zero(s1) || !vec_is_zero(s2)) {
            f.alternative.holds = false;
            f.alternative.witness = {i, j, k};
          }
        }
      }
    }
  }
  return f;
}

Submodule::Submodule(Algebra::Ptr parent, RatMat generators)
    : parent_(std::move(parent)), basis_(std::move(generators)) {
  const std::size_t d = static_cast<std::size_t>(parent_->dim());
  for (const auto& v : basis_)
    if (v.size() != d)
      throw ValidationError("submodule generator length does not match algebra dimension");
  if (rank(basis_) != basis_.size())
    throw ValidationError("submodule generators are linearly dependent (" +
                          std::to_string(basis_.size()) + " given, rank " +
                          std::to_string(rank(basis_)) + ")");
}

Submodule Submodule::full(Algebra::Ptr parent) {
  RatMat id = identity_matrix(parent->dim());
  return Submodule(std::move(parent), std::move(id));
}

Submodule Submodule::zero(Algebra::Ptr parent) {
  return Submodule(std::move(parent), RatMat{});
}

bool Submodule::contains(const RatVec& v) const { return in_row_span(basis_, v); }

bool Submodule::closed_under_product() const {
  for (const auto& x : basis_)
    for (const auto& y : basis_)
      if (!contains(parent_->product(x, y))) return false;
  return true;
}

bool Submodule::is_ideal() const {
  const int d = parent_->dim();
  for (const auto& x : basis_) {
    for (int i = 0; i < d; ++i) {
      RatVec ei = basis_vec(i, d);
      if (!contains(parent_->product(x, ei))) return false;
      if (!contains(parent_->product(ei, x))) return false;
    }
  }
  return true;
}

Submodule Submodule::intersect_grade(const Grade& m) const {
  if (!parent_->graded()) throw ValidationError("grade intersection needs a graded algebra");
  const int d = parent_->dim();
  // rows: coordinates outside grade m must vanish
  RatMat sys;
  for (int j = 0; j < d; ++j) {
    if (parent_->grade_of(j) == m) continue;
    RatVec row(basis_.size(), Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) row[i] = basis_[i][j];
    sys.push_back(std::move(row));
  }
  RatMat result;
  if (sys.empty()) {
    result = basis_;
  } else {
    for (const auto& coeffs : nullspace(sys)) {
      RatVec v(d, Rational(0));
      for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!coeffs[i].is_zero()) v = vec_add(v, vec_scale(basis_[i], coeffs[i]));
      result.push_back(std::move(v));
    }
  }
  return Submodule(parent_, row_span_canonical(std::move(result)));
}

ModuleSplit ModuleSplit::make(Algebra::Ptr parent, RatMat gens0, RatMat gens1) {
  Submodule p0(parent, std::move(gens0));
  Submodule p1(parent, std::move(gens1));
  const int d = parent->dim();
  if (p0.dim() + p1.dim() != d)
    throw ValidationError("split parts are not complementary: dim " +
                          std::to_string(p0.dim()) + " + " + std::to_string(p1.dim()) +
                          " != " + std::to_string(d));
  RatMat stacked = p0.basis_vectors();
  for (const auto& v : p1.basis_vectors()) stacked.push_back(v);
  if (rank(stacked) != static_cast<std::size_t>(d))
    throw ValidationError("split parts intersect nontrivially: joint rank " +
                          std::to_string(rank(stacked)) + " < " + std::to_string(d));
  bool sub = p0.closed_under_product();
  bool ideal = p0.is_ideal();
  return ModuleSplit{std::move(parent), std::move(p0), std::move(p1), sub, ideal};
}

AlgebraMorphism morphism_check(RatMat matrix, Algebra::Ptr source,
                               Algebra::Ptr target, Grade shift) {
  const int ds = source->dim(), dt = target->dim();
  if (matrix.size() != static_cast<std::size_t>(dt))
    throw ValidationError("morphism matrix must have target-dimension rows");
  for (const auto& row : matrix)
    if (row.size() != static_cast<std::size_t>(ds))
      throw ValidationError("morphism matrix must have source-dimension columns");

  AlgebraMorphism m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.matrix = std::move(matrix);
  m.shift = std::move(shift);
  m.injective = rank(m.matrix) == static_cast<std::size_t>(ds);

  m.status = MorphismStatus::verified;
  for (int i = 0; i < ds && m.status == MorphismStatus::verified; ++i) {
    for (int j = 0; j < ds; ++j) {
      RatVec lhs = m.apply(dense_of(m.source->basis_product(i, j), ds));
      RatVec rhs = m.target->product(matrix_column(m.matrix, i), matrix_column(m.matrix, j));
      if (!(lhs == rhs)) {
        m.status = MorphismStatus::refuted;
        m.refute_witness = {i, j};
        break;
      }
    }
  }

  if (m.source->graded() && m.target->graded()) {
    if (m.shift.z.size() != m.target->grading_rank() ||
        m.shift.parity.size() != m.target->parity_rank())
      throw ValidationError("morphism shift rank does not match target grading");
    for (int i = 0; i < ds && m.grading_compatible; ++i) {
      Grade want = m.source->grade_of(i) + m.shift;
      for (int r = 0; r < dt; ++r) {
        if (!m.matrix[r][i].is_zero() && !(m.target->grade_of(r) == want)) {
          m.grading_compatible = false;
          break;
        }
      }
    }
  }
  return m;
}

bool same_structure(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || a.basis() != b.basis()) return false;
  if (!(a.product_table() == b.product_table())) return false;
  if (a.graded() != b.graded()) return false;
  if (a.graded()) {
    if (a.grading_rank() != b.grading_rank() || a.parity_rank() != b.parity_rank())
      return false;
    for (int i = 0; i < a.dim(); ++i)
      if (!(a.grade_of(i) == b.grade_of(i))) return false;
  }
  if (a.has_involution() != b.has_involution()) return false;
  if (a.has_involution() && !(a.involution() == b.involution())) return false;
  return true;
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (f.target != g.source && !same_structure(*f.target, *g.source))
    throw ValidationError("morphism composition: inner algebras differ");
  Grade shift = f.shift;
  if (shift.z.size() == g.shift.z.size() && shift.parity.size() == g.shift.parity.size())
    shift = shift + g.shift;
  return morphism_check(matmul(g.matrix, f.matrix), f.source, g.target, shift);
}

Algebra::Ptr commutator_algebra(const Algebra::Ptr& a) {
  const int d = a->dim();
  Algebra::Spec spec;
  spec.name = "bracket(" + a->name() + ")";
  spec.basis = a->basis();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      RatVec c = vec_sub(a->product(basis_vec(i, d), basis_vec(j, d)),
                         a->product(basis_vec(j, d), basis_vec(i, d)));
      SparseVec sv = sparse_of(c);
      if (!sv.empty()) spec.product[{i, j}] = std::move(sv);
    }
  }
  if (a->graded()) {
    spec.grading_rank = a->grading_rank();
    spec.parity_rank = a->parity_rank();
    std::vector<Grade> gs;
    for (int i = 0; i < d; ++i) gs.push_back(a->grade_of(i));
    spec.grades = std::move(gs);
  }
  if (a->has_involution()) spec.involution = a->involution();
  return Algebra::make(std::move(spec));
}

Algebra::Ptr direct_sum(const Algebra::Ptr& a, const Algebra::Ptr& b) {
  const int da = a->dim(), db = b->dim();
  Algebra::Spec spec;
  spec.name = "sum(" + a->name() + "," + b->name() + ")";
  spec.basis = a->basis();
  for (const auto& lbl : b->basis()) {
    std::string l = lbl;
    while (std::find(spec.basis.begin(), spec.basis.end(), l) != spec.basis.end()) l += "'";
    spec.basis.push_back(l);
  }
  for (const auto& [ij, row] : a->product_table()) spec.product[ij] = row;
  for (const auto& [ij, row] : b->product_table()) {
    SparseVec shifted;
    for (const auto& [k, c] : row) shifted.emplace_back(k + da, c);
    spec.product[{ij.first + da, ij.second + da}] = std::move(shifted);
  }
  if (a->graded() && b->graded()) {
    if (a->grading_rank() != b->grading_rank() || a->parity_rank() != b->parity_rank())
      throw ValidationError("direct sum: grading ranks differ");
    spec.grading_rank = a->grading_rank();
    spec.parity_rank = a->parity_rank();
    std::vector<Grade> gs;
    for (int i = 0; i < da; ++i) gs.push_back(a->grade_of(i));
    for (int i = 0; i < db; ++i) gs.push_back(b->grade_of(i));
    spec.grades = std::move(gs);
  }
  if (a->has_involution() && b->has_involution()) {
    RatMat inv = zero_matrix(da + db, da + db);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) inv[i][j] = a->involution()[i][j];
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < db; ++j) inv[da + i][da + j] = b->involution()[i][j];
    spec.involution = std::move(inv);
  }
  return Algebra::make(std::move(spec));
}

Algebra::Ptr semidirect(const Algebra::Ptr& h, const std::vector<RatMat>& rho, int k) {
  const int dh = h->dim();
  if (k < 1) throw ValidationError("semidirect: translation rank must be positive");
  if (static_cast<int>(rho.size()) != dh)
    throw ValidationError("semidirect: one representation matrix per basis element required");
  for (const auto& m : rho) {
    if (m.size() != static_cast<std::size_t>(k))
      throw ValidationError("semidirect: representation matrices must be k x k");
    for (const auto& row : m)
      if (row.size() != static_cast<std::size_t>(k))
        throw ValidationError("semidirect: representation matrices must be k x k");
  }
  if (!h->flags().jacobi.holds)
    throw ValidationError("semidirect: acting algebra fails the Jacobi identity");

  // representation axiom on basis pairs
  for (int i = 0; i < dh; ++i) {
    for (int j = 0; j < dh; ++j) {
      RatMat lhs = zero_matrix(k, k);
      for (const auto& [t, c] : h->basis_product(i, j)) {
        for (int r = 0; r < k; ++r)
          for (int s = 0; s < k; ++s) lhs[r][s] += c * rho[t][r][s];
      }
      RatMat rhs = matmul(rho[i], rho[j]);
      RatMat rhs2 = matmul(rho[j], rho[i]);
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) rhs[r][s] -= rhs2[r][s];
      if (!(lhs == rhs))
        throw ValidationError("semidirect: rho fails the representation axiom on pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  Algebra::Spec spec;
  spec.name = "semidirect(R^" + std::to_string(k) + "," + h->name() + ")";
  for (int i = 0; i < k; ++i) spec.basis.push_back("t" + std::to_string(i));
  for (const auto& lbl : h->basis()) spec.basis.push_back(lbl);
  for (int i = 0; i < dh; ++i) {
    for (int a = 0; a < k; ++a) {
      SparseVec act, nact;
      for (int r = 0; r < k; ++r) {
        if (!rho[i][r][a].is_zero()) {
          act.emplace_back(r, rho[i][r][a]);
          nact.emplace_back(r, -rho[i][r][a]);
        }
      }
      if (!act.empty()) {
        spec.product[{k + i, a}] = std::move(act);
        spec.product[{a, k + i}] = std::move(nact);
      }
    }
    for (int j = 0; j < dh; ++j) {
      SparseVec row;
      for (const auto& [t, c] : h->basis_product(i, j)) row.emplace_back(k + t, c);
      if (!row.empty()) spec.product[{k + i, k + j}] = std::move(row);
    }
  }
  return Algebra::make(std::move(spec));
}

Algebra::Ptr pushforward_product(int e_dim, const Algebra::Ptr& a, const RatMat& pi,
                                 const RatMat& section) {
  const int da = a->dim();
  if (pi.size() != static_cast<std::size_t>(da))
    throw ValidationError("pushforward: pi must map E onto A (row count)");
  for (const auto& row : pi)
    if (row.size() != static_cast<std::size_t>(e_dim))
      throw ValidationError("pushforward: pi column count must equal dim E");
  if (section.size() != static_cast<std::size_t>(e_dim))
    throw ValidationError("pushforward: section must map A into E (row count)");
  for (const auto& row : section)
    if (row.size() != static_cast<std::size_t>(da))
      throw ValidationError("pushforward: section column count must equal dim A");
  if (rank(pi) != static_cast<std::size_t>(da))
    throw ValidationError("pushforward: pi is not surjective");
  RatMat comp = matmul(pi, section);
  RatMat id = identity_matrix(da);
  for (int j = 0; j < da; ++j) {
    for (int i = 0; i < da; ++i) {
      if (!(comp[i][j] == id[i][j]))
        throw ValidationError("pushforward: pi o section != id at basis vector " +
                              std::to_string(j) + " of A");
    }
  }

  Algebra::Spec spec;
  spec.name = "pushforward(" + a->name() + ")";
  for (int i = 0; i < e_dim; ++i) spec.basis.push_back("v" + std::to_string(i));
  for (int i = 0; i < e_dim; ++i) {
    RatVec pi_i = matrix_column(pi, i);
    for (int j = 0; j < e_dim; ++j) {
      RatVec prod_a = a->product(pi_i, matrix_column(pi, j));
      SparseVec sv = sparse_of(matvec(section, prod_a));
      if (!sv.empty()) spec.product[{i, j}] = std::move(sv);
    }
  }
  return Algebra::make(std::move(spec));
}

Algebra::Ptr shift_grading(const Algebra::Ptr& a, const Grade& l) {
  if (!a->graded()) throw ValidationError("shift_grading: algebra is ungraded");
  if (l.z.size() != a->grading_rank() || l.parity.size() != a->parity_rank())
    throw ValidationError("shift_grading: shift rank mismatch");
  Algebra::Spec spec;
  spec.name = a->name();
  spec.basis = a->basis();
  spec.product = a->product_table();
  spec.grading_rank = a->grading_rank();
  spec.parity_rank = a->parity_rank();
  std::vector<Grade> gs;
  for (int i = 0; i < a->dim(); ++i) gs.push_back(a->grade_of(i) - l);
  spec.grades = std::move(gs);
  if (a->has_involution()) spec.involution = a->involution();
  // a shift leaves only a module grading behind
  spec.module_grading_only = !l.is_zero() || !a->grading_multiplicative();
  return Algebra::make(std::move(spec));
}

}  // namespace formcert
