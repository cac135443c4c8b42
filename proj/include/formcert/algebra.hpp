#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formcert/grade.hpp"
#include "formcert/linalg.hpp"

namespace formcert {

// Sparse product row: the nonzero coefficients c_{ij}^k for one basis pair.
using SparseVec = std::vector<std::pair<int, Rational>>;
using ProductTable = std::map<std::pair<int, int>, SparseVec>;

// One polynomial-identity check over basis tuples: holds, or fails with a
// witness tuple (unused slots -1).
struct FlagCheck {
  bool holds = false;
  std::array<int, 3> witness{-1, -1, -1};
};

struct AlgebraFlags {
  FlagCheck associative;
  FlagCheck commutative;
  FlagCheck anticommutative;
  FlagCheck jacobi;
  FlagCheck alternative;
};

// Finite-dimensional algebra over the rationals, presented by structure
// constants. Optionally graded over Z^d x (Z/2)^e and/or equipped with a
// product-reversing involution. Immutable after construction; the flags
// cache is computed once under a lock and is observably pure.
class Algebra {
 public:
  using Ptr = std::shared_ptr<const Algebra>;

  struct Spec {
    std::string name;  // display only
    std::vector<std::string> basis;
    ProductTable product;  // omitted pairs mean zero product
    std::size_t grading_rank = 0;
    std::size_t parity_rank = 0;
    std::optional<std::vector<Grade>> grades;      // per basis index
    std::optional<RatMat> involution;              // dim x dim
    // Shifted algebras A[-l] carry a module grading that is no longer
    // product-compatible; only shift_grading sets this.
    bool module_grading_only = false;
  };

  // Validates and constructs. Grading incompatibility and involution axiom
  // failures are errors carrying the offending tuple.
  static Ptr make(Spec spec);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& basis_label(int i) const { return basis_[i]; }
  const ProductTable& product_table() const { return product_; }

  // c_{ij}: product of basis elements i, j as a sparse row (empty if zero).
  const SparseVec& basis_product(int i, int j) const;
  // Bilinear product of coordinate vectors.
  RatVec product(const RatVec& x, const RatVec& y) const;

  bool graded() const { return grades_.has_value(); }
  std::size_t grading_rank() const { return grading_rank_; }
  std::size_t parity_rank() const { return parity_rank_; }
  const Grade& grade_of(int i) const;
  // Sorted list of distinct grades among basis elements.
  std::vector<Grade> grade_set() const;
  // False for shifted algebras whose grading is a module grading only.
  bool grading_multiplicative() const { return grading_multiplicative_; }

  bool has_involution() const { return involution_.has_value(); }
  const RatMat& involution() const { return *involution_; }
  RatVec involute(const RatVec& x) const { return matvec(*involution_, x); }

  // Exhaustive basis-tuple checks, computed once on first use.
  const AlgebraFlags& flags() const;

 private:
  Algebra() = default;

  std::string name_;
  std::vector<std::string> basis_;
  ProductTable product_;
  std::size_t grading_rank_ = 0, parity_rank_ = 0;
  std::optional<std::vector<Grade>> grades_;
  bool grading_multiplicative_ = true;
  std::optional<RatMat> involution_;

  mutable std::once_flag flags_once_;
  mutable AlgebraFlags flags_;
};

// Exhaustive flag computation (also reachable as Algebra::flags()).
AlgebraFlags check_flags(const Algebra& a);

// Submodule of an algebra, given by an independent list of coordinate
// vectors. Dependent generator lists are rejected.
class Submodule {
 public:
  Submodule(Algebra::Ptr parent, RatMat generators);

  static Submodule full(Algebra::Ptr parent);
  static Submodule zero(Algebra::Ptr parent);

  const Algebra::Ptr& parent() const { return parent_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const RatMat& basis_vectors() const { return basis_; }

  bool contains(const RatVec& v) const;
  bool closed_under_product() const;  // subalgebra test (G1)
  bool is_ideal() const;              // two-sided ideal test (E1)

  // V intersect A^m as a submodule (canonical basis).
  Submodule intersect_grade(const Grade& m) const;

 private:
  Algebra::Ptr parent_;
  RatMat basis_;
};

// Reductive decomposition A = part0 + part1 (direct). Construction verifies
// complementarity and reports the computed G1/E1 properties of part0.
struct ModuleSplit {
  Algebra::Ptr parent;
  Submodule part0;
  Submodule part1;
  bool part0_subalgebra;
  bool part0_ideal;

  static ModuleSplit make(Algebra::Ptr parent, RatMat gens0, RatMat gens1);
};

enum class MorphismStatus { verified, refuted, unchecked };

// Linear map between algebras with an optional grading shift; the
// multiplicativity verdict is recorded, never thrown.
struct AlgebraMorphism {
  Algebra::Ptr source;
  Algebra::Ptr target;
  RatMat matrix;  // target.dim x source.dim
  Grade shift;
  MorphismStatus status = MorphismStatus::unchecked;
  std::optional<std::pair<int, int>> refute_witness;  // basis pair
  bool grading_compatible = true;  // meaningful when both graded
  bool injective = false;          // full column rank

  RatVec apply(const RatVec& v) const { return matvec(matrix, v); }
};

AlgebraMorphism morphism_check(RatMat matrix, Algebra::Ptr source,
                               Algebra::Ptr target, Grade shift);

// g after f; multiplicativity re-verified on the composite. The inner
// algebras must agree structurally.
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

// Structural identity: same labels, products, grading and involution
// (display name ignored).
bool same_structure(const Algebra& a, const Algebra& b);

// Bracket algebra [x,y] = x*y - y*x on the same module.
Algebra::Ptr commutator_algebra(const Algebra::Ptr& a);

// Block-diagonal sum; gradings concatenate when both present (ranks must
// agree), otherwise the result is ungraded.
Algebra::Ptr direct_sum(const Algebra::Ptr& a, const Algebra::Ptr& b);

// R^k semidirect h via a verified Lie representation rho (one k x k matrix
// per basis element of h). Translations come first in the basis.
Algebra::Ptr semidirect(const Algebra::Ptr& h, const std::vector<RatMat>& rho,
                        int k);

// Product transported onto E along a split surjection: x *' y =
// section(pi(x) * pi(y)). pi: E -> A surjective, pi o section = id.
Algebra::Ptr pushforward_product(int e_dim, const Algebra::Ptr& a,
                                 const RatMat& pi, const RatMat& section);

// Same structure constants, every grade translated by -l.
Algebra::Ptr shift_grading(const Algebra::Ptr& a, const Grade& l);

}  // namespace formcert
