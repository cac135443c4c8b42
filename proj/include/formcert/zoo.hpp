#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formcert/algebra.hpp"

namespace formcert {
namespace zoo {

// Classical families in their standard matrix bases, realified to rational
// structure constants. Lie families carry the bracket.
Algebra::Ptr abelian(int k);
Algebra::Ptr so(int n);
Algebra::Ptr so_pq(int p, int q);
Algebra::Ptr u(int n);
Algebra::Ptr su(int n);
Algebra::Ptr sp(int n);     // compact symplectic: quaternionic anti-Hermitian
Algebra::Ptr gl_r(int n);   // bracket on n x n real matrices
Algebra::Ptr gl_c(int n);   // bracket on n x n complex matrices, realified
Algebra::Ptr mat_r(int n);  // associative n x n real matrix algebra
Algebra::Ptr heisenberg(int n);
Algebra::Ptr iso(int p, int q);  // R^{p+q} semidirect so(p,q)
// Abelian (Z/2)-graded translation algebra with k even and l odd generators.
Algebra::Ptr super_translation(int k, int l);

// Cayley-Dickson doubling: product (a,b)(c,d) = (ac + gamma conj(d) b,
// da + b conj(c)), involution (a,b) -> (conj(a), -b).
Algebra::Ptr cayley_dickson(const Algebra::Ptr& a, const Rational& gamma);

// Iterated doubling from R; dim 2^l. l = 0,1,2,3,4 give R, C, H, O and the
// sedenions. The cap guards against accidental blowup.
Algebra::Ptr cd_tower(int l, const Rational& gamma = Rational(-1), int max_level = 5);

enum class UnitaryMode { bracket, matrix };

struct UnitarySpec {
  int k = 1;
  int p = 1, q = 0;  // signature, p + q = k
  Algebra::Ptr base;  // involutive algebra (CD tower member)
  UnitaryMode mode = UnitaryMode::bracket;
};

// Real algebra of k x k matrices X over the base with X^dagger = -eta X eta
// (anti-Hermitian for the signature form). Bracket mode returns the
// commutator algebra; matrix mode returns the plain product and fails with
// a witness pair when the module is not closed under it.
Algebra::Ptr unitary_cd(const UnitarySpec& spec);

// One doubling step of the unitary inclusion: anti-Hermitian k x k matrices
// over CD^l(R) into 2k x 2k matrices over CD^{l-1}(R), entrywise
// x = (a,b) |-> [[a, -b], [conj(b), conj(a)]]. Bracket multiplicativity is
// verified on all basis pairs; the verdict lives in the returned morphism.
AlgebraMorphism cd_block_inclusion(int k, int p, int q, int l);

// Full chain down to CD^0: the composite of single doubling steps.
AlgebraMorphism cd_inclusion_composite(int k, int p, int q, int l);

// Structured search for nonzero x, y with x * y = 0: basis elements first,
// then pairwise sums and differences, at most `bound` candidates.
std::optional<std::pair<RatVec, RatVec>> find_zero_divisor(const Algebra::Ptr& a,
                                                           int bound);

}  // namespace zoo
}  // namespace formcert
