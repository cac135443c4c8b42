#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formcert/grassmann.hpp"

namespace formcert {

enum class Verdict { certified, refuted, degenerate };

// Bracketing coverage for nonassociative parents. `automatic` is
// right-nested for associative algebras (provably sufficient) and full
// enumeration up to the cap otherwise.
enum class ParenPolicy { automatic, right_nested_only, all_trees };

// Factor-count limit for full ParenTree enumeration (Catalan(4) = 14).
inline constexpr int kParenEnumCap = 5;

struct ModeSpec {
  enum class Kind { exact, modular };
  Kind kind = Kind::exact;
  std::uint64_t prime = kDefaultPrime;
  int trials = 20;
  std::uint64_t seed = 1;
};

// A concrete nonzero term: the monomial, the algebra basis direction and
// the coefficient that re-evaluates nonzero.
struct WitnessTerm {
  std::vector<int> monomial;
  int basis = -1;
  std::string basis_label;
  MultiPoly coeff;                          // exact mode
  std::optional<ModAssignment> assignment;  // modular mode
  std::optional<std::uint64_t> value;
  std::string tree;  // bracketing that produced the term
};

// One row of the weak-nilpotency verdict matrix: a multiset of graded
// components and a bracketing shape.
struct WeakEntry {
  std::vector<Grade> tuple;  // sorted component grades
  std::string tree;
  bool zero = true;
};

// Machine-checkable record of a (k,s)-nil / weak-nil / solv claim.
struct NilCertificate {
  std::string kind;  // nil_bound | nil_degree | weak_nil | solv
  std::string algebra;
  RatMat subject_basis;  // the caller's generators, verbatim
  int k = 1;
  int s = 0;
  int ngen = 0;
  ModeSpec mode;
  bool probabilistic = false;  // certified by modular trials only
  Verdict verdict = Verdict::certified;
  std::optional<WitnessTerm> witness;
  std::vector<std::string> paren_trees;  // covered bracketings
  std::string paren_note;                // e.g. quotient-representative only
  std::vector<WeakEntry> weak_matrix;
  std::vector<NilCertificate> parts;  // per-part solv sub-certificates
  std::string detail;                 // span failures, exceeded notes
  unsigned degree_bound = 0;          // Schwartz-Zippel degree (modular)
};

// Certifies that every (s+1)-st wedge power of a generic degree-k form
// over V vanishes, with N = k(s+1) generators. Refutations carry the first
// nonzero term.
NilCertificate nil_bound(const Submodule& v, int k, int s, const ModeSpec& mode,
                         ParenPolicy policy = ParenPolicy::automatic,
                         const Budget& budget = default_budget());

struct NilDegreeResult {
  std::optional<int> degree;  // empty when degenerate or s_max exceeded
  NilCertificate certificate;
};

// Smallest s <= s_max whose bound certifies, with a nonzero witness at
// power s. Zero submodules report degenerate.
NilDegreeResult nil_degree(const Submodule& v, int k, int s_max, const ModeSpec& mode,
                           const Budget& budget = default_budget());

// Weak (k,s)-nilpotency of a graded submodule: every bracketing in the
// policy set of every length-(s+1) sequence of graded components of the
// generic k-form vanishes.
NilCertificate weak_nil(const Submodule& v, int k, int s, const ModeSpec& mode,
                        ParenPolicy policy = ParenPolicy::automatic,
                        const Budget& budget = default_budget());

// (k,s)-solv / weak-solv against a user-supplied decomposition: the parts
// must span V and each part must pass nil_bound (or weak_nil).
NilCertificate solv_verify(const Submodule& v, const std::vector<Submodule>& parts,
                           int k, int s, bool weak, const ModeSpec& mode,
                           const Budget& budget = default_budget());

}  // namespace formcert
