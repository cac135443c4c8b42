#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formcert/certify.hpp"

namespace formcert {

struct HPParams {
  int n = 4;                  // spacetime dimension, >= 2
  Rational lambda = Rational(0);
  ParenPolicy paren = ParenPolicy::right_nested_only;
};

enum class GradingUse { ungraded, graded };

// Curvature of a connection 1-form against a formal generic derivative:
// dOmega parameterizes d(omega) with fresh coefficients.
AForm curvature(const AForm& omega, const AForm& d_omega);

// Torsion: de + omega ^ e, with de formal.
AForm torsion(const AForm& e, const AForm& d_e, const AForm& omega);

// The Hilbert-Palatini n-form over generic connection data:
//   (^{n-2} e) ^ Omega + Lambda/(n-1)! ^{n} e
// with e generic over part0, omega and d(omega) generic over part1, and
// powers taken right-nested ((^{n-2} e) as a block, matching the quotient
// representative). Allocates N = n + 2 generators.
AForm hp_form(const Algebra::Ptr& a, const ModuleSplit& split, const HPParams& params,
              GradingUse grading_use = GradingUse::ungraded,
              const Budget& budget = default_budget());

// Premise of the threshold theorem: per-grade decompositions with their
// (k_m, s_m). An empty entry list uses the whole component as its own
// single-part decomposition at the default (k, s).
struct PremiseSpec {
  enum class Condition { G1, G2 };
  Condition condition = Condition::G1;
  struct Entry {
    Grade grade;                // matched against component grades
    std::vector<RatMat> parts;  // generator lists; empty = whole component
    int k = 1;
    int s = 2;
  };
  std::vector<Entry> entries;
  int default_k = 1;
  int default_s = 2;
};

struct EHPReport {
  std::string algebra;
  Grade shift;
  std::string condition;  // "G1" | "G2"
  bool premise_ok = false;
  bool part0_subalgebra = false;
  std::string premise_detail;
  std::vector<NilCertificate> premise_certs;
  int k = 0, s = 0;                  // min over grades
  int threshold_homogeneous = 0;     // k + s + 1
  int threshold_trivial = 0;         // k + s + 3
  bool core_power_vanishes = false;  // ^{k+s+1} e == 0

  struct Row {
    int n = 0;
    bool inhomogeneous_vanishes = false;  // ^{n} e == 0
    bool alpha_vanishes = false;          // with a generic curvature slot
    bool hp_form_vanishes = false;        // the specialized hp_form, Lambda = 1
    std::optional<WitnessTerm> witness;   // below-threshold nontriviality
  };
  std::vector<Row> rows;
  ModeSpec mode;
  bool probabilistic = false;
  std::string paren_note;
};

// Verifies the premise (weak-solv certificates per grade component of
// part0 for G1, of the whole algebra for G2), computes (k,s), certifies
// the obstruction core ^{k+s+1} e = 0, and tabulates per-n vanishing
// verdicts. The alpha column pairs the e-powers with a generic
// algebra-valued curvature slot, so below-threshold rows carry honest
// nonzero witnesses. A certified premise contradicting a threshold verdict
// is an engine soundness error and throws.
//
// A nonzero shift l first replaces the algebra by its shift A[-l]; premise
// grades refer to the shifted grading.
EHPReport theorem_a_report(const Algebra::Ptr& a, const ModuleSplit& split,
                           const PremiseSpec& premise, int n_min, int n_max,
                           const Grade& shift, const ModeSpec& mode,
                           const Budget& budget = default_budget());

// The two Euler-Lagrange equation forms as objects (no variation is
// performed): e ^ Omega + Lambda/(n-1)! ^{3} e and e ^ Theta.
std::pair<AForm, AForm> ep_equation_forms(const Algebra::Ptr& a, const ModuleSplit& split,
                                          const HPParams& params,
                                          const Budget& budget = default_budget());

}  // namespace formcert
