#include "formcert/certify.hpp"

#include <algorithm>
#include <sstream>

namespace formcert {

namespace {

std::vector<ParenTree> trees_for(const Algebra& alg, int t, ParenPolicy policy,
                                 std::string* note) {
  switch (policy) {
    case ParenPolicy::right_nested_only:
      if (!alg.flags().associative.holds) *note = "quotient-representative only";
      return {ParenTree::right_nested(t)};
    case ParenPolicy::all_trees:
      if (t > kParenEnumCap)
        throw ValidationError("paren enumeration cap is " + std::to_string(kParenEnumCap) +
                              " factors (got " + std::to_string(t) +
                              "); use the right-nested policy");
      return ParenTree::enumerate(t);
    case ParenPolicy::automatic:
      if (alg.flags().associative.holds) return {ParenTree::right_nested(t)};
      if (t <= kParenEnumCap) return ParenTree::enumerate(t);
      *note = "quotient-representative only";
      return {ParenTree::right_nested(t)};
  }
  return {ParenTree::right_nested(t)};
}

WitnessTerm exact_witness(const AForm& f, const Algebra& alg, const std::string& tree) {
  WitnessTerm w;
  const auto& [key, poly] = *f.terms.begin();
  w.monomial = mask_indices(key.first);
  w.basis = key.second;
  w.basis_label = alg.basis_label(key.second);
  w.coeff = poly;
  w.tree = tree;
  return w;
}

WitnessTerm modular_witness(GMask mono, int basis, std::uint64_t value,
                            const ModAssignment& assignment, const Algebra& alg,
                            const std::string& tree) {
  WitnessTerm w;
  w.monomial = mask_indices(mono);
  w.basis = basis;
  w.basis_label = alg.basis_label(basis);
  w.assignment = assignment;
  w.value = value;
  w.tree = tree;
  return w;
}

NilCertificate base_certificate(const char* kind, const Submodule& v, int k, int s,
                                int ngen, const ModeSpec& mode) {
  NilCertificate c;
  c.kind = kind;
  c.algebra = v.parent()->name();
  c.subject_basis = v.basis_vectors();
  c.k = k;
  c.s = s;
  c.ngen = ngen;
  c.mode = mode;
  return c;
}

}  // namespace

NilCertificate nil_bound(const Submodule& v, int k, int s, const ModeSpec& mode,
                         ParenPolicy policy, const Budget& budget) {
  if (k < 1) throw ValidationError("nil_bound: form degree k must be >= 1");
  if (s < 0) throw ValidationError("nil_bound: s must be >= 0");
  const int t = s + 1;
  const int ngen = k * t;
  if (ngen > kMaxGenerators)
    throw CapError("nil_bound needs " + std::to_string(ngen) + " generators; the engine caps at " +
                   std::to_string(kMaxGenerators));
  const Algebra& alg = *v.parent();

  NilCertificate cert = base_certificate("nil_bound", v, k, s, ngen, mode);
  auto trees = trees_for(alg, t, policy, &cert.paren_note);
  for (const auto& tr : trees) cert.paren_trees.push_back(tr.str());
  cert.degree_bound = static_cast<unsigned>(t);

  if (mode.kind == ModeSpec::Kind::exact) {
    AForm f = generic_form(v, k, ngen, "x");
    for (const auto& tr : trees) {
      AForm p = wedge_power(f, t, tr, budget);
      if (!p.is_zero()) {
        cert.verdict = Verdict::refuted;
        cert.witness = exact_witness(p, alg, tr.str());
        return cert;
      }
    }
    cert.verdict = Verdict::certified;
    return cert;
  }

  // modular: rebuild the construction with field scalars per trial
  SplitMix64 rng(mode.seed);
  for (int trial = 0; trial < mode.trials; ++trial) {
    ModAssignment assignment;
    ModRing ring{mode.prime, &rng, &assignment};
    FormContext ctx{v.parent(), ngen, false};
    auto f = generic_form_t(ring, ctx, v, k, "x");
    for (const auto& tr : trees) {
      auto p = wedge_power(ring, f, tr, budget);
      if (!p.is_zero()) {
        const auto& [key, value] = *p.terms.begin();
        cert.verdict = Verdict::refuted;
        cert.witness = modular_witness(key.first, key.second, value, assignment, alg, tr.str());
        return cert;
      }
    }
  }
  cert.verdict = Verdict::certified;
  cert.probabilistic = true;
  return cert;
}

NilDegreeResult nil_degree(const Submodule& v, int k, int s_max, const ModeSpec& mode,
                           const Budget& budget) {
  if (s_max < 1) throw ValidationError("nil_degree: s_max must be >= 1");
  NilDegreeResult result;
  if (v.dim() == 0) {
    result.certificate = base_certificate("nil_degree", v, k, 0, 0, mode);
    result.certificate.verdict = Verdict::degenerate;
    result.certificate.detail = "zero submodule: the generic form itself vanishes";
    return result;
  }
  NilCertificate last;
  for (int s = 1; s <= s_max; ++s) {
    NilCertificate bound = nil_bound(v, k, s, mode, ParenPolicy::automatic, budget);
    if (bound.verdict != Verdict::certified) {
      last = std::move(bound);
      continue;
    }
    // nonzero witness at power s under the right-nested representative
    NilCertificate cert = std::move(bound);
    cert.kind = "nil_degree";
    const int ngen = cert.ngen;
    const Algebra& alg = *v.parent();
    if (mode.kind == ModeSpec::Kind::exact) {
      AForm f = generic_form(v, k, ngen, "x");
      AForm w = wedge_power(f, s, ParenTree::right_nested(s), budget);
      if (w.is_zero())
        throw Error("nil_degree: internal inconsistency, power " + std::to_string(s) +
                    " vanished after power " + std::to_string(s + 1) + " was the first bound");
      cert.witness = exact_witness(w, alg, ParenTree::right_nested(s).str());
    } else {
      SplitMix64 rng(mode.seed ^ 0x9e3779b9u);
      bool found = false;
      for (int trial = 0; trial < mode.trials && !found; ++trial) {
        ModAssignment assignment;
        ModRing ring{mode.prime, &rng, &assignment};
        FormContext ctx{v.parent(), ngen, false};
        auto f = generic_form_t(ring, ctx, v, k, "x");
        auto w = wedge_power(ring, f, ParenTree::right_nested(s), budget);
        if (!w.is_zero()) {
          const auto& [key, value] = *w.terms.begin();
          cert.witness = modular_witness(key.first, key.second, value, assignment, alg,
                                         ParenTree::right_nested(s).str());
          found = true;
        }
      }
      if (!found)
        throw Error("nil_degree: modular trials found no nonzero witness at power " +
                    std::to_string(s));
    }
    result.degree = s;
    result.certificate = std::move(cert);
    return result;
  }
  result.certificate = last;
  result.certificate.kind = "nil_degree";
  result.certificate.detail = "no vanishing bound found up to s_max = " + std::to_string(s_max);
  return result;
}

namespace {

// Enumerates length-t index tuples over [0, count) in lexicographic order.
bool next_tuple(std::vector<int>& tuple, int count) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[i] < count) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace

NilCertificate weak_nil(const Submodule& v, int k, int s, const ModeSpec& mode,
                        ParenPolicy policy, const Budget& budget) {
  const Algebra::Ptr& parent = v.parent();
  if (!parent->graded())
    throw ValidationError("weak_nil: parent algebra is ungraded");
  if (k < 1 || s < 0) throw ValidationError("weak_nil: need k >= 1, s >= 0");
  const int t = s + 1;
  const int ngen = k * t;
  if (ngen > kMaxGenerators)
    throw CapError("weak_nil needs " + std::to_string(ngen) + " generators; cap is " +
                   std::to_string(kMaxGenerators));

  NilCertificate cert = base_certificate("weak_nil", v, k, s, ngen, mode);
  auto trees = trees_for(*parent, t, policy, &cert.paren_note);
  for (const auto& tr : trees) cert.paren_trees.push_back(tr.str());
  cert.degree_bound = static_cast<unsigned>(t);

  // graded components of V with their grades
  std::vector<Grade> comp_grades;
  std::vector<Submodule> comps;
  auto grades = parent->grade_set();
  for (const auto& g : grades) {
    Submodule piece = v.intersect_grade(g);
    if (piece.dim() == 0) continue;
    comp_grades.push_back(g);
    comps.push_back(std::move(piece));
  }
  if (comps.empty()) {
    cert.verdict = Verdict::certified;
    cert.detail = "no nonzero graded components";
    return cert;
  }

  auto record = [&](const std::vector<int>& tuple, const std::string& tree, bool zero) {
    std::vector<Grade> key;
    for (int c : tuple) key.push_back(comp_grades[c]);
    std::sort(key.begin(), key.end());
    for (auto& e : cert.weak_matrix) {
      if (e.tuple == key && e.tree == tree) {
        e.zero = e.zero && zero;
        return;
      }
    }
    cert.weak_matrix.push_back(WeakEntry{std::move(key), tree, zero});
  };

  const int ncomp = static_cast<int>(comps.size());
  auto run_tuples = [&](auto&& make_args, auto&& product_nonzero) -> bool {
    std::vector<int> tuple(t, 0);
    do {
      for (const auto& tr : trees) {
        bool nonzero = product_nonzero(make_args(tuple), tr, tuple);
        record(tuple, tr.str(), !nonzero);
        if (nonzero) return true;
      }
    } while (next_tuple(tuple, ncomp));
    return false;
  };

  if (mode.kind == ModeSpec::Kind::exact) {
    ExactRing ring;
    FormContext ctx{parent, ngen, false};
    std::vector<AForm> comp_forms;
    for (int c = 0; c < ncomp; ++c)
      comp_forms.push_back(generic_form_t(ring, ctx, comps[c], k, "x", c));
    bool refuted = run_tuples(
        [&](const std::vector<int>& tuple) {
          std::vector<AForm> args;
          for (int c : tuple) args.push_back(comp_forms[c]);
          return args;
        },
        [&](std::vector<AForm> args, const ParenTree& tr, const std::vector<int>&) {
          AForm p = wedge_sequence(ring, args, tr, budget);
          if (p.is_zero()) return false;
          cert.witness = exact_witness(p, *parent, tr.str());
          return true;
        });
    cert.verdict = refuted ? Verdict::refuted : Verdict::certified;
    return cert;
  }

  SplitMix64 rng(mode.seed);
  for (int trial = 0; trial < mode.trials; ++trial) {
    ModAssignment assignment;
    ModRing ring{mode.prime, &rng, &assignment};
    FormContext ctx{parent, ngen, false};
    std::vector<BasicForm<ModRing>> comp_forms;
    for (int c = 0; c < ncomp; ++c)
      comp_forms.push_back(generic_form_t(ring, ctx, comps[c], k, "x", c));
    bool refuted = run_tuples(
        [&](const std::vector<int>& tuple) {
          std::vector<BasicForm<ModRing>> args;
          for (int c : tuple) args.push_back(comp_forms[c]);
          return args;
        },
        [&](std::vector<BasicForm<ModRing>> args, const ParenTree& tr, const std::vector<int>&) {
          auto p = wedge_sequence(ring, args, tr, budget);
          if (p.is_zero()) return false;
          const auto& [key, value] = *p.terms.begin();
          cert.witness = modular_witness(key.first, key.second, value, assignment, *parent, tr.str());
          return true;
        });
    if (refuted) {
      cert.verdict = Verdict::refuted;
      return cert;
    }
  }
  cert.verdict = Verdict::certified;
  cert.probabilistic = true;
  return cert;
}

NilCertificate solv_verify(const Submodule& v, const std::vector<Submodule>& parts,
                           int k, int s, bool weak, const ModeSpec& mode,
                           const Budget& budget) {
  NilCertificate cert = base_certificate("solv", v, k, s, k * (s + 1), mode);
  cert.detail = weak ? "weak" : "strict";
  for (const auto& p : parts) {
    if (p.parent() != v.parent())
      throw ValidationError("solv_verify: part has a different parent algebra");
  }

  // (a) the parts must span the subject
  RatMat stacked;
  for (const auto& p : parts)
    for (const auto& row : p.basis_vectors()) stacked.push_back(row);
  for (std::size_t i = 0; i < v.basis_vectors().size(); ++i) {
    if (!in_row_span(stacked, v.basis_vectors()[i])) {
      cert.verdict = Verdict::refuted;
      std::ostringstream os;
      os << "subject generator #" << i << " lies outside the span of the parts: (";
      const auto& vec = v.basis_vectors()[i];
      for (std::size_t j = 0; j < vec.size(); ++j) os << (j ? "," : "") << vec[j].str();
      os << ")";
      cert.detail = os.str();
      return cert;
    }
  }

  // (b) each part carries the nil certificate
  bool all_ok = true;
  bool probabilistic = false;
  for (const auto& p : parts) {
    NilCertificate sub = weak ? weak_nil(p, k, s, mode, ParenPolicy::automatic, budget)
                              : nil_bound(p, k, s, mode, ParenPolicy::automatic, budget);
    all_ok = all_ok && sub.verdict == Verdict::certified;
    probabilistic = probabilistic || sub.probabilistic;
    cert.parts.push_back(std::move(sub));
  }
  cert.verdict = all_ok ? Verdict::certified : Verdict::refuted;
  cert.probabilistic = probabilistic;
  return cert;
}

}  // namespace formcert
