#include "formcert/grassmann.hpp"

#include <algorithm>

namespace formcert {

int merge_sign(GMask a, GMask b) {
  if (a & b) return 0;
  // parity of the number of (i in a, j in b) pairs with i > j
  int inversions = 0;
  for (GMask rest = b; rest; rest &= rest - 1) {
    int j = __builtin_ctz(rest);
    inversions += __builtin_popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<int> mask_indices(GMask m) {
  std::vector<int> idx;
  for (GMask rest = m; rest; rest &= rest - 1) idx.push_back(__builtin_ctz(rest));
  return idx;
}

std::vector<GMask> degree_masks(int n, int k) {
  std::vector<GMask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) { out.push_back(0); return out; }
  // Gosper's hack enumerates k-bit masks in increasing order
  GMask v = (GMask{1} << k) - 1;
  GMask limit = GMask{1} << n;
  while (v < limit) {
    out.push_back(v);
    GMask t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctz(v) + 1));
    if (v == 0) break;
  }
  return out;
}

ParenTree ParenTree::leaf() {
  return ParenTree(std::make_shared<const Node>());
}

ParenTree ParenTree::node(const ParenTree& l, const ParenTree& r) {
  auto n = std::make_shared<Node>();
  n->left = l.n_;
  n->right = r.n_;
  n->leaves = l.leaves() + r.leaves();
  return ParenTree(std::move(n));
}

ParenTree ParenTree::right_nested(int t) {
  if (t < 1) throw ValidationError("paren tree needs at least one leaf");
  ParenTree acc = leaf();
  for (int i = 1; i < t; ++i) acc = node(leaf(), acc);
  return acc;
}

ParenTree ParenTree::left_nested(int t) {
  if (t < 1) throw ValidationError("paren tree needs at least one leaf");
  ParenTree acc = leaf();
  for (int i = 1; i < t; ++i) acc = node(acc, leaf());
  return acc;
}

std::vector<ParenTree> ParenTree::enumerate(int t) {
  if (t < 1) throw ValidationError("paren tree needs at least one leaf");
  if (t == 1) return {leaf()};
  std::vector<ParenTree> out;
  for (int split = 1; split < t; ++split) {
    for (const auto& l : enumerate(split))
      for (const auto& r : enumerate(t - split)) out.push_back(node(l, r));
  }
  return out;
}

std::string ParenTree::str() const {
  if (is_leaf()) return "x";
  return "(" + left().str() + right().str() + ")";
}

AForm generic_form(const Submodule& v, int k, int ngen, const std::string& tag) {
  if (ngen < k)
    throw ValidationError("generic form: generator count " + std::to_string(ngen) +
                          " below form degree " + std::to_string(k));
  if (ngen > kMaxGenerators)
    throw CapError("generator count " + std::to_string(ngen) + " exceeds the engine limit of " +
                   std::to_string(kMaxGenerators));
  ExactRing ring;
  FormContext ctx{v.parent(), ngen, false};
  return generic_form_t(ring, ctx, v, k, tag);
}

GradedGenericForm graded_generic_form(const Submodule& v, int k, int ngen,
                                      const std::string& tag, bool parity_sign) {
  const auto& parent = v.parent();
  if (!parent->graded())
    throw ValidationError("graded generic form requires a graded parent algebra");
  if (ngen < k)
    throw ValidationError("generic form: generator count below form degree");
  ExactRing ring;
  FormContext ctx{parent, ngen, parity_sign};
  GradedGenericForm g;
  g.total.ctx = ctx;
  auto grades = parent->grade_set();
  for (std::size_t gi = 0; gi < grades.size(); ++gi) {
    Submodule piece = v.intersect_grade(grades[gi]);
    if (piece.dim() == 0) continue;
    AForm part = generic_form_t(ring, ctx, piece, k, tag, static_cast<int>(gi));
    g.total = form_add(ring, g.total, part);
    g.parts.emplace_back(grades[gi], std::move(part));
  }
  return g;
}

AForm wedge(const AForm& a, const AForm& b, const Budget& budget) {
  ExactRing ring;
  return wedge(ring, a, b, budget);
}

AForm wedge_power(const AForm& f, int t, const ParenTree& paren, const Budget& budget) {
  if (paren.leaves() != t)
    throw ValidationError("wedge_power: tree has " + std::to_string(paren.leaves()) +
                          " leaves, expected " + std::to_string(t));
  ExactRing ring;
  return wedge_power(ring, f, paren, budget);
}

AForm form_add(const AForm& a, const AForm& b) {
  ExactRing ring;
  return form_add(ring, a, b);
}

AForm form_scale(const AForm& a, const Rational& c) {
  ExactRing ring;
  return form_scale(ring, a, c);
}

bool is_zero(const AForm& f) { return f.terms.empty(); }

bool valued_in(const AForm& f, const Submodule& v) {
  if (f.ctx.alg != v.parent()) return false;
  const int dim = v.parent()->dim();
  // group terms by Grassmann monomial, then slice by polynomial monomial
  std::map<GMask, std::map<PolyMonomial, RatVec, GradedLexLess>> slices;
  for (const auto& [key, poly] : f.terms) {
    auto& per_mono = slices[key.first];
    for (const auto& [pm, c] : poly.terms()) {
      auto it = per_mono.find(pm);
      if (it == per_mono.end()) it = per_mono.emplace(pm, RatVec(dim, Rational(0))).first;
      it->second[key.second] += c;
    }
  }
  for (const auto& [mono, per_mono] : slices)
    for (const auto& [pm, vec] : per_mono)
      if (!in_row_span(v.basis_vectors(), vec)) return false;
  return true;
}

ProbeResult probe(const AForm& f, std::uint64_t prime, int trials, std::uint64_t seed) {
  ProbeResult res;
  res.prime = prime;
  res.trials = trials;
  res.seed = seed;
  std::map<VarId, unsigned> vars;
  for (const auto& [key, poly] : f.terms) {
    res.degree_bound = std::max(res.degree_bound, poly.total_degree());
    poly.collect_vars(vars);
  }
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    ModAssignment assignment;
    for (const auto& [v, e] : vars) assignment[v] = rng.next_below(prime);
    for (const auto& [key, poly] : f.terms) {
      std::uint64_t val = mod_eval(poly, assignment, prime);
      if (val != 0) {
        res.refuted = true;
        res.witness = std::move(assignment);
        res.where = key;
        res.value = val;
        return res;
      }
    }
  }
  return res;
}

}  // namespace formcert
