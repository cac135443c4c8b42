#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "formcert/algebra.hpp"
#include "formcert/error.hpp"
#include "formcert/modular.hpp"
#include "formcert/multipoly.hpp"

namespace formcert {

// Grassmann monomial over at most 31 generators, as a bitmask of strictly
// increasing indices. The empty mask is the unit.
using GMask = std::uint32_t;
inline constexpr int kMaxGenerators = 31;

// +1/-1 Koszul sign of merging two disjoint increasing sequences; 0 when
// they share a generator.
int merge_sign(GMask a, GMask b);

std::vector<int> mask_indices(GMask m);

// All C(n,k) masks with k bits among n generators, ascending.
std::vector<GMask> degree_masks(int n, int k);

// Bracketing shape over t leaves for nonassociative repeated products.
// Immutable; shared subtrees.
class ParenTree {
 public:
  static ParenTree leaf();
  static ParenTree node(const ParenTree& l, const ParenTree& r);
  static ParenTree right_nested(int t);
  static ParenTree left_nested(int t);
  // Every shape with t leaves (Catalan(t-1) many), deterministic order.
  static std::vector<ParenTree> enumerate(int t);

  int leaves() const { return n_->leaves; }
  bool is_leaf() const { return !n_->left; }
  ParenTree left() const { return ParenTree(n_->left); }
  ParenTree right() const { return ParenTree(n_->right); }
  std::string str() const;  // e.g. "(x(xx))"

 private:
  struct Node {
    std::shared_ptr<const Node> left, right;
    int leaves = 1;
  };
  explicit ParenTree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Resource guard for expansions. Term caps keep exponential blowups
// attributable; the optional deadline aborts long checks.
struct Budget {
  std::size_t max_terms = std::size_t{4} << 20;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void charge(std::size_t terms) const {
    if (terms > max_terms)
      throw CapError("form expansion exceeded the term cap (" + std::to_string(terms) +
                     " > " + std::to_string(max_terms) + " stored terms)");
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw CapError("form expansion exceeded the wall-clock budget");
  }
};

inline const Budget& default_budget() {
  static const Budget b{};
  return b;
}

// --- coefficient ring policies -------------------------------------------

// Exact mode: coefficients are sparse polynomials over the rationals;
// generic-form coefficients are fresh indeterminates.
struct ExactRing {
  using Elem = MultiPoly;
  static Elem zero() { return MultiPoly(); }
  static bool is_zero(const Elem& e) { return e.is_zero(); }
  static void add_in(Elem& a, const Elem& b) { a += b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem scale(const Elem& a, const Rational& c) { return a.scaled(c); }
  Elem var_value(const VarId& v) const { return MultiPoly::var(v); }
};

// Modular mode: the same construction with coefficients specialized to a
// prime field at values drawn deterministically from a seeded stream.
struct ModRing {
  std::uint64_t prime = kDefaultPrime;
  SplitMix64* rng = nullptr;
  ModAssignment* assignment = nullptr;

  using Elem = std::uint64_t;
  static Elem zero() { return 0; }
  static bool is_zero(const Elem& e) { return e == 0; }
  void add_in(Elem& a, const Elem& b) const { a = mod_add(a, b, prime); }
  Elem mul(const Elem& a, const Elem& b) const { return mod_mul(a, b, prime); }
  Elem scale(const Elem& a, const Rational& c) const {
    return mod_mul(a, c.mod(prime), prime);
  }
  Elem var_value(const VarId& v) const {
    auto it = assignment->find(v);
    if (it != assignment->end()) return it->second;
    std::uint64_t x = rng->next_below(prime);
    assignment->emplace(v, x);
    return x;
  }
};

// --- forms ----------------------------------------------------------------

struct FormContext {
  Algebra::Ptr alg;
  int ngen = 0;
  // Extra Koszul sign from algebra parity in the wedge (off by default;
  // the uniform definition carries the form-degree sign only).
  bool parity_sign = false;

  friend bool operator==(const FormContext& a, const FormContext& b) {
    return a.alg == b.alg && a.ngen == b.ngen && a.parity_sign == b.parity_sign;
  }
};

// Algebra-valued element of the free Grassmann algebra: terms map
// (monomial, algebra basis index) -> coefficient. No zero coefficients are
// stored; the map order is the canonical serialization order.
template <class Ring>
struct BasicForm {
  FormContext ctx;
  std::map<std::pair<GMask, int>, typename Ring::Elem> terms;

  bool is_zero() const { return terms.empty(); }

  // Maximal/minimal Grassmann degree present; -1 on the zero form.
  int max_degree() const {
    int d = -1;
    for (const auto& [key, e] : terms) d = std::max(d, __builtin_popcount(key.first));
    return d;
  }
  int min_degree() const {
    int d = -1;
    for (const auto& [key, e] : terms) {
      int p = __builtin_popcount(key.first);
      if (d < 0 || p < d) d = p;
    }
    return d;
  }
};

template <class Ring>
void form_add_term(const Ring& ring, BasicForm<Ring>& f, GMask mono, int basis,
                   typename Ring::Elem value) {
  if (Ring::is_zero(value)) return;
  auto key = std::make_pair(mono, basis);
  auto it = f.terms.find(key);
  if (it == f.terms.end()) {
    f.terms.emplace(key, std::move(value));
  } else {
    ring.add_in(it->second, value);
    if (Ring::is_zero(it->second)) f.terms.erase(it);
  }
}

template <class Ring>
BasicForm<Ring> form_add(const Ring& ring, const BasicForm<Ring>& a,
                         const BasicForm<Ring>& b) {
  if (!(a.ctx == b.ctx)) throw ValidationError("form addition: context mismatch");
  BasicForm<Ring> r = a;
  for (const auto& [key, e] : b.terms) form_add_term(ring, r, key.first, key.second, e);
  return r;
}

template <class Ring>
BasicForm<Ring> form_scale(const Ring& ring, const BasicForm<Ring>& a, const Rational& c) {
  BasicForm<Ring> r;
  r.ctx = a.ctx;
  if (c.is_zero()) return r;
  for (const auto& [key, e] : a.terms) {
    auto v = ring.scale(e, c);
    if (!Ring::is_zero(v)) r.terms.emplace(key, std::move(v));
  }
  return r;
}

// Bilinear extension of (mu (x) e_i) ^ (nu (x) e_j) =
// sign(mu,nu) (mu nu) (x) (e_i * e_j).
template <class Ring>
BasicForm<Ring> wedge(const Ring& ring, const BasicForm<Ring>& a,
                      const BasicForm<Ring>& b, const Budget& budget = default_budget()) {
  if (!(a.ctx == b.ctx)) throw ValidationError("wedge: context mismatch");
  const Algebra& alg = *a.ctx.alg;
  const bool super = a.ctx.parity_sign && alg.graded() && alg.parity_rank() > 0;
  BasicForm<Ring> r;
  r.ctx = a.ctx;
  for (const auto& [ka, pa] : a.terms) {
    for (const auto& [kb, pb] : b.terms) {
      if (ka.first & kb.first) continue;
      int sign = merge_sign(ka.first, kb.first);
      if (super) {
        // moving the left algebra element past the right form part
        int deg_b = __builtin_popcount(kb.first);
        if ((deg_b & 1) && alg.grade_of(ka.second).total_parity()) sign = -sign;
      }
      const SparseVec& prod = alg.basis_product(ka.second, kb.second);
      if (prod.empty()) continue;
      auto coeff = ring.mul(pa, pb);
      if (Ring::is_zero(coeff)) continue;
      GMask mono = ka.first | kb.first;
      for (const auto& [k, c] : prod) {
        Rational sc = sign < 0 ? -c : c;
        form_add_term(ring, r, mono, k, ring.scale(coeff, sc));
      }
    }
    budget.charge(r.terms.size());
  }
  return r;
}

// t-fold wedge power of f in the bracketing given by the tree.
template <class Ring>
BasicForm<Ring> wedge_power(const Ring& ring, const BasicForm<Ring>& f,
                            const ParenTree& paren, const Budget& budget = default_budget()) {
  if (paren.is_leaf()) return f;
  auto l = wedge_power(ring, f, paren.left(), budget);
  if (l.is_zero()) { l.ctx = f.ctx; return l; }
  auto r = wedge_power(ring, f, paren.right(), budget);
  return wedge(ring, l, r, budget);
}

// Product of a sequence of forms under the given bracketing (leaf count
// must match the sequence length; leaves consume arguments left to right).
template <class Ring>
BasicForm<Ring> wedge_sequence(const Ring& ring, const std::vector<BasicForm<Ring>>& args,
                               const ParenTree& paren, const Budget& budget = default_budget()) {
  if (static_cast<int>(args.size()) != paren.leaves())
    throw ValidationError("wedge_sequence: leaf count does not match argument count");
  std::size_t next = 0;
  auto eval = [&](auto&& self, const ParenTree& t) -> BasicForm<Ring> {
    if (t.is_leaf()) return args[next++];
    auto l = self(self, t.left());
    auto r = self(self, t.right());
    return wedge(ring, l, r, budget);
  };
  return eval(eval, paren);
}

// Generic degree-k form over a submodule: one fresh indeterminate per
// (degree-k monomial, submodule basis vector). grade_slot, when >= 0, is
// appended to every variable index tuple so graded components draw
// disjoint variables.
template <class Ring>
BasicForm<Ring> generic_form_t(const Ring& ring, const FormContext& ctx,
                               const Submodule& v, int k, const std::string& tag,
                               int grade_slot = -1) {
  if (ctx.alg != v.parent())
    throw ValidationError("generic form: submodule parent differs from context algebra");
  if (k < 0 || k > ctx.ngen)
    throw ValidationError("generic form: need at least k generators (k = " +
                          std::to_string(k) + ", N = " + std::to_string(ctx.ngen) + ")");
  BasicForm<Ring> f;
  f.ctx = ctx;
  const auto& basis = v.basis_vectors();
  for (GMask mono : degree_masks(ctx.ngen, k)) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      VarId var{tag, {static_cast<int>(mono), static_cast<int>(j)}};
      if (grade_slot >= 0) var.idx.push_back(grade_slot);
      auto x = ring.var_value(var);
      for (std::size_t b = 0; b < basis[j].size(); ++b) {
        if (basis[j][b].is_zero()) continue;
        form_add_term(ring, f, mono, static_cast<int>(b), ring.scale(x, basis[j][b]));
      }
    }
  }
  return f;
}

// --- exact-mode surface -----------------------------------------------------

using AForm = BasicForm<ExactRing>;

AForm generic_form(const Submodule& v, int k, int ngen, const std::string& tag);

// Graded generic form: the sum of independent generic components over each
// V intersect A^m, each independently addressable.
struct GradedGenericForm {
  AForm total;
  std::vector<std::pair<Grade, AForm>> parts;
};
GradedGenericForm graded_generic_form(const Submodule& v, int k, int ngen,
                                      const std::string& tag, bool parity_sign = false);

AForm wedge(const AForm& a, const AForm& b, const Budget& budget = default_budget());
AForm wedge_power(const AForm& f, int t, const ParenTree& paren,
                  const Budget& budget = default_budget());
AForm form_add(const AForm& a, const AForm& b);
AForm form_scale(const AForm& a, const Rational& c);
bool is_zero(const AForm& f);

// A polynomial-coefficient form is valued in the submodule when every
// polynomial-monomial slice of its coefficient vectors lies in the span.
bool valued_in(const AForm& f, const Submodule& v);

// Randomized vanishing probe (Schwartz-Zippel): draws independent uniform
// assignments; refutes on the first nonzero evaluation.
struct ProbeResult {
  bool refuted = false;
  ModAssignment witness;                    // when refuted
  std::optional<std::pair<GMask, int>> where;
  std::uint64_t value = 0;
  unsigned degree_bound = 0;
  std::uint64_t prime = kDefaultPrime;
  int trials = 0;
  std::uint64_t seed = 0;
};
ProbeResult probe(const AForm& f, std::uint64_t prime, int trials, std::uint64_t seed);

}  // namespace formcert
