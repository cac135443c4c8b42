#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "formcert/rational.hpp"

namespace formcert {

// A symbolic variable: a short tag naming the coefficient family plus an
// index tuple (e.g. Grassmann monomial code, algebra basis index). Total
// order is lexicographic on tag then indices and is stable across runs.
struct VarId {
  std::string tag;
  std::vector<int> idx;

  friend bool operator==(const VarId& a, const VarId& b) {
    return a.tag == b.tag && a.idx == b.idx;
  }
  friend bool operator<(const VarId& a, const VarId& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    return a.idx < b.idx;
  }
  std::string str() const;
};

// Sparse exponent vector, sorted by VarId, exponents strictly positive.
using PolyMonomial = std::vector<std::pair<VarId, unsigned>>;

unsigned monomial_degree(const PolyMonomial& m);

// Graded lexicographic order: total degree first, then lex on the
// (variable, exponent) sequence. Serialization follows this order.
struct GradedLexLess {
  bool operator()(const PolyMonomial& a, const PolyMonomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: no zero coefficients stored; equality is term-map
// equality. All operations are pure; values are immutable in practice.
class MultiPoly {
 public:
  using TermMap = std::map<PolyMonomial, Rational, GradedLexLess>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(const Rational& c);
  static MultiPoly var(const VarId& v);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;  // 0 for the zero polynomial

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const Rational& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

  const TermMap& terms() const { return terms_; }
  void collect_vars(std::map<VarId, unsigned>& out) const;  // var -> max exponent

  // Adds c * m without constructing a temporary polynomial.
  void add_term(const PolyMonomial& m, const Rational& c);

  std::string str() const;  // debugging aid, canonical order

 private:
  TermMap terms_;
};

}  // namespace formcert
