#include "formcert/multipoly.hpp"

#include <sstream>

namespace formcert {

std::string VarId::str() const {
  std::ostringstream os;
  os << tag;
  for (int i : idx) os << "_" << i;
  return os.str();
}

unsigned monomial_degree(const PolyMonomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

bool GradedLexLess::operator()(const PolyMonomial& a, const PolyMonomial& b) const {
  unsigned da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  return a < b;  // pair/vector lex, VarId order first
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_[{}] = c;
  return p;
}

MultiPoly MultiPoly::var(const VarId& v) {
  MultiPoly p;
  p.terms_[{{v, 1}}] = Rational(1);
  return p;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0u : monomial_degree(terms_.rbegin()->first);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

void MultiPoly::add_term(const PolyMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

PolyMonomial merge_monomials(const PolyMonomial& a, const PolyMonomial& b) {
  PolyMonomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else {
      r.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

}  // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      r.add_term(merge_monomials(ma, mb), ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

void MultiPoly::collect_vars(std::map<VarId, unsigned>& out) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) {
      auto [it, inserted] = out.emplace(v, e);
      if (!inserted && it->second < e) it->second = e;
    }
  }
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // leading term last in map order; print descending for readability
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    for (const auto& [v, e] : it->first) {
      os << "*" << v.str();
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace formcert
