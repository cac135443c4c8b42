#include "formcert/linalg.hpp"

#include "formcert/error.hpp"

namespace formcert {

RatMat identity_matrix(std::size_t n) {
  RatMat m(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RatMat zero_matrix(std::size_t rows, std::size_t cols) {
  return RatMat(rows, RatVec(cols, Rational(0)));
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size(), Rational(0)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatMat matmul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMat r = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw ValidationError("matmul: dimension mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[t][j].is_zero()) r[i][j] += a[i][t] * b[t][j];
      }
    }
  }
  return r;
}

RatVec matvec(const RatMat& m, const RatVec& v) {
  RatVec r(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw ValidationError("matvec: dimension mismatch");
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) r[i] += m[i][j] * v[j];
  }
  return r;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec vec_scale(const RatVec& a, const Rational& c) {
  RatVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::size_t> rref_inplace(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref_inplace(m).size(); }

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.empty()) return vec_is_zero(b) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  std::size_t rows = a.size(), cols = a[0].size();
  RatMat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = rref_inplace(aug);
  for (std::size_t i = 0; i < rows; ++i) {
    bool zero_row = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (!aug[i][j].is_zero()) { zero_row = false; break; }
    if (zero_row && !aug[i][cols].is_zero()) return std::nullopt;
  }
  RatVec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

RatMat nullspace(const RatMat& a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  RatMat m = a;
  auto pivots = rref_inplace(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat row_span_canonical(RatMat m) {
  auto pivots = rref_inplace(m);
  m.resize(pivots.size());
  return m;
}

bool in_row_span(const RatMat& rows, const RatVec& v) {
  if (vec_is_zero(v)) return true;
  if (rows.empty()) return false;
  return solve(transpose(rows), v).has_value();
}

std::optional<RatVec> coords_in_basis(const RatMat& basis_rows, const RatVec& v) {
  if (basis_rows.empty()) return vec_is_zero(v) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  return solve(transpose(basis_rows), v);
}

RatMat intersect_spans(const RatMat& u, const RatMat& v) {
  if (u.empty() || v.empty()) return {};
  std::size_t cols = u[0].size();
  // x in both spans: x = u^T a = v^T b. Solve [u^T | -v^T] (a;b) = 0.
  RatMat sys = zero_matrix(cols, u.size() + v.size());
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < u.size(); ++i) sys[j][i] = u[i][j];
    for (std::size_t i = 0; i < v.size(); ++i) sys[j][u.size() + i] = -v[i][j];
  }
  RatMat ker = nullspace(sys);
  RatMat result;
  for (const auto& ab : ker) {
    RatVec x(cols, Rational(0));
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!ab[i].is_zero()) x = vec_add(x, vec_scale(u[i], ab[i]));
    result.push_back(std::move(x));
  }
  return row_span_canonical(std::move(result));
}

}  // namespace formcert
