#include "formcert/zoo.hpp"

#include <algorithm>

#include "formcert/error.hpp"

namespace formcert {
namespace zoo {

namespace {

RatVec basis_vec(int i, int dim) {
  RatVec v(dim, Rational(0));
  v[i] = Rational(1);
  return v;
}

SparseVec sparse_of(const RatVec& v) {
  SparseVec sv;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) sv.emplace_back(static_cast<int>(k), v[k]);
  return sv;
}

// k x k matrices with entries in an involutive base algebra, realified:
// coordinate (i,j,u) at flat index (i*k + j)*db + u.
struct MatrixSpace {
  Algebra::Ptr base;
  int k;
  int db;

  MatrixSpace(Algebra::Ptr b, int size)
      : base(std::move(b)), k(size), db(base->dim()) {}

  int dim() const { return k * k * db; }
  int flat(int i, int j, int u) const { return (i * k + j) * db + u; }

  RatVec entry(const RatVec& m, int i, int j) const {
    RatVec e(db, Rational(0));
    for (int u = 0; u < db; ++u) e[u] = m[flat(i, j, u)];
    return e;
  }

  void set_entry(RatVec& m, int i, int j, const RatVec& e) const {
    for (int u = 0; u < db; ++u) m[flat(i, j, u)] = e[u];
  }

  RatVec zero() const { return RatVec(dim(), Rational(0)); }

  RatVec product(const RatVec& a, const RatVec& b) const {
    RatVec r = zero();
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        RatVec acc(db, Rational(0));
        for (int t = 0; t < k; ++t)
          acc = vec_add(acc, base->product(entry(a, i, t), entry(b, t, j)));
        set_entry(r, i, j, acc);
      }
    }
    return r;
  }

  RatVec bracket(const RatVec& a, const RatVec& b) const {
    return vec_sub(product(a, b), product(b, a));
  }

  // transpose + entrywise base involution
  RatVec dagger(const RatVec& m) const {
    RatVec r = zero();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) set_entry(r, i, j, base->involute(entry(m, j, i)));
    return r;
  }

  // Anti-Hermitian solutions of M^dagger = -eta M eta for a diagonal sign
  // pattern; canonical (rref) basis.
  RatMat anti_hermitian_basis(const std::vector<int>& eta) const {
    const int d = dim();
    RatMat sys;
    const RatMat& s = base->involution();
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        for (int u = 0; u < db; ++u) {
          // conj(M_ji)_u + eta_i eta_j M_ij_u = 0
          RatVec row(d, Rational(0));
          for (int v = 0; v < db; ++v) row[flat(j, i, v)] += s[u][v];
          row[flat(i, j, u)] += Rational(eta[i] * eta[j]);
          sys.push_back(std::move(row));
        }
      }
    }
    return nullspace(sys);
  }
};

// Builds a structure-constant algebra on a distinguished span inside a
// matrix space. Errors with a witness pair when the span is not closed.
Algebra::Ptr span_algebra(const MatrixSpace& ms, const RatMat& basis,
                          const std::vector<std::string>& labels, bool bracket,
                          std::string name) {
  Algebra::Spec spec;
  spec.name = std::move(name);
  spec.basis = labels;
  const int n = static_cast<int>(basis.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      RatVec p = bracket ? ms.bracket(basis[a], basis[b]) : ms.product(basis[a], basis[b]);
      auto coords = coords_in_basis(basis, p);
      if (!coords)
        throw ValidationError(spec.name + ": span not closed under the " +
                              (bracket ? std::string("bracket") : std::string("matrix product")) +
                              ", witness basis pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
      SparseVec sv = sparse_of(*coords);
      if (!sv.empty()) spec.product[{a, b}] = std::move(sv);
    }
  }
  return Algebra::make(std::move(spec));
}

std::vector<std::string> auto_labels(const MatrixSpace& ms, const RatMat& basis,
                                     const std::string& prefix) {
  std::vector<std::string> labels;
  for (const auto& v : basis) {
    int lead = -1;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) { lead = static_cast<int>(c); break; }
    if (lead < 0) {
      labels.push_back(prefix + std::to_string(labels.size()));
      continue;
    }
    int u = lead % ms.db, ij = lead / ms.db;
    int i = ij / ms.k, j = ij % ms.k;
    std::string l = prefix + std::to_string(i) + std::to_string(j);
    if (ms.db > 1) l += ":" + ms.base->basis_label(u);
    labels.push_back(std::move(l));
  }
  return labels;
}

Algebra::Ptr real_base() {
  Algebra::Spec spec;
  spec.name = "R";
  spec.basis = {"e0"};
  spec.product[{0, 0}] = {{0, Rational(1)}};
  spec.involution = identity_matrix(1);
  return Algebra::make(std::move(spec));
}

// basis matrix with entry `unit` of the base at position (i,j), optionally
// mirrored with a sign at (j,i)
RatVec unit_matrix(const MatrixSpace& ms, int i, int j, int u) {
  RatVec m = ms.zero();
  m[ms.flat(i, j, u)] = Rational(1);
  return m;
}

Algebra::Ptr unitary_with_eta(const Algebra::Ptr& base, int k, const std::vector<int>& eta,
                              UnitaryMode mode, const std::string& name);

}  // namespace

Algebra::Ptr abelian(int k) {
  if (k < 1) throw ValidationError("abelian: k must be positive");
  Algebra::Spec spec;
  spec.name = "abelian(" + std::to_string(k) + ")";
  for (int i = 0; i < k; ++i) spec.basis.push_back("e" + std::to_string(i));
  return Algebra::make(std::move(spec));
}

Algebra::Ptr so(int n) {
  if (n < 1) throw ValidationError("so(n): n must be positive");
  return so_pq(n, 0);
}

Algebra::Ptr so_pq(int p, int q) {
  const int n = p + q;
  if (p < 0 || q < 0 || n < 2) throw ValidationError("so(p,q): need p + q >= 2");
  std::vector<int> eta(n, 1);
  for (int i = p; i < n; ++i) eta[i] = -1;
  std::string name = q == 0 ? "so(" + std::to_string(p) + ")"
                            : "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  MatrixSpace ms(real_base(), n);
  // M^T eta + eta M = 0: basis K_ab = eta_bb E_ab - eta_aa E_ba, a < b
  RatMat basis;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      RatVec m = ms.zero();
      m[ms.flat(a, b, 0)] = Rational(eta[b]);
      m[ms.flat(b, a, 0)] = Rational(-eta[a]);
      basis.push_back(std::move(m));
      labels.push_back("M" + std::to_string(a) + std::to_string(b));
    }
  }
  return span_algebra(ms, basis, labels, /*bracket=*/true, name);
}

Algebra::Ptr u(int n) {
  if (n < 1) throw ValidationError("u(n): n must be positive");
  std::vector<int> eta(n, 1);
  return unitary_with_eta(cd_tower(1), n, eta, UnitaryMode::bracket,
                          "u(" + std::to_string(n) + ")");
}

Algebra::Ptr su(int n) {
  if (n < 2) throw ValidationError("su(n): n must be at least 2");
  Algebra::Ptr base = cd_tower(1);
  MatrixSpace ms(base, n);
  RatMat basis;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      RatVec re = ms.zero();
      re[ms.flat(a, b, 0)] = Rational(1);
      re[ms.flat(b, a, 0)] = Rational(-1);
      basis.push_back(std::move(re));
      labels.push_back("A" + std::to_string(a) + std::to_string(b));
      RatVec im = ms.zero();
      im[ms.flat(a, b, 1)] = Rational(1);
      im[ms.flat(b, a, 1)] = Rational(1);
      basis.push_back(std::move(im));
      labels.push_back("B" + std::to_string(a) + std::to_string(b));
    }
  }
  for (int a = 0; a + 1 < n; ++a) {
    RatVec d = ms.zero();
    d[ms.flat(a, a, 1)] = Rational(1);
    d[ms.flat(a + 1, a + 1, 1)] = Rational(-1);
    basis.push_back(std::move(d));
    labels.push_back("D" + std::to_string(a));
  }
  return span_algebra(ms, basis, labels, true, "su(" + std::to_string(n) + ")");
}

Algebra::Ptr sp(int n) {
  if (n < 1) throw ValidationError("sp(n): n must be positive");
  std::vector<int> eta(n, 1);
  return unitary_with_eta(cd_tower(2), n, eta, UnitaryMode::bracket,
                          "sp(" + std::to_string(n) + ")");
}

Algebra::Ptr gl_r(int n) {
  if (n < 1) throw ValidationError("gl(n,R): n must be positive");
  return commutator_algebra(mat_r(n));
}

Algebra::Ptr gl_c(int n) {
  if (n < 1) throw ValidationError("gl(n,C): n must be positive");
  Algebra::Ptr base = cd_tower(1);
  MatrixSpace ms(base, n);
  RatMat basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int u = 0; u < 2; ++u) {
        basis.push_back(unit_matrix(ms, i, j, u));
        labels.push_back((u ? "iE" : "E") + std::to_string(i) + std::to_string(j));
      }
  return span_algebra(ms, basis, labels, true, "gl(" + std::to_string(n) + ",C)");
}

Algebra::Ptr mat_r(int n) {
  if (n < 1) throw ValidationError("mat(n): n must be positive");
  MatrixSpace ms(real_base(), n);
  RatMat basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      basis.push_back(unit_matrix(ms, i, j, 0));
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
    }
  return span_algebra(ms, basis, labels, false, "mat(" + std::to_string(n) + ")");
}

Algebra::Ptr heisenberg(int n) {
  if (n < 1) throw ValidationError("heisenberg(n): n must be positive");
  Algebra::Spec spec;
  spec.name = "heisenberg(" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i) spec.basis.push_back("x" + std::to_string(i));
  for (int i = 0; i < n; ++i) spec.basis.push_back("p" + std::to_string(i));
  spec.basis.push_back("z");
  const int z = 2 * n;
  for (int i = 0; i < n; ++i) {
    spec.product[{i, n + i}] = {{z, Rational(1)}};
    spec.product[{n + i, i}] = {{z, Rational(-1)}};
  }
  return Algebra::make(std::move(spec));
}

Algebra::Ptr iso(int p, int q) {
  const int n = p + q;
  if (n < 2) throw ValidationError("iso(p,q): need p + q >= 2");
  Algebra::Ptr h = so_pq(p, q);
  // defining representation: each basis element as its n x n matrix
  MatrixSpace ms(real_base(), n);
  std::vector<int> eta(n, 1);
  for (int i = p; i < n; ++i) eta[i] = -1;
  std::vector<RatMat> rho;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      RatMat m = zero_matrix(n, n);
      m[a][b] = Rational(eta[b]);
      m[b][a] = Rational(-eta[a]);
      rho.push_back(std::move(m));
    }
  }
  auto result = semidirect(h, rho, n);
  Algebra::Spec spec;
  spec.name = q == 0 ? "iso(" + std::to_string(p) + ")"
                     : "iso(" + std::to_string(p) + "," + std::to_string(q) + ")";
  spec.basis = result->basis();
  spec.product = result->product_table();
  return Algebra::make(std::move(spec));
}

Algebra::Ptr super_translation(int k, int l) {
  if (k < 0 || l < 0 || k + l < 1)
    throw ValidationError("super_translation(k,l): need k + l >= 1");
  Algebra::Spec spec;
  spec.name = "R^(" + std::to_string(k) + "|" + std::to_string(l) + ")";
  spec.parity_rank = 1;
  std::vector<Grade> grades;
  for (int i = 0; i < k; ++i) {
    spec.basis.push_back("t" + std::to_string(i));
    grades.push_back(Grade({}, {0}));
  }
  for (int i = 0; i < l; ++i) {
    spec.basis.push_back("s" + std::to_string(i));
    grades.push_back(Grade({}, {1}));
  }
  spec.grades = std::move(grades);
  return Algebra::make(std::move(spec));
}

Algebra::Ptr cayley_dickson(const Algebra::Ptr& a, const Rational& gamma) {
  if (!a->has_involution())
    throw ValidationError("cayley_dickson: base algebra has no involution");
  const int d = a->dim();
  Algebra::Spec spec;
  spec.name = "CD(" + a->name() + ")";
  spec.basis = a->basis();
  for (const auto& lbl : a->basis()) spec.basis.push_back(lbl + "'");

  auto conj = [&](int i) { return a->involute(basis_vec(i, d)); };
  auto put = [&](int i, int j, const RatVec& real_part, const RatVec& imag_part) {
    SparseVec sv;
    for (int t = 0; t < d; ++t)
      if (!real_part[t].is_zero()) sv.emplace_back(t, real_part[t]);
    for (int t = 0; t < d; ++t)
      if (!imag_part[t].is_zero()) sv.emplace_back(d + t, imag_part[t]);
    if (!sv.empty()) spec.product[{i, j}] = std::move(sv);
  };
  RatVec zero(d, Rational(0));
  for (int i = 0; i < d; ++i) {
    RatVec ei = basis_vec(i, d);
    for (int j = 0; j < d; ++j) {
      RatVec ej = basis_vec(j, d);
      // (e_i,0)(e_j,0) = (e_i e_j, 0)
      put(i, j, a->product(ei, ej), zero);
      // (e_i,0)(0,e_j) = (0, e_j e_i)
      put(i, d + j, zero, a->product(ej, ei));
      // (0,e_i)(e_j,0) = (0, e_i conj(e_j))
      put(d + i, j, zero, a->product(ei, conj(j)));
      // (0,e_i)(0,e_j) = (gamma conj(e_j) e_i, 0)
      put(d + i, d + j, vec_scale(a->product(conj(j), ei), gamma), zero);
    }
  }
  RatMat inv = zero_matrix(2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv[i][j] = a->involution()[i][j];
  for (int i = 0; i < d; ++i) inv[d + i][d + i] = Rational(-1);
  spec.involution = std::move(inv);
  return Algebra::make(std::move(spec));
}

Algebra::Ptr cd_tower(int l, const Rational& gamma, int max_level) {
  if (l < 0) throw ValidationError("cd_tower: level must be nonnegative");
  if (l > max_level)
    throw CapError("cd_tower level " + std::to_string(l) + " exceeds the cap of " +
                   std::to_string(max_level) + " (dimension 2^" + std::to_string(l) + ")");
  Algebra::Ptr a = real_base();
  for (int i = 0; i < l; ++i) a = cayley_dickson(a, gamma);
  // canonical labels e0..e{2^l - 1}
  Algebra::Spec spec;
  spec.name = "CD^" + std::to_string(l);
  for (int i = 0; i < a->dim(); ++i) spec.basis.push_back("e" + std::to_string(i));
  spec.product = a->product_table();
  spec.involution = a->involution();
  return Algebra::make(std::move(spec));
}

namespace {

Algebra::Ptr unitary_with_eta(const Algebra::Ptr& base, int k, const std::vector<int>& eta,
                              UnitaryMode mode, const std::string& name) {
  if (!base->has_involution())
    throw ValidationError("unitary algebra: base must carry a verified involution");
  MatrixSpace ms(base, k);
  RatMat basis = ms.anti_hermitian_basis(eta);
  auto labels = auto_labels(ms, basis, "m");
  return span_algebra(ms, basis, labels, mode == UnitaryMode::bracket, name);
}

std::string signature_str(int p, int q) {
  return q == 0 ? std::to_string(p) : std::to_string(p) + "," + std::to_string(q);
}

}  // namespace

Algebra::Ptr unitary_cd(const UnitarySpec& spec) {
  if (spec.k < 1 || spec.p < 0 || spec.q < 0 || spec.p + spec.q != spec.k)
    throw ValidationError("unitary_cd: signature must satisfy p + q = k >= 1");
  if (!spec.base) throw ValidationError("unitary_cd: missing base algebra");
  std::vector<int> eta(spec.k, 1);
  for (int i = spec.p; i < spec.k; ++i) eta[i] = -1;
  std::string name = "u(" + signature_str(spec.p, spec.q) + ";" + spec.base->name() + ")";
  if (spec.mode == UnitaryMode::matrix) name = "umat(" + signature_str(spec.p, spec.q) + ";" + spec.base->name() + ")";
  return unitary_with_eta(spec.base, spec.k, eta, spec.mode, name);
}

AlgebraMorphism cd_block_inclusion(int k, int p, int q, int l) {
  if (l < 1) throw ValidationError("cd_block_inclusion: level must be positive");
  if (k < 1 || p < 0 || q < 0 || p + q != k)
    throw ValidationError("cd_block_inclusion: signature must satisfy p + q = k");
  Algebra::Ptr upper = cd_tower(l);
  Algebra::Ptr lower = cd_tower(l - 1);
  const int dl = lower->dim();

  std::vector<int> eta(k, 1);
  for (int i = p; i < k; ++i) eta[i] = -1;
  std::vector<int> eta2;  // doubled pattern diag(eta, eta)
  eta2.insert(eta2.end(), eta.begin(), eta.end());
  eta2.insert(eta2.end(), eta.begin(), eta.end());

  UnitarySpec src_spec{k, p, q, upper, UnitaryMode::bracket};
  Algebra::Ptr source = unitary_cd(src_spec);
  MatrixSpace src_ms(upper, k);
  RatMat src_basis = src_ms.anti_hermitian_basis(eta);

  MatrixSpace dst_ms(lower, 2 * k);
  RatMat dst_basis = dst_ms.anti_hermitian_basis(eta2);
  Algebra::Ptr target = span_algebra(dst_ms, dst_basis, auto_labels(dst_ms, dst_basis, "m"),
                                     true,
                                     "u(" + signature_str(2 * p, 2 * q) + ";" + lower->name() + ")");

  // entrywise x = (a,b) |-> [[a, -b], [conj(b), conj(a)]]
  RatMat matrix = zero_matrix(target->dim(), source->dim());
  for (std::size_t col = 0; col < src_basis.size(); ++col) {
    RatVec image = dst_ms.zero();
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        RatVec x = src_ms.entry(src_basis[col], i, j);  // length 2*dl
        RatVec a(x.begin(), x.begin() + dl), b(x.begin() + dl, x.end());
        dst_ms.set_entry(image, i, j, a);
        dst_ms.set_entry(image, i, k + j, vec_scale(b, Rational(-1)));
        dst_ms.set_entry(image, k + i, j, lower->involute(b));
        dst_ms.set_entry(image, k + i, k + j, lower->involute(a));
      }
    }
    auto coords = coords_in_basis(dst_basis, image);
    if (!coords)
      throw ValidationError("cd_block_inclusion: image is not anti-Hermitian (internal)");
    for (std::size_t r = 0; r < coords->size(); ++r) matrix[r][col] = (*coords)[r];
  }
  return morphism_check(std::move(matrix), source, target, Grade{});
}

AlgebraMorphism cd_inclusion_composite(int k, int p, int q, int l) {
  AlgebraMorphism acc = cd_block_inclusion(k, p, q, l);
  int kk = 2 * k, pp = 2 * p, qq = 2 * q;
  for (int lev = l - 1; lev >= 1; --lev) {
    acc = compose(cd_block_inclusion(kk, pp, qq, lev), acc);
    kk *= 2, pp *= 2, qq *= 2;
  }
  return acc;
}

std::optional<std::pair<RatVec, RatVec>> find_zero_divisor(const Algebra::Ptr& a, int bound) {
  const int d = a->dim();
  RatMat candidates;
  for (int i = 0; i < d && static_cast<int>(candidates.size()) < bound; ++i)
    candidates.push_back(basis_vec(i, d));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (static_cast<int>(candidates.size()) >= bound) break;
      candidates.push_back(vec_add(basis_vec(i, d), basis_vec(j, d)));
      if (static_cast<int>(candidates.size()) >= bound) break;
      candidates.push_back(vec_sub(basis_vec(i, d), basis_vec(j, d)));
    }
  }
  for (std::size_t x = 0; x < candidates.size(); ++x) {
    for (std::size_t y = 0; y < candidates.size(); ++y) {
      if (x == y) continue;
      if (vec_is_zero(a->product(candidates[x], candidates[y])))
        return std::make_pair(candidates[x], candidates[y]);
    }
  }
  for (const auto& c : candidates)
    if (vec_is_zero(a->product(c, c))) return std::make_pair(c, c);
  return std::nullopt;
}

}  // namespace zoo
}  // namespace formcert
