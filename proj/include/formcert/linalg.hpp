#pragma once

#include <optional>
#include <vector>

#include "formcert/rational.hpp"

namespace formcert {

// Dense exact linear algebra over the rationals, row-major. Dimensions in
// this engine stay small (tens), so Gauss-Jordan with first-nonzero
// pivoting is both fast enough and deterministic.

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // rows

RatMat identity_matrix(std::size_t n);
RatMat zero_matrix(std::size_t rows, std::size_t cols);
RatMat transpose(const RatMat& m);
RatMat matmul(const RatMat& a, const RatMat& b);
RatVec matvec(const RatMat& m, const RatVec& v);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const RatVec& a, const Rational& c);
bool vec_is_zero(const RatVec& v);

// Reduces m to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_inplace(RatMat& m);

std::size_t rank(RatMat m);

// Solves A x = b; empty optional when inconsistent. Free variables are 0.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Row basis of the kernel of a (vectors x with a x = 0), in the canonical
// rref parameterization (deterministic).
RatMat nullspace(const RatMat& a);

// Canonical row span: rref with zero rows dropped.
RatMat row_span_canonical(RatMat m);

// True iff v lies in the row span of rows.
bool in_row_span(const RatMat& rows, const RatVec& v);

// Coordinates of v in the given (independent) row basis, if v lies in the
// span.
std::optional<RatVec> coords_in_basis(const RatMat& basis_rows, const RatVec& v);

// Basis (rows) of the intersection of the two row spans.
RatMat intersect_spans(const RatMat& u, const RatMat& v);

}  // namespace formcert
