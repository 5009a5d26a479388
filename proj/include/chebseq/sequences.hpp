#pragma once

#include <string>
#include <utility>

#include "chebseq/integer.hpp"
#include "chebseq/poly.hpp"

namespace chebseq {

/// The four sequence families.  All satisfy x_{k+2} = n*x_{k+1} - x_k and
/// differ only in their initial values:
///   S: 1, n+1     (fourth-kind Chebyshev, rescaled)
///   R: 1, n-1     (third-kind Chebyshev, rescaled)
///   T: 2, n       (first-kind, dilated)
///   U: 1, n       (second-kind, dilated)
enum class SequenceKind { S, R, T, U };

const char* kind_name(SequenceKind kind);
SequenceKind kind_from_name(const std::string& name);  // accepts "s","r","t","u"

struct SequenceId {
    SequenceKind kind;
    Integer n;
};

/// Initial values (x_0, x_1) for a kind at parameter n.
std::pair<Integer, Integer> initial_values(SequenceKind kind, const Integer& n);

/// A^j for the companion matrix A = ((0,1),(-1,n)), j >= 0, by binary
/// powering in O(log j) big-integer multiplications.  The entries are
/// ((-U_{j-2}, U_{j-1}), (-U_{j-1}, U_j)) and the determinant is one.
Mat2 companion_power(const Integer& n, long long j);

/// Exact term x_k for any integer k (negative indices run the invertible
/// recurrence backwards).
Integer term(SequenceKind kind, const Integer& n, long long k);
inline Integer term(const SequenceId& id, long long k) { return term(id.kind, id.n, k); }

/// O(k) evaluation by direct iteration, for k >= 0.  Kept as an
/// independent code path; tests and identity checks use it as an oracle
/// against the matrix-power route.
Integer term_iterative(SequenceKind kind, const Integer& n, long long k);

/// Terms x_lo..x_hi as a block (one linear pass after a matrix-power seek).
std::vector<Integer> term_range(SequenceKind kind, const Integer& n, long long lo, long long hi);

/// Coefficients of U_k in n: the n^{k-2i} coefficient is (-1)^i C(k-i, i).
IntPolynomial u_coefficients(long long k);

/// Coefficients of s_k in n; monic of degree k, equals U_k + U_{k-1}.
IntPolynomial s_coefficients(long long k);

/// The shifted polynomials P_k(z) = s_k(2 - z); constant term 2k+1.
IntPolynomial p_coefficients(long long k);

/// Natural log of the exact term, absolute error well under 1e-9.  The
/// term is computed exactly and its log taken at extended precision, so
/// there is no lambda^k floating blow-up.  Throws std::domain_error when
/// the term is <= 0.
double log_term(SequenceKind kind, const Integer& n, long long k);

}  // namespace chebseq
