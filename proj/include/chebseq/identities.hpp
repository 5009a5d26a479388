#pragma once

#include <string>
#include <vector>

#include "chebseq/integer.hpp"
#include "chebseq/sequences.hpp"

namespace chebseq {

/// One verified equality: pass holds exactly when left == right.
struct IdentityReport {
    std::string identity;
    std::string params;
    Integer left, right;
    bool pass = false;
};

using Reports = std::vector<IdentityReport>;

/// s_k(n) - s_{k-1}(n) = T_k(n)
Reports check_first_difference(const Integer& n, long long k);

/// s_{k+p} - s_k = T_{k+(p+1)/2}(n) s_{(p-1)/2}(n) for odd p.
Reports check_shift(const Integer& n, long long k, long long p);

/// s_{i+d(k+1)} - T_d(n) s_{i+dk} + s_{i+d(k-1)} = 0 for d >= 1.
Reports check_decimation(const Integer& n, long long i, long long d, long long k);

/// The four q+-1 splits:
///   s_{2j}+1 = s_j T_j            s_{2j+1}-1 = s_j T_{j+1}
///   s_{2j}-1 = (n+2) r_j U_{j-1}  s_{2j+1}+1 = (n+2) r_j U_j
Reports check_plus_minus_one(const Integer& n, long long j);

/// T_{ab} = T_a(T_b) and U_{ab-1} = U_{a-1}(T_b) U_{b-1}, for a, b >= 1.
Reports check_compositions(long long a, long long b, const Integer& n);

/// s_{(ab-1)/2}(n) = s_{(a-1)/2}(T_b(n)) s_{(b-1)/2}(n) for odd a, b >= 3;
/// the split behind restricting prime searches to indices with 2k+1 prime.
Reports check_composite_index_factor(const Integer& n, long long a, long long b);

/// s_i(j) s_k(T_{2i+1}(j)) = s_k(j) s_i(T_{2k+1}(j))
Reports check_symmetric_product(long long i, long long k, const Integer& j);

/// s_k(n) = 1 + sum_{i=1..k} T_i(n); the T-side is summed by direct
/// iteration so the two sides take independent code paths.
Reports check_t_sum(const Integer& n, long long k);

/// The power-series expansion of (1+X)/(1-nX+X^2) matches s_j(n) for
/// j < order, by exact series long division.
Reports check_generating_function(const Integer& n, long long order);

/// f | s_k(n) and m == n (mod f) imply f | s_k(m).  Precondition
/// violations throw std::invalid_argument, distinct from a failed check.
Reports check_congruence_transfer(const Integer& f, const Integer& n, const Integer& m,
                                  long long k);

/// Aligned-index factorization through the shifted polynomials: with
/// k = (p-1)/2 + ip for odd p,
///   s_k(T_p(j)) = s_i(T_p(j)) P_{(p-1)/2}((2-j) s_k(j)^2)
/// together with the congruence s_k(T_p(j)) == p s_i(T_p(j)) modulo
/// (j-2) s_k(j)^2.  P is evaluated from its coefficient expansion.
Reports check_aligned_poly_factor(const Integer& j, long long p, long long i);

}  // namespace chebseq
