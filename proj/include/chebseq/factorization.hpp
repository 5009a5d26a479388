#pragma once

#include <optional>
#include <vector>

#include "chebseq/integer.hpp"
#include "chebseq/primality.hpp"
#include "chebseq/sequences.hpp"

namespace chebseq {

/// Certifies n = T_p(j) with p prime and j >= 3.
struct ChebyshevRepresentation {
    unsigned long p = 0;
    Integer j;
    bool operator==(const ChebyshevRepresentation&) const = default;
};

/// Which factorization produced a certificate.
///   T2Split          s_k(j^2-2) = r_k(j) s_k(j)
///   OddCaseGeneric   s_k(T_p(j)) = R_k(j) s_k(j), integral prefactor
///   OddCaseAligned   k = (p-1)/2 + ip: s_k(T_p(j)) = s_i(T_p(j)) s_{(p-1)/2}(T_{2k+1}(j))
///   REvenSplit       r_k(j^2-2) = f_k^+(j) f_k^-(j) for j = 2(l^2-1)
///   ROdd             r_k(T_p(j)) = Rt_k(j) r_k(j), integral prefactor
///   RAligned         r_k(T_p(j)) = r_i(T_p(j)) r_{(p-1)/2}(T_{2k+1}(j))
enum class FactorRule { T2Split, OddCaseGeneric, OddCaseAligned, REvenSplit, ROdd, RAligned };

const char* factor_rule_name(FactorRule r);

struct FactorizationCertificate {
    Integer n;
    SequenceKind kind = SequenceKind::S;
    long long k = 0;
    Integer factor_a, factor_b;  // factor_a * factor_b == term(kind, n, k)
    FactorRule rule = FactorRule::T2Split;
};

/// Thrown when a certified-integral prefactor fails integrality or a
/// certificate product mismatches the term; either would falsify the
/// factorization theorems.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All (p, j) with p prime, j >= 3 and T_p(j) = n, ordered by p.
/// p = 2 reduces to n+2 being a perfect square; odd p is resolved by
/// binary search on j, since T_p is strictly increasing on [2, inf).
std::vector<ChebyshevRepresentation> detect_chebyshev(const Integer& n);

/// Rational prefactor R_k(j) of s_k(T_p(j)) = R_k(j) s_k(j).  For p = 2
/// this is r_k(j), always integral; for odd p it is
/// s_{(p-1)/2}(T_{2k+1}(j)) / s_{(p-1)/2}(j), integral exactly when
/// k != (p-1)/2 mod p.
Rational prefactor_R(const Integer& j, unsigned long p, long long k);

/// The analogous prefactor Rt_k(j) of r_k(T_p(j)) = Rt_k(j) r_k(j), odd p.
Rational prefactor_R_tilde(const Integer& j, unsigned long p, long long k);

FactorizationCertificate factorize_s(const ChebyshevRepresentation& rep, long long k);

/// r-side split for n = T_2(j), j = 2(ell^2 - 1): factors
/// f_k^{+-}(j) = (ell r_k(j) +- delta_k) / (ell +- 1).
FactorizationCertificate factorize_r_even(const Integer& ell, long long k);

FactorizationCertificate factorize_r_odd(const ChebyshevRepresentation& rep, long long k);

/// Theorem-backed conclusion about prime appearances in (x_k(n))_{k>=0}.
struct CompositeCertificate {
    Integer n;
    SequenceKind kind = SequenceKind::S;
    FactorRule rule = FactorRule::T2Split;
    /// The single index that may be prime, when the odd-p case applies.
    std::optional<long long> candidate_index;
    /// Primality verdict for the candidate term, when one exists.
    std::optional<PrimalityVerdict> candidate_verdict;
    /// -1, or the candidate index when its term is prime.
    long long a = -1;
    /// Two odd representations with different candidate indices rule each
    /// other out; recorded since the source theorems do not address it.
    bool conflicting_candidates = false;
    /// Sample factorizations backing a -1 conclusion.
    std::vector<FactorizationCertificate> samples;
};

/// Returns the certificate when the factorization theorems settle n, or
/// nullopt when n is not a usable Chebyshev value for this kind.
std::optional<CompositeCertificate> composite_certificate(const Integer& n, SequenceKind kind);

}  // namespace chebseq
