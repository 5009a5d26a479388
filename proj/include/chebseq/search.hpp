#pragma once

#include <optional>
#include <vector>

#include "chebseq/factorization.hpp"
#include "chebseq/integer.hpp"
#include "chebseq/primality.hpp"
#include "chebseq/sequences.hpp"

namespace chebseq {

/// How a search result was established.
///   TheoremNoPrime         a factorization theorem rules out every index
///   TheoremUniqueCandidate only one index could be prime; it was tested
///   BruteForceFound        a prime term was found by direct search
///   BoundExhausted         nothing found up to kmax; no claim beyond it
enum class Certification { TheoremNoPrime, TheoremUniqueCandidate, BruteForceFound, BoundExhausted };

const char* certification_name(Certification c);

struct SearchResult {
    Integer n;
    SequenceKind kind = SequenceKind::S;
    /// -1 (certified no prime) or the first prime index k >= 1; empty when
    /// the search bound was exhausted without a certificate.
    std::optional<long long> a;
    std::optional<Integer> first_prime;  // the term at index a, when a > 0
    Certification certification = Certification::BoundExhausted;
    long long kmax = 0;
    std::optional<CompositeCertificate> certificate;
};

/// Indices k <= kmax with 2k+1 prime, ascending.  Primes can only appear
/// at such indices, so searches are restricted to them.
std::vector<long long> candidate_indices(long long kmax);

/// First prime index in (s_k(n))_{k>=1}: entry n of A269254.
/// Chebyshev shortcuts can be disabled to force pure brute-force search
/// (used to validate the theorem path against direct computation).
SearchResult compute_a(const Integer& n, long long kmax, bool use_theorems = true);

/// First prime index in (r_k(n))_{k>=1}: entry n of A269252.
SearchResult compute_a_tilde(const Integer& n, long long kmax, bool use_theorems = true);

/// The first prime value itself (A269253 / A269251): the term at the found
/// index, -1 when certified prime-free, empty when the bound was exhausted.
std::optional<Integer> first_prime_value(const Integer& n, SequenceKind kind, long long kmax);

}  // namespace chebseq
