#pragma once

#include <vector>

#include "chebseq/integer.hpp"
#include "chebseq/sequences.hpp"

namespace chebseq {

/// Classification of a prime modulus q against the parameter n:
///   SplitPlus        Legendre(n^2-4 | q) = +1, period divides q-1
///   SplitMinus       Legendre(n^2-4 | q) = -1, period divides q+1
///   NCongruent2      n == 2 (mod q), period q, zeros where q | 2k+1
///   NCongruentMinus2 n == -2 (mod q), period 2, no zeros
///   EvenModulus      q = 2 (period 3 for odd n, 1 for even n)
enum class PeriodCase { SplitPlus, SplitMinus, NCongruent2, NCongruentMinus2, EvenModulus };

const char* period_case_name(PeriodCase c);

struct PeriodInfo {
    unsigned long q = 0;
    unsigned long pi = 0;                       // least period of s_k(n) mod q
    PeriodCase kase = PeriodCase::EvenModulus;
    std::vector<unsigned long> zero_positions;  // residues k mod pi with s_k == 0
};

/// Legendre symbol (a | q) for an odd prime q.  Rejects even or composite q.
int legendre(const Integer& a, const Integer& q);

/// Least period of (s_k(n) mod q) found by iterating the state pair until
/// the initial state recurs, with the case classified per PeriodCase.
/// q must be prime and fit comfortably in a machine word (q < 2^31).
PeriodInfo period_mod(const Integer& n, unsigned long q);

/// gcd(s_j(n), s_k(n)) = s_m(n) with 2m+1 = gcd(2j+1, 2k+1); n >= 2.
Integer gcd_terms(const Integer& n, long long j, long long k);

/// Pi_k(n) = (n^2-4) s_1(n) s_2(n) ... s_k(n); the discriminant times the
/// first k terms.  Primitive divisors are primes dividing s_k but not
/// Pi_{k-1}.
Integer discriminant_product(const Integer& n, long long k);

struct PrimitiveDivisorReport {
    Integer n;
    long long k = 0;
    std::vector<unsigned long> found;  // primitive prime divisors located
    Integer cofactor;                  // s_k(n) with found primes divided out
    unsigned long trial_bound = 0;
};

/// Trial-divide s_k(n) by 2 and by primes q = 2a(2k+1) +- 1 up to
/// trial_bound; each hit is kept only if its period is exactly 2k+1
/// (which also excludes divisors of the discriminant).  The cofactor is
/// returned unfactored.
PrimitiveDivisorReport primitive_divisors(const Integer& n, long long k,
                                          unsigned long trial_bound);

}  // namespace chebseq
