#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chebseq {

/// Arbitrary-precision signed integer; value type of all sequence terms.
using Integer = mpz_class;

/// Exact rational, always stored in lowest terms with positive denominator.
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(long long v) {
    if constexpr (sizeof(long long) == sizeof(long)) {
        return Integer(static_cast<long>(v));
    } else {
        return Integer(std::to_string(v));
    }
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Floor divide a by b with an exactness requirement.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// a == b (mod m); m == 0 degenerates to equality, matching GMP.
inline bool congruent(const Integer& a, const Integer& b, const Integer& m) {
    return mpz_congruent_p(a.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) != 0;
}

/// 2x2 integer matrix, row-major.  Powers of the sequence companion matrix
/// always have determinant one.
struct Mat2 {
    Integer a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2& o) const = default;

    Integer det() const { return a * d - b * c; }

    /// Inverse of a determinant-one matrix (the adjugate).
    Mat2 unimodular_inverse() const { return {d, -b, -c, a}; }
};

}  // namespace chebseq
