#include "chebseq/modular.hpp"

#include <stdexcept>

#include "chebseq/primality.hpp"

namespace chebseq {

const char* period_case_name(PeriodCase c) {
    switch (c) {
        case PeriodCase::SplitPlus: return "SplitPlus";
        case PeriodCase::SplitMinus: return "SplitMinus";
        case PeriodCase::NCongruent2: return "NCongruent2";
        case PeriodCase::NCongruentMinus2: return "NCongruentMinus2";
        case PeriodCase::EvenModulus: return "EvenModulus";
    }
    return "?";
}

int legendre(const Integer& a, const Integer& q) {
    if (q <= 2 || mpz_even_p(q.get_mpz_t()) || !is_probable_prime(q).is_prime())
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), q.get_mpz_t());
}

PeriodInfo period_mod(const Integer& n, unsigned long q) {
    if (q >= (1ul << 31)) throw std::invalid_argument("period_mod: modulus too large");
    if (!is_small_prime(q)) throw std::invalid_argument("period_mod: modulus must be prime");
    const unsigned long nm = mpz_fdiv_ui(n.get_mpz_t(), q);

    PeriodInfo info;
    info.q = q;
    if (q == 2) {
        info.kase = PeriodCase::EvenModulus;
    } else if (nm == 2 % q) {
        info.kase = PeriodCase::NCongruent2;
    } else if (nm == (q - 2) % q) {
        info.kase = PeriodCase::NCongruentMinus2;
    } else {
        Integer disc = n * n - 4;
        info.kase = mpz_legendre(disc.get_mpz_t(), Integer(q).get_mpz_t()) == 1
                        ? PeriodCase::SplitPlus
                        : PeriodCase::SplitMinus;
    }

    // Iterate the state pair (s_k, s_{k+1}) mod q; the map is invertible,
    // so the orbit returns to the start.  Period is at most q+1 in the
    // split cases and exactly q when n == 2, so 2q+2 is a safe cap.
    const unsigned long x0 = 1 % q, x1 = (nm + 1) % q;
    unsigned long a = x0, b = x1;
    const unsigned long cap = 2 * q + 3;
    for (unsigned long k = 0; k < cap; ++k) {
        if (a == 0) info.zero_positions.push_back(k);
        unsigned long next =
            static_cast<unsigned long>((static_cast<std::uint64_t>(nm) * b + q - a) % q);
        a = b;
        b = next;
        if (a == x0 && b == x1) {
            info.pi = k + 1;
            return info;
        }
    }
    throw std::logic_error("period_mod: period exceeded theoretical bound");
}

Integer gcd_terms(const Integer& n, long long j, long long k) {
    if (n < 2) throw std::invalid_argument("gcd_terms: requires n >= 2");
    if (j < 0 || k < 0) throw std::invalid_argument("gcd_terms: requires j, k >= 0");
    Integer g = gcd(to_integer(2 * j + 1), to_integer(2 * k + 1));
    long long m = (g.get_si() - 1) / 2;
    return term(SequenceKind::S, n, m);
}

Integer discriminant_product(const Integer& n, long long k) {
    if (k < 0) throw std::invalid_argument("discriminant_product: requires k >= 0");
    Integer prod = n * n - 4;
    for (const Integer& t : term_range(SequenceKind::S, n, 1, k)) prod *= t;
    return prod;
}

PrimitiveDivisorReport primitive_divisors(const Integer& n, long long k,
                                          unsigned long trial_bound) {
    if (n < 3 || k < 1) throw std::invalid_argument("primitive_divisors: requires n >= 3, k >= 1");
    PrimitiveDivisorReport report;
    report.n = n;
    report.k = k;
    report.trial_bound = trial_bound;

    Integer s = term(SequenceKind::S, n, k);
    const unsigned long period_target = static_cast<unsigned long>(2 * k + 1);

    auto take = [&](unsigned long q) {
        if (!mpz_divisible_ui_p(s.get_mpz_t(), q)) return;
        if (period_mod(n, q).pi != period_target) return;  // not primitive
        report.found.push_back(q);
    };

    take(2);
    // Odd primitive divisors have period exactly 2k+1, hence lie in the
    // progressions q = 2a(2k+1) +- 1.
    for (unsigned long a = 1;; ++a) {
        unsigned long base = 2 * a * period_target;
        if (base - 1 > trial_bound) break;
        for (unsigned long q : {base - 1, base + 1}) {
            if (q <= trial_bound && is_small_prime(q)) take(q);
        }
    }

    report.cofactor = s;
    for (unsigned long q : report.found)
        while (mpz_divisible_ui_p(report.cofactor.get_mpz_t(), q))
            mpz_divexact_ui(report.cofactor.get_mpz_t(), report.cofactor.get_mpz_t(), q);
    return report;
}

}  // namespace chebseq
