#include "chebseq/primality.hpp"

#include <array>

namespace chebseq {

const char* status_name(PrimalityVerdict::Status s) {
    switch (s) {
        case PrimalityVerdict::Status::Composite: return "Composite";
        case PrimalityVerdict::Status::ProbablePrime: return "ProbablePrime";
        case PrimalityVerdict::Status::ProvenPrime: return "ProvenPrime";
    }
    return "?";
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<unsigned long> out;
        std::array<bool, 1000> sieve{};
        for (unsigned long i = 2; i < sieve.size(); ++i) {
            if (sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j < sieve.size(); j += i) sieve[j] = true;
        }
        return out;
    }();
    return primes;
}

bool is_small_prime(unsigned long q) {
    if (q < 2) return false;
    for (unsigned long p : small_primes()) {
        if (p * p > q) return true;
        if (q % p == 0) return q == p;
    }
    // q < 1000^2 is always resolved above; fall back for larger words.
    for (unsigned long d = 1009; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

namespace {

// Largest bound for which the bases 2..41 are a deterministic test
// (Sorenson-Webster).
const Integer& deterministic_bound() {
    static const Integer bound("3317044064679887385961981");
    return bound;
}

constexpr std::array<unsigned long, 13> kStrongBases = {2,  3,  5,  7,  11, 13, 17,
                                                        19, 23, 29, 31, 37, 41};

// Strong probable-prime test to the given base; q odd, q > base.
bool strong_base_test(const Integer& q, unsigned long base) {
    Integer d = q - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Integer x, b(base);
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
    if (x == 1 || x == q - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % q;
        if (x == q - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Halve mod odd q.
Integer half_mod(Integer x, const Integer& q) {
    if (mpz_odd_p(x.get_mpz_t())) x += q;
    x >>= 1;
    return x % q;
}

// Strong Lucas probable-prime test with Selfridge's parameters
// (D = 5, -7, 9, ... with Jacobi(D|q) = -1; P = 1, Q = (1-D)/4).
// q odd, coprime to small primes, not a perfect square.
bool strong_lucas_test(const Integer& q) {
    long d_abs = 5;
    int sign = 1;
    Integer D;
    while (true) {
        D = sign > 0 ? Integer(d_abs) : Integer(-d_abs);
        int jac = mpz_jacobi(D.get_mpz_t(), q.get_mpz_t());
        if (jac == -1) break;
        if (jac == 0) return false;  // shares a factor with D
        d_abs += 2;
        sign = -sign;
        if (d_abs > 1000000)  // cannot happen once perfect squares are screened
            throw std::logic_error("strong_lucas_test: no suitable discriminant found");
    }
    const Integer P(1);
    Integer Q = (1 - D) / 4;

    Integer delta = q + 1;
    unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
    Integer d = delta >> s;

    // Binary ladder for (U_d, V_d, Q^d) mod q.
    Integer U(1), V(1), qk = Q % q;
    if (qk < 0) qk += q;
    std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (long b = static_cast<long>(bits) - 2; b >= 0; --b) {
        U = (U * V) % q;
        V = (V * V - 2 * qk) % q;
        qk = (qk * qk) % q;
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(b))) {
            Integer u2 = half_mod(U + V, q);           // P = 1
            Integer v2 = half_mod(D * U + V, q);
            U = std::move(u2);
            V = std::move(v2);
            qk = (qk * Q) % q;
        }
        if (U < 0) U += q;
        if (V < 0) V += q;
        if (qk < 0) qk += q;
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = (V * V - 2 * qk) % q;
        if (V < 0) V += q;
        if (V == 0) return true;
        qk = (qk * qk) % q;
    }
    return false;
}

}  // namespace

PrimalityVerdict is_probable_prime(const Integer& q) {
    using Status = PrimalityVerdict::Status;
    PrimalityVerdict v;
    if (q < 2) return v;
    for (unsigned long p : small_primes()) {
        if (q == p) {
            v.status = Status::ProvenPrime;
            return v;
        }
        if (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
            v.witness = Integer(p);
            return v;
        }
    }
    // q is odd and has no factor below 1000 from here on.
    const bool deterministic = q < deterministic_bound();
    for (unsigned long base : kStrongBases) {
        ++v.rounds;
        if (!strong_base_test(q, base)) return v;
    }
    if (deterministic) {
        v.status = Status::ProvenPrime;
        return v;
    }
    if (mpz_perfect_square_p(q.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
        v.witness = root;
        return v;
    }
    ++v.rounds;
    if (!strong_lucas_test(q)) return v;
    v.status = Status::ProbablePrime;
    return v;
}

}  // namespace chebseq
