#include "chebseq/sequences.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace chebseq {

const char* kind_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::S: return "s";
        case SequenceKind::R: return "r";
        case SequenceKind::T: return "t";
        case SequenceKind::U: return "u";
    }
    return "?";
}

SequenceKind kind_from_name(const std::string& name) {
    if (name == "s" || name == "S") return SequenceKind::S;
    if (name == "r" || name == "R") return SequenceKind::R;
    if (name == "t" || name == "T") return SequenceKind::T;
    if (name == "u" || name == "U") return SequenceKind::U;
    throw std::invalid_argument("unknown sequence kind: " + name);
}

std::pair<Integer, Integer> initial_values(SequenceKind kind, const Integer& n) {
    switch (kind) {
        case SequenceKind::S: return {Integer(1), n + 1};
        case SequenceKind::R: return {Integer(1), n - 1};
        case SequenceKind::T: return {Integer(2), n};
        case SequenceKind::U: return {Integer(1), n};
    }
    throw std::logic_error("bad kind");
}

namespace {

// (U_{j-1}(n), U_j(n)) by a left-to-right doubling ladder.  Doubling uses
//   U_{2m-1} = U_{m-1} (2 U_m - n U_{m-1}),   U_{2m} = U_m^2 - U_{m-1}^2,
// which costs two squarings and one multiplication per bit.
std::pair<Integer, Integer> u_pair(const Integer& n, long long j) {
    if (j < 0) throw std::invalid_argument("u_pair: j must be >= 0");
    if (j == 0) return {Integer(0), Integer(1)};  // U_{-1}, U_0
    int bits = 0;
    for (long long t = j; t > 0; t >>= 1) ++bits;
    Integer u(1), v = n;  // m = 1: U_0, U_1
    for (int b = bits - 2; b >= 0; --b) {
        Integer w = u * (2 * v - n * u);  // U_{2m-1}
        v = v * v - u * u;                // U_{2m}
        u = std::move(w);
        if ((j >> b) & 1) {
            Integer next = n * v - u;  // U_{2m+1}
            u = std::move(v);
            v = std::move(next);
        }
    }
    return {u, v};
}

}  // namespace

Mat2 companion_power(const Integer& n, long long j) {
    if (j < 0) throw std::invalid_argument("companion_power: j must be >= 0");
    auto [u, v] = u_pair(n, j);
    Integer u_prev = n * u - v;  // U_{j-2}
    return {-u_prev, u, -u, v};
}

Integer term(SequenceKind kind, const Integer& n, long long k) {
    auto [x0, x1] = initial_values(kind, n);
    if (k >= 0) {
        auto [u, v] = u_pair(n, k);
        // x_k = -U_{k-2} x_0 + U_{k-1} x_1, and U_{k-2} = n U_{k-1} - U_k.
        return (v - n * u) * x0 + u * x1;
    }
    // x_{-m} from the adjugate of A^m.
    auto [u, v] = u_pair(n, -k);
    return v * x0 - u * x1;
}

Integer term_iterative(SequenceKind kind, const Integer& n, long long k) {
    if (k < 0) throw std::invalid_argument("term_iterative: k must be >= 0");
    auto [a, b] = initial_values(kind, n);
    if (k == 0) return a;
    for (long long i = 1; i < k; ++i) {
        Integer next = n * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

std::vector<Integer> term_range(SequenceKind kind, const Integer& n, long long lo, long long hi) {
    if (hi < lo) return {};
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    Integer a = term(kind, n, lo);
    if (lo == hi) return {a};
    Integer b = term(kind, n, lo + 1);
    out.push_back(a);
    out.push_back(b);
    for (long long k = lo + 2; k <= hi; ++k) {
        Integer next = n * out[out.size() - 1] - out[out.size() - 2];
        out.push_back(std::move(next));
    }
    return out;
}

IntPolynomial u_coefficients(long long k) {
    if (k < 0) throw std::invalid_argument("u_coefficients: k must be >= 0");
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1, Integer(0));
    for (long long i = 0; 2 * i <= k; ++i) {
        Integer b = binomial(static_cast<unsigned long>(k - i), static_cast<unsigned long>(i));
        c[static_cast<std::size_t>(k - 2 * i)] = (i % 2 == 0) ? b : -b;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial s_coefficients(long long k) {
    if (k < 0) throw std::invalid_argument("s_coefficients: k must be >= 0");
    if (k == 0) return IntPolynomial::constant(1);
    return u_coefficients(k) + u_coefficients(k - 1);
}

IntPolynomial p_coefficients(long long k) {
    // P_k(z) = s_k(2 - z)
    std::vector<Integer> two_minus_z = {Integer(2), Integer(-1)};
    return s_coefficients(k).compose(IntPolynomial(std::move(two_minus_z)));
}

double log_term(SequenceKind kind, const Integer& n, long long k) {
    Integer t = term(kind, n, k);
    if (t <= 0)
        throw std::domain_error("log_term: term is not positive: " + t.get_str());
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_set_z(x, t.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    double r = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return r;
}

}  // namespace chebseq
