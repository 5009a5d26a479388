#include "chebseq/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "chebseq/poly.hpp"

namespace chebseq {

namespace {

using K = SequenceKind;

template <typename... Args>
std::string tuple_str(Args&&... args) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    ((out << (first ? "" : ", ") << args, first = false), ...);
    return out.str() + ")";
}

IdentityReport report(std::string name, std::string params, Integer left, Integer right) {
    bool pass = left == right;
    return {std::move(name), std::move(params), std::move(left), std::move(right), pass};
}

}  // namespace

Reports check_first_difference(const Integer& n, long long k) {
    Integer lhs = term(K::S, n, k) - term(K::S, n, k - 1);
    return {report("first-difference", tuple_str(n, k), lhs, term(K::T, n, k))};
}

Reports check_shift(const Integer& n, long long k, long long p) {
    if (p % 2 == 0) throw std::invalid_argument("check_shift: p must be odd");
    Integer lhs = term(K::S, n, k + p) - term(K::S, n, k);
    Integer rhs = term(K::T, n, k + (p + 1) / 2) * term(K::S, n, (p - 1) / 2);
    return {report("shift", tuple_str(n, k, p), lhs, rhs)};
}

Reports check_decimation(const Integer& n, long long i, long long d, long long k) {
    if (d < 1) throw std::invalid_argument("check_decimation: d must be >= 1");
    Integer lhs = term(K::S, n, i + d * (k + 1)) + term(K::S, n, i + d * (k - 1));
    Integer rhs = term(K::T, n, d) * term(K::S, n, i + d * k);
    return {report("decimation", tuple_str(n, i, d, k), lhs, rhs)};
}

Reports check_plus_minus_one(const Integer& n, long long j) {
    const std::string params = tuple_str(n, j);
    Reports out;
    out.push_back(report("plus-minus-one[s2j+1]", params, term(K::S, n, 2 * j) + 1,
                         term(K::S, n, j) * term(K::T, n, j)));
    out.push_back(report("plus-minus-one[s2j1-1]", params, term(K::S, n, 2 * j + 1) - 1,
                         term(K::S, n, j) * term(K::T, n, j + 1)));
    Integer common = (n + 2) * term(K::R, n, j);
    out.push_back(report("plus-minus-one[s2j-1]", params, term(K::S, n, 2 * j) - 1,
                         common * term(K::U, n, j - 1)));
    out.push_back(report("plus-minus-one[s2j1+1]", params, term(K::S, n, 2 * j + 1) + 1,
                         common * term(K::U, n, j)));
    return out;
}

Reports check_compositions(long long a, long long b, const Integer& n) {
    if (a < 1 || b < 1) throw std::invalid_argument("check_compositions: a, b must be >= 1");
    const std::string params = tuple_str(a, b, n);
    Integer tb = term(K::T, n, b);
    Reports out;
    out.push_back(report("compositions[T]", params, term(K::T, n, a * b), term(K::T, tb, a)));
    out.push_back(report("compositions[U]", params, term(K::U, n, a * b - 1),
                         term(K::U, tb, a - 1) * term(K::U, n, b - 1)));
    return out;
}

Reports check_composite_index_factor(const Integer& n, long long a, long long b) {
    if (a % 2 == 0 || b % 2 == 0 || a < 3 || b < 3)
        throw std::invalid_argument("check_composite_index_factor: a, b must be odd and >= 3");
    long long k = (a * b - 1) / 2;
    Integer lhs = term(K::S, n, k);
    Integer rhs = term(K::S, term(K::T, n, b), (a - 1) / 2) * term(K::S, n, (b - 1) / 2);
    return {report("composite-index", tuple_str(n, a, b), lhs, rhs)};
}

Reports check_symmetric_product(long long i, long long k, const Integer& j) {
    if (i < 0 || k < 0) throw std::invalid_argument("check_symmetric_product: i, k must be >= 0");
    Integer lhs = term(K::S, j, i) * term(K::S, term(K::T, j, 2 * i + 1), k);
    Integer rhs = term(K::S, j, k) * term(K::S, term(K::T, j, 2 * k + 1), i);
    return {report("symmetric-product", tuple_str(i, k, j), lhs, rhs)};
}

Reports check_t_sum(const Integer& n, long long k) {
    if (k < 0) throw std::invalid_argument("check_t_sum: k must be >= 0");
    // Sum T_i by running the recurrence directly; the s-side uses the
    // matrix power, so agreement is between genuinely different routes.
    Integer sum(1), a(2), b = n;
    for (long long i = 1; i <= k; ++i) {
        sum += b;
        Integer next = n * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return {report("t-sum", tuple_str(n, k), term(K::S, n, k), sum)};
}

Reports check_generating_function(const Integer& n, long long order) {
    if (order < 1) throw std::invalid_argument("check_generating_function: order must be >= 1");
    auto coeffs = series_divide({Integer(1), Integer(1)}, {Integer(1), -n, Integer(1)},
                                static_cast<std::size_t>(order));
    Reports out;
    for (long long jj = 0; jj < order; ++jj) {
        out.push_back(report("generating-function", tuple_str(n, order, jj),
                             coeffs[static_cast<std::size_t>(jj)], term(K::S, n, jj)));
    }
    return out;
}

Reports check_congruence_transfer(const Integer& f, const Integer& n, const Integer& m,
                                  long long k) {
    if (f == 0) throw std::invalid_argument("check_congruence_transfer: f must be nonzero");
    if (!mpz_divisible_p(term(K::S, n, k).get_mpz_t(), f.get_mpz_t()))
        throw std::invalid_argument("check_congruence_transfer: precondition f | s_k(n) fails");
    if (!congruent(m, n, f))
        throw std::invalid_argument("check_congruence_transfer: precondition m == n (mod f) fails");
    Integer residue = term(K::S, m, k) % f;
    return {report("congruence-transfer", tuple_str(f, n, m, k), residue, Integer(0))};
}

Reports check_aligned_poly_factor(const Integer& j, long long p, long long i) {
    if (p % 2 == 0 || p < 1)
        throw std::invalid_argument("check_aligned_poly_factor: p must be odd");
    if (i < 0) throw std::invalid_argument("check_aligned_poly_factor: i must be >= 0");
    const long long half = (p - 1) / 2;
    const long long k = half + i * p;
    const std::string params = tuple_str(j, p, i);
    Integer tp = term(K::T, j, p);
    Integer skj = term(K::S, j, k);
    Integer si = term(K::S, tp, i);
    Integer lhs = term(K::S, tp, k);
    Integer rhs = si * p_coefficients(half).eval((2 - j) * skj * skj);
    Reports out;
    out.push_back(report("aligned-poly", params, lhs, rhs));
    // Congruence form: lhs == p * s_i(T_p(j)) mod (j-2) s_k(j)^2.
    Integer modulus = (j - 2) * skj * skj;
    Integer diff = lhs - to_integer(p) * si;
    Integer residue = modulus == 0 ? diff : Integer(diff % modulus);
    out.push_back(report("aligned-poly[congruence]", params, residue, Integer(0)));
    return out;
}

}  // namespace chebseq
