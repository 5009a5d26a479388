#include "chebseq/factorization.hpp"

#include <algorithm>
#include <functional>

namespace chebseq {

const char* factor_rule_name(FactorRule r) {
    switch (r) {
        case FactorRule::T2Split: return "T2Split";
        case FactorRule::OddCaseGeneric: return "OddCaseGeneric";
        case FactorRule::OddCaseAligned: return "OddCaseAligned";
        case FactorRule::REvenSplit: return "REvenSplit";
        case FactorRule::ROdd: return "ROdd";
        case FactorRule::RAligned: return "RAligned";
    }
    return "?";
}

std::vector<ChebyshevRepresentation> detect_chebyshev(const Integer& n) {
    if (n < 3) throw std::invalid_argument("detect_chebyshev: requires n >= 3");
    std::vector<ChebyshevRepresentation> reps;

    Integer shifted = n + 2;
    if (mpz_perfect_square_p(shifted.get_mpz_t())) {
        Integer j;
        mpz_sqrt(j.get_mpz_t(), shifted.get_mpz_t());
        if (j >= 3) reps.push_back({2, j});
    }

    // T_p(3) is the minimum of T_p over j >= 3 and grows geometrically,
    // so only a handful of odd primes need to be examined.
    for (unsigned long p = 3;; p += 2) {
        if (!is_small_prime(p)) continue;
        if (term(SequenceKind::T, 3, static_cast<long long>(p)) > n) break;
        // (j-1)^p < T_p(j) <= j^p for j >= 3 brackets any solution by the
        // integer p-th root of n.
        Integer lo(3), hi;
        mpz_root(hi.get_mpz_t(), n.get_mpz_t(), p);
        hi += 1;
        while (lo <= hi) {
            Integer mid = (lo + hi) / 2;
            int c = cmp(term(SequenceKind::T, mid, static_cast<long long>(p)), n);
            if (c == 0) {
                reps.push_back({p, mid});
                break;
            }
            if (c < 0) lo = mid + 1;
            else hi = mid - 1;
        }
    }
    return reps;
}

Rational prefactor_R(const Integer& j, unsigned long p, long long k) {
    if (!is_small_prime(p)) throw std::invalid_argument("prefactor_R: p must be prime");
    if (k < 0) throw std::invalid_argument("prefactor_R: requires k >= 0");
    if (p == 2) return Rational(term(SequenceKind::R, j, k));
    const long long half = (static_cast<long long>(p) - 1) / 2;
    Integer den = term(SequenceKind::S, j, half);
    if (den == 0) throw std::invalid_argument("prefactor_R: zero denominator at this j");
    Integer num = term(SequenceKind::S, term(SequenceKind::T, j, 2 * k + 1), half);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational prefactor_R_tilde(const Integer& j, unsigned long p, long long k) {
    if (!is_small_prime(p) || p == 2)
        throw std::invalid_argument("prefactor_R_tilde: p must be an odd prime");
    if (k < 0) throw std::invalid_argument("prefactor_R_tilde: requires k >= 0");
    const long long half = (static_cast<long long>(p) - 1) / 2;
    Integer den = term(SequenceKind::R, j, half);
    if (den == 0) throw std::invalid_argument("prefactor_R_tilde: zero denominator at this j");
    Integer num = term(SequenceKind::R, term(SequenceKind::T, j, 2 * k + 1), half);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

FactorizationCertificate checked(FactorizationCertificate cert) {
    Integer product = cert.factor_a * cert.factor_b;
    Integer expected = term(cert.kind, cert.n, cert.k);
    if (product != expected)
        throw IntegrityError("certificate product " + product.get_str() + " != term " +
                             expected.get_str());
    return cert;
}

Integer integral_or_throw(const Rational& r, const char* what) {
    if (!is_integral(r))
        throw IntegrityError(std::string(what) + " is not an integer: " + r.get_str());
    return r.get_num();
}

}  // namespace

FactorizationCertificate factorize_s(const ChebyshevRepresentation& rep, long long k) {
    if (!is_small_prime(rep.p)) throw std::invalid_argument("factorize_s: p must be prime");
    if (k < 1) throw std::invalid_argument("factorize_s: requires k >= 1");
    const Integer n = term(SequenceKind::T, rep.j, static_cast<long long>(rep.p));
    FactorizationCertificate cert;
    cert.n = n;
    cert.kind = SequenceKind::S;
    cert.k = k;
    if (rep.p == 2) {
        cert.factor_a = term(SequenceKind::R, rep.j, k);
        cert.factor_b = term(SequenceKind::S, rep.j, k);
        cert.rule = FactorRule::T2Split;
        return checked(std::move(cert));
    }
    const long long p = static_cast<long long>(rep.p);
    const long long half = (p - 1) / 2;
    if (k % p == half) {
        const long long i = (k - half) / p;
        cert.factor_a = term(SequenceKind::S, n, i);
        cert.factor_b = term(SequenceKind::S, term(SequenceKind::T, rep.j, 2 * k + 1), half);
        cert.rule = FactorRule::OddCaseAligned;
        return checked(std::move(cert));
    }
    cert.factor_a = integral_or_throw(prefactor_R(rep.j, rep.p, k), "prefactor R_k");
    cert.factor_b = term(SequenceKind::S, rep.j, k);
    cert.rule = FactorRule::OddCaseGeneric;
    return checked(std::move(cert));
}

FactorizationCertificate factorize_r_even(const Integer& ell, long long k) {
    if (ell < 2) throw std::invalid_argument("factorize_r_even: requires ell >= 2");
    if (k < 0) throw std::invalid_argument("factorize_r_even: requires k >= 0");
    const Integer j = 2 * (ell * ell - 1);
    FactorizationCertificate cert;
    cert.n = j * j - 2;
    cert.kind = SequenceKind::R;
    cert.k = k;
    cert.rule = FactorRule::REvenSplit;
    const Integer rk = term(SequenceKind::R, j, k);
    const int delta = (((k + 1) / 2) % 2 == 0) ? 1 : -1;
    auto split = [](const Integer& num, const Integer& den) {
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw IntegrityError("even-split factor is not an integer: " + num.get_str() + "/" +
                                 den.get_str());
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
    };
    cert.factor_a = split(ell * rk + delta, ell + 1);
    cert.factor_b = split(ell * rk - delta, ell - 1);
    return checked(std::move(cert));
}

FactorizationCertificate factorize_r_odd(const ChebyshevRepresentation& rep, long long k) {
    if (rep.p == 2 || !is_small_prime(rep.p))
        throw std::invalid_argument("factorize_r_odd: p must be an odd prime");
    if (k < 1) throw std::invalid_argument("factorize_r_odd: requires k >= 1");
    const Integer n = term(SequenceKind::T, rep.j, static_cast<long long>(rep.p));
    FactorizationCertificate cert;
    cert.n = n;
    cert.kind = SequenceKind::R;
    cert.k = k;
    const long long p = static_cast<long long>(rep.p);
    const long long half = (p - 1) / 2;
    if (k % p == half) {
        const long long i = (k - half) / p;
        cert.factor_a = term(SequenceKind::R, n, i);
        cert.factor_b = term(SequenceKind::R, term(SequenceKind::T, rep.j, 2 * k + 1), half);
        cert.rule = FactorRule::RAligned;
        return checked(std::move(cert));
    }
    cert.factor_a = integral_or_throw(prefactor_R_tilde(rep.j, rep.p, k), "prefactor Rt_k");
    cert.factor_b = term(SequenceKind::R, rep.j, k);
    cert.rule = FactorRule::ROdd;
    return checked(std::move(cert));
}

namespace {

// Three sample certificates with k chosen away from the trivial aligned
// index, demonstrating that every term splits.
std::vector<FactorizationCertificate> sample_certificates(
    const std::function<FactorizationCertificate(long long)>& make, long long skip) {
    std::vector<FactorizationCertificate> out;
    for (long long k = 1; out.size() < 3; ++k) {
        if (k == skip) continue;
        out.push_back(make(k));
    }
    return out;
}

std::optional<Integer> even_split_ell(const Integer& j) {
    // j = 2(ell^2 - 1) with ell >= 2
    if (j < 6 || mpz_odd_p(j.get_mpz_t())) return std::nullopt;
    Integer sq = j / 2 + 1;
    if (!mpz_perfect_square_p(sq.get_mpz_t())) return std::nullopt;
    Integer ell;
    mpz_sqrt(ell.get_mpz_t(), sq.get_mpz_t());
    return ell;
}

}  // namespace

std::optional<CompositeCertificate> composite_certificate(const Integer& n, SequenceKind kind) {
    if (n < 3) throw std::invalid_argument("composite_certificate: requires n >= 3");
    if (kind != SequenceKind::S && kind != SequenceKind::R)
        throw std::invalid_argument("composite_certificate: kind must be S or R");
    const auto reps = detect_chebyshev(n);

    CompositeCertificate cert;
    cert.n = n;
    cert.kind = kind;

    if (kind == SequenceKind::S) {
        for (const auto& rep : reps) {
            if (rep.p != 2) continue;
            cert.rule = FactorRule::T2Split;
            cert.a = -1;
            cert.samples = sample_certificates([&](long long k) { return factorize_s(rep, k); }, 0);
            return cert;
        }
    } else {
        for (const auto& rep : reps) {
            if (rep.p != 2) continue;
            auto ell = even_split_ell(rep.j);
            if (!ell) continue;  // no r-side certificate for this shape of j
            cert.rule = FactorRule::REvenSplit;
            cert.a = -1;
            cert.samples =
                sample_certificates([&](long long k) { return factorize_r_even(*ell, k); }, 0);
            return cert;
        }
    }

    std::vector<ChebyshevRepresentation> odd;
    for (const auto& rep : reps)
        if (rep.p != 2) odd.push_back(rep);
    if (odd.empty()) return std::nullopt;

    const bool s_side = kind == SequenceKind::S;
    std::vector<long long> candidates;
    for (const auto& rep : odd) candidates.push_back((static_cast<long long>(rep.p) - 1) / 2);
    const bool agree =
        std::all_of(candidates.begin(), candidates.end(),
                    [&](long long c) { return c == candidates.front(); });

    if (!agree) {
        // Each representation certifies that only its own index can be
        // prime, so two different candidates leave no prime at all.
        cert.rule = s_side ? FactorRule::OddCaseGeneric : FactorRule::ROdd;
        cert.a = -1;
        cert.conflicting_candidates = true;
        const auto& rep = odd.front();
        cert.samples = sample_certificates(
            [&](long long k) {
                return s_side ? factorize_s(rep, k) : factorize_r_odd(rep, k);
            },
            candidates.front());
        return cert;
    }

    const auto& rep = odd.front();
    const long long idx = candidates.front();
    cert.candidate_index = idx;
    cert.candidate_verdict = is_probable_prime(term(kind, n, idx));
    if (cert.candidate_verdict->is_prime()) {
        cert.rule = s_side ? FactorRule::OddCaseAligned : FactorRule::RAligned;
        cert.a = idx;
    } else {
        cert.rule = s_side ? FactorRule::OddCaseGeneric : FactorRule::ROdd;
        cert.a = -1;
        cert.samples = sample_certificates(
            [&](long long k) {
                return s_side ? factorize_s(rep, k) : factorize_r_odd(rep, k);
            },
            idx);
    }
    return cert;
}

}  // namespace chebseq
