#include "chebseq/search.hpp"

namespace chebseq {

const char* certification_name(Certification c) {
    switch (c) {
        case Certification::TheoremNoPrime: return "TheoremNoPrime";
        case Certification::TheoremUniqueCandidate: return "TheoremUniqueCandidate";
        case Certification::BruteForceFound: return "BruteForceFound";
        case Certification::BoundExhausted: return "BoundExhausted";
    }
    return "?";
}

std::vector<long long> candidate_indices(long long kmax) {
    if (kmax < 1) throw std::invalid_argument("candidate_indices: requires kmax >= 1");
    std::vector<long long> out;
    for (long long k = 1; k <= kmax; ++k) {
        Integer twice = to_integer(2 * k + 1);
        if (is_probable_prime(twice).is_prime()) out.push_back(k);
    }
    return out;
}

namespace {

SearchResult brute_force(const Integer& n, SequenceKind kind, long long kmax) {
    SearchResult res;
    res.n = n;
    res.kind = kind;
    res.kmax = kmax;
    // Stream the terms instead of matrix-powering each candidate: the
    // searches that reach this path walk many consecutive indices.
    Integer a(1), b = kind == SequenceKind::S ? Integer(n + 1) : Integer(n - 1);
    for (long long k = 1; k <= kmax; ++k) {
        if (k > 1) {
            Integer next = n * b - a;
            a = std::move(b);
            b = std::move(next);
        }
        Integer twice = to_integer(2 * k + 1);
        if (!is_probable_prime(twice).is_prime()) continue;
        if (b < 2) continue;  // degenerate small-n sequences go periodic
        if (is_probable_prime(b).is_prime()) {
            res.a = k;
            res.first_prime = b;
            res.certification = Certification::BruteForceFound;
            return res;
        }
    }
    res.certification = Certification::BoundExhausted;
    return res;
}

SearchResult from_certificate(const Integer& n, SequenceKind kind, long long kmax,
                              CompositeCertificate cert) {
    SearchResult res;
    res.n = n;
    res.kind = kind;
    res.kmax = kmax;
    res.a = cert.a;
    res.certification = cert.candidate_index ? Certification::TheoremUniqueCandidate
                                             : Certification::TheoremNoPrime;
    if (cert.a > 0) res.first_prime = term(kind, n, cert.a);
    res.certificate = std::move(cert);
    return res;
}

SearchResult search(const Integer& n, SequenceKind kind, long long kmax, bool use_theorems) {
    if (n < 1) throw std::invalid_argument("search: requires n >= 1");
    if (kmax < 1) throw std::invalid_argument("search: requires kmax >= 1");
    if (kind == SequenceKind::R && n <= 2) {
        // r_k(1) cycles through 1,0,-1,-1,0,1 and r_k(2) == 1: no primes.
        SearchResult res;
        res.n = n;
        res.kind = kind;
        res.kmax = kmax;
        res.a = -1;
        res.certification = Certification::TheoremNoPrime;
        return res;
    }
    if (n >= 3 && use_theorems) {
        if (auto cert = composite_certificate(n, kind))
            return from_certificate(n, kind, kmax, std::move(*cert));
    }
    return brute_force(n, kind, kmax);
}

}  // namespace

SearchResult compute_a(const Integer& n, long long kmax, bool use_theorems) {
    return search(n, SequenceKind::S, kmax, use_theorems);
}

SearchResult compute_a_tilde(const Integer& n, long long kmax, bool use_theorems) {
    return search(n, SequenceKind::R, kmax, use_theorems);
}

std::optional<Integer> first_prime_value(const Integer& n, SequenceKind kind, long long kmax) {
    SearchResult res = kind == SequenceKind::S ? compute_a(n, kmax) : compute_a_tilde(n, kmax);
    if (!res.a) return std::nullopt;
    if (*res.a < 0) return Integer(-1);
    return res.first_prime;
}

}  // namespace chebseq
