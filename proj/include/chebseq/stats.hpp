#pragma once

#include <vector>

#include "chebseq/integer.hpp"
#include "chebseq/primality.hpp"
#include "chebseq/real.hpp"
#include "chebseq/sequences.hpp"

namespace chebseq {

/// Dominant characteristic root lambda = (n + sqrt(n^2-4))/2, n >= 3.
Real lambda_value(const Integer& n);

/// The conjectured slope e^{-gamma} log(sqrt(lambda(n))).
double predicted_slope(const Integer& n);

/// Indices whose terms are (probable) primes, for one sequence.
struct PrimeIndexList {
    Integer n;
    SequenceKind kind = SequenceKind::S;
    std::vector<long long> indices;
    std::vector<PrimalityVerdict> verdicts;  // parallel to indices; may be empty for fixtures
    /// Largest candidate index fully tested; doubles as a resume token.
    long long complete_through = 0;
    bool complete = true;            // false when stopped by the time budget
    bool used_certificate = false;   // n was a Chebyshev value; theorem applied
};

struct LogLogPoint {
    long long N;      // 1-based position among prime terms
    long long k;      // the index k_N
    double loglog;    // log log term(kind, n, k_N)
};

/// log log of the exact terms at the listed indices.
std::vector<LogLogPoint> loglog_points(const PrimeIndexList& list);

struct FitReport {
    double C = 0;            // least-squares slope over (N, loglog)
    double intercept = 0;
    Real lambda;
    double rho = 0;          // C / log(sqrt(lambda))
    double predicted_C = 0;  // e^{-gamma} log(sqrt(lambda))
    std::size_t points = 0;
};

/// Ordinary least squares with intercept over the points, plus the
/// derived ratio and prediction for this n.  Rejects fewer than two
/// points or a degenerate (constant-N) configuration.
FitReport fit_C(const std::vector<LogLogPoint>& points, const Integer& n);

struct EnumerateOptions {
    long long kmax = 1000;
    double budget_seconds = 0;  // 0: unlimited
    long long resume_from = 0;  // test only candidates > resume_from
    unsigned jobs = 1;
};

/// All candidate indices <= kmax whose term is a (probable) prime, tested
/// in ascending order within the time budget.  Chebyshev values of n are
/// settled by certificate instead of testing.
PrimeIndexList enumerate_prime_indices(const Integer& n, SequenceKind kind,
                                       const EnumerateOptions& opts = {});

}  // namespace chebseq
