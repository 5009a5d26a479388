#include "chebseq/stats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "chebseq/factorization.hpp"
#include "chebseq/search.hpp"

namespace chebseq {

Real lambda_value(const Integer& n) {
    if (n <= 2) throw std::invalid_argument("lambda_value: requires n >= 3");
    Real nn(n);
    Real disc(n * n - 4);
    return (nn + disc.sqrt()) / Real(2L);
}

double predicted_slope(const Integer& n) {
    Real gamma = Real::euler_gamma();
    return ((-gamma).exp() * lambda_value(n).sqrt().log()).to_double();
}

std::vector<LogLogPoint> loglog_points(const PrimeIndexList& list) {
    std::vector<LogLogPoint> pts;
    pts.reserve(list.indices.size());
    long long N = 0;
    for (long long k : list.indices) {
        double lt = log_term(list.kind, list.n, k);
        if (lt <= 0) throw std::domain_error("loglog_points: term too small for log log");
        pts.push_back({++N, k, std::log(lt)});
    }
    return pts;
}

FitReport fit_C(const std::vector<LogLogPoint>& points, const Integer& n) {
    if (points.size() < 2) throw std::invalid_argument("fit_C: need at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(points.size());
    for (const auto& p : points) {
        double x = static_cast<double>(p.N);
        sx += x;
        sy += p.loglog;
        sxx += x * x;
        sxy += x * p.loglog;
    }
    const double denom = m * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("fit_C: degenerate abscissae");
    FitReport report;
    report.C = (m * sxy - sx * sy) / denom;
    report.intercept = (sy - report.C * sx) / m;
    report.lambda = lambda_value(n);
    report.rho = report.C / report.lambda.sqrt().log().to_double();
    report.predicted_C = predicted_slope(n);
    report.points = points.size();
    return report;
}

PrimeIndexList enumerate_prime_indices(const Integer& n, SequenceKind kind,
                                       const EnumerateOptions& opts) {
    if (n < 3) throw std::invalid_argument("enumerate_prime_indices: requires n >= 3");
    PrimeIndexList list;
    list.n = n;
    list.kind = kind;

    if (auto cert = composite_certificate(n, kind)) {
        list.used_certificate = true;
        list.complete_through = opts.kmax;
        if (cert->a > 0 && cert->a <= opts.kmax) {
            list.indices.push_back(cert->a);
            list.verdicts.push_back(*cert->candidate_verdict);
        }
        return list;
    }

    const auto candidates = candidate_indices(opts.kmax);
    list.complete_through = opts.resume_from;
    const auto started = std::chrono::steady_clock::now();
    auto out_of_budget = [&] {
        if (opts.budget_seconds <= 0) return false;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        return elapsed.count() >= opts.budget_seconds;
    };

    const unsigned jobs = std::max(1u, opts.jobs);
    std::size_t pos = 0;
    while (pos < candidates.size() && candidates[pos] <= opts.resume_from) ++pos;
    while (pos < candidates.size()) {
        if (out_of_budget()) {
            list.complete = false;
            return list;
        }
        const std::size_t chunk = std::min<std::size_t>(jobs, candidates.size() - pos);
        std::vector<PrimalityVerdict> verdicts(chunk);
        if (chunk == 1) {
            verdicts[0] = is_probable_prime(term(kind, n, candidates[pos]));
        } else {
            std::vector<std::thread> workers;
            workers.reserve(chunk);
            for (std::size_t i = 0; i < chunk; ++i)
                workers.emplace_back([&, i] {
                    verdicts[i] = is_probable_prime(term(kind, n, candidates[pos + i]));
                });
            for (auto& w : workers) w.join();
        }
        // Merge strictly in ascending index order.
        for (std::size_t i = 0; i < chunk; ++i) {
            if (verdicts[i].is_prime()) {
                list.indices.push_back(candidates[pos + i]);
                list.verdicts.push_back(verdicts[i]);
            }
            list.complete_through = candidates[pos + i];
        }
        pos += chunk;
    }
    list.complete_through = std::max(list.complete_through, opts.kmax);
    return list;
}

}  // namespace chebseq
