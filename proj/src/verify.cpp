#include "chebseq/verify.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "chebseq/modular.hpp"

namespace chebseq {

namespace {

// Bounded draws use modulo reduction on the raw engine output so that a
// seed reproduces the same tuples on any platform.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    long long odd(long long lo, long long hi) {
        long long v = range(lo, hi);
        return v % 2 == 0 ? v + 1 : v;
    }
};

using CaseFn = std::function<Reports(Rng&, const VerifyOptions&)>;

struct IdentityCase {
    std::string name;
    CaseFn run;
};

const std::vector<IdentityCase>& cases() {
    static const std::vector<IdentityCase> table = {
        {"first-difference",
         [](Rng& rng, const VerifyOptions& o) {
             return check_first_difference(to_integer(rng.range(2, o.n_max)), rng.range(0, o.k_max));
         }},
        {"shift",
         [](Rng& rng, const VerifyOptions& o) {
             return check_shift(to_integer(rng.range(2, o.n_max)), rng.range(0, o.k_max),
                                rng.odd(1, 41));
         }},
        {"decimation",
         [](Rng& rng, const VerifyOptions& o) {
             return check_decimation(to_integer(rng.range(2, o.n_max)), rng.range(0, 50),
                                     rng.range(1, 7), rng.range(0, o.k_max / 2));
         }},
        {"plus-minus-one",
         [](Rng& rng, const VerifyOptions& o) {
             return check_plus_minus_one(to_integer(rng.range(2, o.n_max)), rng.range(0, o.k_max / 2));
         }},
        {"compositions",
         [](Rng& rng, const VerifyOptions& o) {
             return check_compositions(rng.range(1, 12), rng.range(1, 12),
                                       to_integer(rng.range(2, o.n_max)));
         }},
        {"composite-index",
         [](Rng& rng, const VerifyOptions& o) {
             return check_composite_index_factor(to_integer(rng.range(2, o.n_max)), rng.odd(3, 13),
                                                 rng.odd(3, 13));
         }},
        {"symmetric-product",
         [](Rng& rng, const VerifyOptions&) {
             return check_symmetric_product(rng.range(0, 12), rng.range(0, 12),
                                            to_integer(rng.range(2, 40)));
         }},
        {"t-sum",
         [](Rng& rng, const VerifyOptions& o) {
             return check_t_sum(to_integer(rng.range(2, o.n_max)), rng.range(0, o.k_max));
         }},
        {"generating-function",
         [](Rng& rng, const VerifyOptions& o) {
             return check_generating_function(to_integer(rng.range(2, o.n_max)), rng.range(1, 120));
         }},
        {"congruence-transfer",
         [](Rng& rng, const VerifyOptions& o) {
             // Construct f | s_k(n) from the gcd structure: f = s_m(n)
             // divides s_k(n) whenever 2m+1 divides 2k+1.
             Integer n = to_integer(rng.range(2, o.n_max));
             long long m = rng.range(1, 5);
             long long l = rng.range(1, 8);
             long long k = ((2 * m + 1) * (2 * l + 1) - 1) / 2;
             Integer f = term(SequenceKind::S, n, m);
             Integer shifted = n + to_integer(rng.range(0, 4)) * f;
             return check_congruence_transfer(f, n, shifted, k);
         }},
        {"aligned-poly",
         [](Rng& rng, const VerifyOptions&) {
             return check_aligned_poly_factor(to_integer(rng.range(2, 30)), rng.odd(3, 9),
                                              rng.range(0, 3));
         }},
        {"gcd-euclid",
         [](Rng& rng, const VerifyOptions& o) {
             Integer n = to_integer(rng.range(2, o.n_max));
             long long j = rng.range(0, o.k_max);
             long long k = rng.range(0, o.k_max);
             Integer lhs = gcd_terms(n, j, k);
             Integer rhs = gcd(term(SequenceKind::S, n, j), term(SequenceKind::S, n, k));
             IdentityReport rep{"gcd-euclid", "(" + n.get_str() + ", " + std::to_string(j) + ", " +
                                                  std::to_string(k) + ")",
                                lhs, rhs, lhs == rhs};
             return Reports{rep};
         }},
    };
    return table;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return seed ^ h;
}

VerifySummary run_case(const IdentityCase& c, const VerifyOptions& opts) {
    VerifySummary summary;
    summary.identity = c.name;
    Rng rng(mix_seed(opts.seed, c.name));
    for (int t = 0; t < opts.count; ++t) {
        ++summary.tuples;
        for (auto& rep : c.run(rng, opts)) {
            ++summary.checks;
            if (!rep.pass) {
                ++summary.failures;
                if (summary.failed.size() < 10) summary.failed.push_back(rep);
            }
        }
    }
    return summary;
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& c : cases()) out.push_back(c.name);
        return out;
    }();
    return names;
}

VerifySummary run_identity(const std::string& name, const VerifyOptions& opts) {
    for (const auto& c : cases())
        if (c.name == name) return run_case(c, opts);
    throw std::invalid_argument("unknown identity: " + name);
}

std::vector<VerifySummary> run_identity_suite(const VerifyOptions& opts) {
    const auto& table = cases();
    std::vector<VerifySummary> out(table.size());
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < table.size(); ++i) out[i] = run_case(table[i], opts);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < table.size(); i = next.fetch_add(1))
                out[i] = run_case(table[i], opts);
        });
    for (auto& t : workers) t.join();
    return out;
}

}  // namespace chebseq
