#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebseq/identities.hpp"

namespace chebseq {

struct VerifyOptions {
    long long n_max = 100;
    long long k_max = 200;
    int count = 500;          // tuples per identity
    std::uint64_t seed = 20240101;
    unsigned jobs = 1;
};

struct VerifySummary {
    std::string identity;
    int tuples = 0;
    long long checks = 0;     // individual equalities tested
    long long failures = 0;
    std::vector<IdentityReport> failed;  // capped witnesses
};

/// Names accepted by run_identity_suite (and the CLI --identity flag).
const std::vector<std::string>& identity_names();

/// Run one identity over `count` seeded pseudo-random tuples.
VerifySummary run_identity(const std::string& name, const VerifyOptions& opts);

/// Run the whole suite (all identities plus the gcd-vs-Euclid check);
/// deterministic for a fixed seed.
std::vector<VerifySummary> run_identity_suite(const VerifyOptions& opts);

}  // namespace chebseq
