#pragma once

#include <optional>
#include <vector>

#include "chebseq/integer.hpp"

namespace chebseq {

struct PrimalityVerdict {
    enum class Status { Composite, ProbablePrime, ProvenPrime };
    Status status = Status::Composite;
    /// A proper divisor, when compositeness was found by trial division.
    std::optional<Integer> witness;
    /// Strong rounds performed (Miller-Rabin bases plus the Lucas round).
    int rounds = 0;

    bool is_prime() const { return status != Status::Composite; }
};

const char* status_name(PrimalityVerdict::Status s);

/// Combined primality test for q >= 0.
///
/// Below 3317044064679887385961981 (~3.3e24) the thirteen Miller-Rabin
/// bases 2..41 are known to have no composite survivor, so the answer is
/// deterministic (ProvenPrime / Composite).  Above that, the same strong
/// base rounds plus one strong Lucas round (Baillie-PSW style) decide,
/// and survivors are labeled ProbablePrime.  A prime input is never
/// labeled Composite.
PrimalityVerdict is_probable_prime(const Integer& q);

/// Odd-prime sieve products used by trial division; primes below `limit`.
const std::vector<unsigned long>& small_primes();  // primes < 1000

/// Deterministic check for word-sized values.
bool is_small_prime(unsigned long q);

}  // namespace chebseq
