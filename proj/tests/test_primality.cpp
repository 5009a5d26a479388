#include <random>

#include "chebseq/primality.hpp"
#include "chebseq/sequences.hpp"
#include "doctest.h"

using namespace chebseq;
using Status = PrimalityVerdict::Status;

TEST_CASE("small values") {
    CHECK(is_probable_prime(Integer(0)).status == Status::Composite);
    CHECK(is_probable_prime(Integer(1)).status == Status::Composite);
    CHECK(is_probable_prime(Integer(2)).status == Status::ProvenPrime);
    CHECK(is_probable_prime(Integer(7)).status == Status::ProvenPrime);
    CHECK(is_probable_prime(Integer(997)).status == Status::ProvenPrime);

    auto nine = is_probable_prime(Integer(9));
    CHECK(nine.status == Status::Composite);
    CHECK(*nine.witness == 3);
}

TEST_CASE("agrees with trial division up to 20000") {
    auto slow = [](long q) {
        if (q < 2) return false;
        for (long d = 2; d * d <= q; ++d)
            if (q % d == 0) return false;
        return true;
    };
    for (long q = 0; q < 20000; ++q)
        CHECK(is_probable_prime(Integer(q)).is_prime() == slow(q));
}

TEST_CASE("random spot-checks against trial division below 1e10") {
    std::mt19937_64 rng(2024);
    auto slow = [](unsigned long long q) {
        if (q < 2) return false;
        for (unsigned long long d = 2; d * d <= q; ++d)
            if (q % d == 0) return false;
        return true;
    };
    for (int t = 0; t < 1500; ++t) {
        unsigned long long q = rng() % 10000000000ull;
        CHECK(is_probable_prime(Integer(std::to_string(q))).is_prime() == slow(q));
    }
}

TEST_CASE("known strong-pseudoprime traps") {
    // 2-SPRP but composite
    for (const char* s : {"2047", "3277", "4033", "1373653", "25326001", "3215031751"})
        CHECK_FALSE(is_probable_prime(Integer(s)).is_prime());
    // Carmichael numbers
    for (const char* s : {"561", "41041", "825265", "321197185"})
        CHECK_FALSE(is_probable_prime(Integer(s)).is_prime());
}

TEST_CASE("large inputs get the probabilistic label") {
    // 2^127 - 1 is a Mersenne prime above the deterministic cutoff
    Integer m127 = (Integer(1) << 127) - 1;
    auto v = is_probable_prime(m127);
    CHECK(v.status == Status::ProbablePrime);
    CHECK(v.rounds == 14);  // 13 strong bases + 1 Lucas round

    // and a composite of two large primes is rejected
    Integer p("170141183460469231731687303715884105727");  // 2^127-1
    Integer q("162259276829213363391578010288127");         // 2^107-1
    CHECK_FALSE(is_probable_prime(p * q).is_prime());

    // a perfect square above the cutoff
    Integer r = p * p;
    CHECK_FALSE(is_probable_prime(r).is_prime());
}

TEST_CASE("boundary around the deterministic cutoff") {
    // The cutoff is itself the smallest 13-base strong pseudoprime, so it
    // must fall through to the Lucas round and come back Composite.
    Integer bound("3317044064679887385961981");
    CHECK_FALSE(is_probable_prime(bound).is_prime());

    // primes below stay ProvenPrime, primes above come back ProbablePrime
    bool found_proven = false, found_probable = false;
    for (Integer q = bound - 1500; q < bound + 1500; ++q) {
        auto v = is_probable_prime(q);
        if (!v.is_prime()) continue;
        if (q < bound) {
            CHECK(v.status == Status::ProvenPrime);
            found_proven = true;
        } else {
            CHECK(v.status == Status::ProbablePrime);
            found_probable = true;
        }
    }
    CHECK(found_proven);
    CHECK(found_probable);
}

TEST_CASE("sequence terms from the search tables") {
    CHECK_FALSE(is_probable_prime(term(SequenceKind::S, Integer(110), 2)).is_prime());  // 12209
    CHECK(*is_probable_prime(term(SequenceKind::S, Integer(110), 2)).witness == 29);
    CHECK(is_probable_prime(term(SequenceKind::S, Integer(33), 9)).is_prime());  // a_33 = 9
    CHECK(is_probable_prime(term(SequenceKind::R, Integer(19), 14)).is_prime()); // at_19 = 14
}

TEST_CASE("is_small_prime") {
    CHECK(is_small_prime(2));
    CHECK(is_small_prime(999983));
    CHECK_FALSE(is_small_prime(1));
    CHECK_FALSE(is_small_prime(999981));
    CHECK(small_primes().front() == 2);
    CHECK(small_primes().back() == 997);
}
