#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "runpaths/euler.hpp"
#include "runpaths/oracle.hpp"

using namespace runpaths;
using oracle::CompositionSide;

TEST_CASE("unrestricted ballot paths are Catalan on the diagonal") {
    // a run bound larger than the path length never binds
    for (long n = 0; n <= 8; ++n)
        CHECK(oracle::ballot_paths(n, n, RunRestriction(Dir::East, 20)) == euler::catalan(n));
}

TEST_CASE("published path counts") {
    CHECK(oracle::ballot_paths(2, 5, RunRestriction(Dir::North, 4)) == 10);
    CHECK(oracle::ballot_paths(3, 3, RunRestriction(Dir::East, 10)) == 5);
    CHECK(oracle::dyck_paths(12, 0, RunRestriction(Dir::North, 4)) == 104);
    CHECK(oracle::dyck_paths(12, 0, RunRestriction(Dir::East, 4)) == 104);
    CHECK(oracle::dyck_paths(13, 7, RunRestriction(Dir::East, 4)) == 208);
    CHECK(oracle::dyck_paths(13, 7, RunRestriction(Dir::North, 4)) == 10);
}

TEST_CASE("degenerate alternating case r=2") {
    // only N E N E ... survives on the diagonal
    for (long n = 1; n <= 6; ++n) {
        CHECK(oracle::ballot_paths(n, n, RunRestriction(Dir::East, 2)) == 1);
        CHECK(oracle::ballot_paths(n, n, RunRestriction(Dir::North, 2)) == 1);
    }
}

TEST_CASE("unreachable points count zero") {
    CHECK(oracle::ballot_paths(3, 2, RunRestriction(Dir::East, 4)) == 0);   // below diagonal
    CHECK(oracle::ballot_paths(0, 4, RunRestriction(Dir::North, 4)) == 0);  // N^4 forbidden
    CHECK(oracle::dyck_paths(5, 2, RunRestriction(Dir::East, 4)) == 0);     // parity
}

TEST_CASE("the only admissible path") {
    // t_{n-1}((r-1) n) = 1: the path N^(r-1) (E N^(r-1))^k
    for (int r : {2, 3, 4, 5}) {
        for (long n = 1; n <= 4; ++n) {
            long m = (static_cast<long>(r) - 1) * n;
            if (n - 1 + m > oracle::kMaxPathSteps) continue;
            CHECK(oracle::ballot_paths(n - 1, m, RunRestriction(Dir::North, r)) == 1);
            CHECK(oracle::ballot_paths(n - 1, m + 1, RunRestriction(Dir::North, r)) == 0);
        }
    }
}

TEST_CASE("size guard refuses instead of truncating") {
    CHECK_THROWS_AS((void)oracle::ballot_paths(14, 14, RunRestriction(Dir::East, 4)),
                    std::domain_error);
    CHECK_THROWS_AS((void)oracle::dyck_paths(28, 0, RunRestriction(Dir::East, 4)),
                    std::domain_error);
    CHECK_THROWS_AS((void)oracle::motzkin_peakless_bruteforce(25), std::domain_error);
    CHECK_THROWS_AS(
        (void)oracle::count_restricted_compositions(2, 31, 0, CompositionSide::P),
        std::domain_error);
}

TEST_CASE("restricted compositions, enumerated examples") {
    CHECK(oracle::count_restricted_compositions(2, 3, 1, CompositionSide::P) == 8);
    CHECK(oracle::count_restricted_compositions(2, 3, 1, CompositionSide::Q) == 8);
    CHECK(oracle::count_restricted_compositions(1, 0, 0, CompositionSide::P) == 1);
    CHECK(oracle::count_restricted_compositions(3, 0, 0, CompositionSide::Q) == 1);
    CHECK(oracle::count_restricted_compositions(2, 0, 1, CompositionSide::Q) == 0);
}

TEST_CASE("P = Q over a small range") {
    for (int c = 1; c <= 3; ++c)
        for (long n = 0; n <= 7; ++n)
            for (long alpha = 0; alpha <= 4; ++alpha)
                CHECK(oracle::count_restricted_compositions(c, n, alpha, CompositionSide::P) ==
                      oracle::count_restricted_compositions(c, n, alpha, CompositionSide::Q));
}

TEST_CASE("peakless Motzkin enumeration") {
    CHECK(oracle::motzkin_peakless_bruteforce(0) == 1);
    CHECK(oracle::motzkin_peakless_bruteforce(3) == 2);
    CHECK(oracle::motzkin_peakless_bruteforce(5) == 7);
    CHECK(oracle::motzkin_peakless_bruteforce(9) == 104);
}
