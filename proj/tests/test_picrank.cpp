#include <doctest.h>

#include <nlk3/picrank.hpp>

using namespace nlk3;

TEST_CASE("gauss sums") {
    CHECK(std::abs(gauss_sum(7, 1) - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(gauss_sum(0, 9) - std::complex<double>(9.0, 0.0)) < 1e-12);
    CHECK(std::abs(gauss_sum(1, 4) - std::complex<double>(2.0, -2.0)) < 1e-12);
    CHECK(std::abs(gauss_sum(-3, 4) - std::complex<double>(2.0, -2.0)) < 1e-12);
}

TEST_CASE("ranks for the classical degrees") {
    CHECK(bruinier_rank(2) == 2);
    CHECK(bruinier_rank(4) == 3);
    CHECK(bruinier_rank(6) == 4);
    // l = 8: two components carry constant terms, so the formula value is
    // 1 + (5 - 2) = 4
    CHECK(bruinier_rank(8) == 4);
}

TEST_CASE("near-integrality across the sweep") {
    for (std::int64_t l = 2; l <= 60; l += 2) {
        BruinierResult r = bruinier_rank_full(l);
        CHECK(r.residual < 1e-6);
        CHECK(r.rank >= 2);
    }
}
