#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "properties.hpp"

namespace {

constexpr int kCases = 1000;

void expect_clean(props::Result r) {
    CHECK(r.cases >= kCases);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("yield cascade multiplicativity") { expect_clean(props::yield_cascade(kCases, std::cerr)); }
TEST_CASE("line count bounds") { expect_clean(props::line_count_bounds(kCases, std::cerr)); }
TEST_CASE("breakeven identity") { expect_clean(props::breakeven_identity(kCases, std::cerr)); }
TEST_CASE("price monotonicity") { expect_clean(props::price_monotonicity(kCases, std::cerr)); }
TEST_CASE("rate, yield and throughput monotonicity") { expect_clean(props::input_monotonicity(kCases, std::cerr)); }
TEST_CASE("CDF monotonicity") { expect_clean(props::cdf_monotonicity(kCases, std::cerr)); }
TEST_CASE("IRR round trip") { expect_clean(props::irr_roundtrip(kCases, std::cerr)); }
TEST_CASE("scenario round trip") { expect_clean(props::scenario_roundtrip(kCases, std::cerr)); }

TEST_CASE("crf increases with rate") {
    std::mt19937_64 rng(808);
    int failures = 0;
    for (int c = 0; c < kCases; ++c) {
        const double r = props::uniform(rng, 0.0, 0.5);
        const int n = std::uniform_int_distribution<int>(1, 40)(rng);
        if (!(graphcost::crf(r + props::uniform(rng, 1e-4, 0.1), n) > graphcost::crf(r, n))) ++failures;
    }
    CHECK(failures == 0);
}
