#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fibrep/fib.hpp"
#include "fibrep/zeckendorf.hpp"

using fibrep::fib;
using fibrep::FibIndex;
using fibrep::Natural;
using fibrep::z_contains;
using fibrep::z_decompose;
using fibrep::z_min_index;
using fibrep::z_value;
using fibrep::ZeckendorfDecomposition;

namespace {

std::vector<FibIndex> indices_of(const Natural& n) {
    return z_decompose(n).indices;
}

}  // namespace

TEST_CASE("decompose known values") {
    CHECK(indices_of(28) == std::vector<FibIndex>{3, 5, 8});
    CHECK(indices_of(0).empty());
    CHECK(indices_of(12) == std::vector<FibIndex>{2, 4, 6});
    CHECK(indices_of(1) == std::vector<FibIndex>{2});
    CHECK(indices_of(2) == std::vector<FibIndex>{3});
    CHECK(indices_of(33) == std::vector<FibIndex>{2, 4, 6, 8});
    CHECK(indices_of(fib(40)) == std::vector<FibIndex>{40});
    CHECK_THROWS_AS(z_decompose(Natural(-3)), std::invalid_argument);
}

TEST_CASE("validity scan") {
    CHECK(ZeckendorfDecomposition{}.is_valid());
    CHECK(ZeckendorfDecomposition{{2, 4}}.is_valid());
    CHECK(ZeckendorfDecomposition{{3, 5, 8}}.is_valid());
    CHECK_FALSE(ZeckendorfDecomposition{{2, 3}}.is_valid());
    CHECK_FALSE(ZeckendorfDecomposition{{1, 5}}.is_valid());
    CHECK_FALSE(ZeckendorfDecomposition{{5, 3}}.is_valid());
    CHECK_FALSE(ZeckendorfDecomposition{{4, 4}}.is_valid());
}

TEST_CASE("value of known index lists") {
    CHECK(z_value({{3, 5, 8}}) == 28);
    CHECK(z_value({}) == 0);
    CHECK(z_value({{2, 4, 6}}) == 12);
    CHECK_THROWS_AS(z_value({{2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(z_value({{1}}), std::invalid_argument);
}

TEST_CASE("summand queries") {
    CHECK(z_contains(28, 5));
    CHECK_FALSE(z_contains(28, 4));
    CHECK(z_contains(12, 2));
    CHECK_FALSE(z_contains(0, 2));
    CHECK_THROWS_AS(z_contains(28, 1), std::invalid_argument);
    CHECK(z_min_index(28) == 3);
    CHECK(z_min_index(1) == 2);
    CHECK(z_min_index(12) == 2);
    CHECK_THROWS_AS(z_min_index(0), std::invalid_argument);
}

TEST_CASE("round trip and validity on an initial segment") {
    Natural n = 0;
    for (int i = 0; i <= 3000; ++i) {
        const auto d = z_decompose(n);
        CAPTURE(i);
        REQUIRE(d.is_valid());
        REQUIRE(z_value(d) == n);
        ++n;
    }
}

TEST_CASE("random valid index lists round-trip through the value") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        ZeckendorfDecomposition d;
        FibIndex idx = 2 + rng() % 3;
        while (idx < 320) {
            d.indices.push_back(idx);
            idx += 2 + rng() % 5;
        }
        REQUIRE(d.is_valid());
        const Natural n = z_value(d);
        CAPTURE(trial);
        CHECK(z_decompose(n).indices == d.indices);
    }
}
