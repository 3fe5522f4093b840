#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fibrep/chung_graham.hpp"
#include "fibrep/fib.hpp"

using fibrep::cg_coeff;
using fibrep::cg_decompose;
using fibrep::cg_min_index;
using fibrep::cg_value;
using fibrep::CgTerm;
using fibrep::ChungGrahamDecomposition;
using fibrep::fib;
using fibrep::fib_index_below;
using fibrep::FibIndex;
using fibrep::Natural;

namespace {

// The published greedy takes one copy of the largest even-indexed value and
// then, only when two copies fit strictly, a second one. Taking one copy of
// F(i) out of a remainder of exactly 2 F(i) leaves F(i) again, so the boundary
// case merges into a digit 2 one step later. This literal form is kept here
// as an independent cross-check of the single-pass rule in cg_decompose.
ChungGrahamDecomposition literal_greedy(const Natural& n) {
    ChungGrahamDecomposition d;
    Natural rest = n;
    while (rest > 0) {
        FibIndex i = fib_index_below(rest);
        if (i % 2 != 0) {
            --i;
        }
        if (2 * fib(i) < rest) {
            d.terms.push_back({i, 2});
            rest -= 2 * fib(i);
        } else {
            if (!d.terms.empty() && d.terms.back().index == i) {
                d.terms.back().coeff += 1;
            } else {
                d.terms.push_back({i, 1});
            }
            rest -= fib(i);
        }
    }
    std::reverse(d.terms.begin(), d.terms.end());
    return d;
}

}  // namespace

TEST_CASE("decompose known values") {
    CHECK(cg_decompose(2).terms == std::vector<CgTerm>{{2, 2}});
    CHECK(cg_decompose(9).terms == std::vector<CgTerm>{{2, 1}, {6, 1}});
    CHECK(cg_decompose(0).terms.empty());
    CHECK(cg_decompose(12).terms == std::vector<CgTerm>{{2, 1}, {4, 1}, {6, 1}});
    CHECK(cg_decompose(7).terms == std::vector<CgTerm>{{2, 1}, {4, 2}});
    CHECK(cg_decompose(28).terms == std::vector<CgTerm>{{2, 1}, {4, 2}, {8, 1}});
    CHECK(cg_decompose(18).terms == std::vector<CgTerm>{{2, 2}, {6, 2}});
    CHECK_THROWS_AS(cg_decompose(Natural(-1)), std::invalid_argument);
}

TEST_CASE("validity scan accepts the digit rule and nothing else") {
    CHECK(ChungGrahamDecomposition{}.is_valid());
    CHECK(ChungGrahamDecomposition{{{2, 2}}}.is_valid());
    CHECK(ChungGrahamDecomposition{{{2, 2}, {6, 2}}}.is_valid());  // a zero digit between
    CHECK(ChungGrahamDecomposition{{{2, 1}, {4, 2}, {8, 1}}}.is_valid());
    CHECK_FALSE(ChungGrahamDecomposition{{{2, 2}, {4, 2}}}.is_valid());
    CHECK_FALSE(ChungGrahamDecomposition{{{2, 2}, {4, 1}, {6, 2}}}.is_valid());
    CHECK_FALSE(ChungGrahamDecomposition{{{3, 1}}}.is_valid());  // odd index
    CHECK_FALSE(ChungGrahamDecomposition{{{2, 3}}}.is_valid());  // digit out of range
    CHECK_FALSE(ChungGrahamDecomposition{{{2, 0}}}.is_valid());
    CHECK_FALSE(ChungGrahamDecomposition{{{4, 1}, {2, 1}}}.is_valid());  // unsorted
}

TEST_CASE("value of known term lists") {
    CHECK(cg_value({{{2, 2}}}) == 2);
    CHECK(cg_value({}) == 0);
    CHECK(cg_value({{{2, 1}, {4, 2}, {8, 1}}}) == 28);
    CHECK_THROWS_AS(cg_value({{{3, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(cg_value({{{2, 2}, {4, 2}}}), std::invalid_argument);
}

TEST_CASE("digit queries") {
    CHECK(cg_coeff(2, 2) == 2);
    CHECK(cg_coeff(9, 4) == 0);
    CHECK(cg_coeff(9, 6) == 1);
    CHECK(cg_coeff(0, 2) == 0);
    CHECK_THROWS_AS(cg_coeff(9, 3), std::invalid_argument);
    CHECK_THROWS_AS(cg_coeff(9, 0), std::invalid_argument);
    CHECK(cg_min_index(9) == 2);
    CHECK(cg_min_index(3) == 4);
    CHECK(cg_min_index(1) == 2);
    CHECK_THROWS_AS(cg_min_index(0), std::invalid_argument);
}

TEST_CASE("round trip and validity on an initial segment") {
    Natural n = 0;
    for (int i = 0; i <= 3000; ++i) {
        const auto d = cg_decompose(n);
        CAPTURE(i);
        REQUIRE(d.is_valid());
        REQUIRE(cg_value(d) == n);
        ++n;
    }
}

TEST_CASE("single-pass rule matches the literal two-step greedy") {
    Natural n = 0;
    for (int i = 0; i <= 5000; ++i) {
        CAPTURE(i);
        REQUIRE(cg_decompose(n) == literal_greedy(n));
        ++n;
    }
}

TEST_CASE("random valid digit strings round-trip through the value") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        ChungGrahamDecomposition d;
        bool open2 = false;
        for (FibIndex pos = 1; pos <= 60; ++pos) {
            unsigned digit = rng() % 3;
            if (digit == 2 && open2) {
                digit = rng() % 2;
            }
            if (digit == 0) {
                open2 = false;
            } else {
                if (digit == 2) {
                    open2 = true;
                }
                d.terms.push_back({2 * pos, digit});
            }
        }
        REQUIRE(d.is_valid());
        const Natural n = cg_value(d);
        CAPTURE(trial);
        CHECK(cg_decompose(n) == d);
    }
}
