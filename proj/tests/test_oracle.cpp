#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fibrep/chung_graham.hpp"
#include "fibrep/fib.hpp"
#include "fibrep/index_sets.hpp"
#include "fibrep/oracle.hpp"
#include "fibrep/zeckendorf.hpp"

using fibrep::cg_decompose;
using fibrep::CgTerm;
using fibrep::elements_upto;
using fibrep::fib_index_below;
using fibrep::FibIndex;
using fibrep::Natural;
using fibrep::SetHandle;
using fibrep::SetKind;
using fibrep::z_decompose;

TEST_CASE("exhaustive nonadjacent-sum search") {
    const auto reps = fibrep::oracle::z_all(28, 8);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].indices == std::vector<FibIndex>{3, 5, 8});

    const auto zero = fibrep::oracle::z_all(0, 10);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].indices.empty());

    // 100 cannot be written with indices up to 5 (their nonadjacent sums top
    // out at F(6) - 1 = 7).
    CHECK(fibrep::oracle::z_all(100, 5).empty());

    CHECK_THROWS_AS(fibrep::oracle::z_all(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(fibrep::oracle::z_all(Natural(-1), 8), std::invalid_argument);
}

TEST_CASE("exhaustive even-digit search") {
    const auto two = fibrep::oracle::cg_all(2, 8);
    REQUIRE(two.size() == 1);
    CHECK(two[0].terms == std::vector<CgTerm>{{2, 2}});

    const auto nine = fibrep::oracle::cg_all(9, 10);
    REQUIRE(nine.size() == 1);
    CHECK(nine[0].terms == std::vector<CgTerm>{{2, 1}, {6, 1}});

    const auto zero = fibrep::oracle::cg_all(0, 2);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].terms.empty());

    CHECK_THROWS_AS(fibrep::oracle::cg_all(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(fibrep::oracle::cg_all(5, 0), std::invalid_argument);
}

TEST_CASE("search agrees with greedy on an initial segment") {
    Natural n = 0;
    for (int i = 1; i <= 400; ++i) {
        ++n;
        CAPTURE(i);
        const auto zs = fibrep::oracle::z_all(n, fib_index_below(n));
        REQUIRE(zs.size() == 1);
        REQUIRE(zs[0] == z_decompose(n));
        FibIndex top = fib_index_below(n);
        if (top % 2 != 0) {
            --top;
        }
        const auto cs = fibrep::oracle::cg_all(n, top);
        REQUIRE(cs.size() == 1);
        REQUIRE(cs[0] == cg_decompose(n));
    }
}

TEST_CASE("scan-everything family filter matches the rank functions") {
    for (FibIndex k = 1; k <= 2; ++k) {
        for (SetKind kind : {SetKind::A, SetKind::B, SetKind::C, SetKind::I}) {
            const SetHandle h{kind, k};
            CAPTURE(k);
            CAPTURE(static_cast<char>(kind));
            CHECK(fibrep::oracle::set_upto(h, 100) == elements_upto(h, 100));
        }
    }
}

TEST_CASE("concatenated prefix and letter readers") {
    CHECK(fibrep::oracle::prefix_concat(21) == "BABBABABBABBABABBABAB");
    CHECK(fibrep::oracle::prefix_concat(0).empty());
    CHECK(fibrep::oracle::letter(12) == fibrep::GoldenLetter::B);
    CHECK(fibrep::oracle::letter(2) == fibrep::GoldenLetter::A);
    CHECK_THROWS_AS(fibrep::oracle::letter(0), std::invalid_argument);
    CHECK_THROWS_AS(fibrep::oracle::prefix_concat(100, 50), fibrep::PrefixCapError);

    const auto bs = fibrep::oracle::b_positions(8);
    CHECK(bs == std::vector<std::uint64_t>{1, 3, 4, 6, 8, 9, 11, 12});
}

TEST_CASE("fixed-point golden-ratio floor") {
    Natural n = 0;
    for (int i = 0; i <= 2000; ++i) {
        CAPTURE(i);
        REQUIRE(fibrep::oracle::floor_phi_fixed(n) == fibrep::floor_phi(n));
        ++n;
    }
    CHECK(fibrep::oracle::floor_phi_fixed(10000000) == 16180339);
    CHECK_THROWS_AS(fibrep::oracle::floor_phi_fixed(Natural(-2)), std::invalid_argument);
}
