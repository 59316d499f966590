#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "partred/enumeration.hpp"
#include "partred/partition.hpp"

using namespace partred;

TEST_CASE("parse_partition accepts block notation and normalizes") {
    SetPartition p = parse_partition("(1,4)(2,5,7)(3)(6)");
    CHECK(p.n() == 7);
    CHECK(p.block_count() == 4);
    CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 4}, {2, 5, 7}, {3}, {6}});

    CHECK(parse_partition("(1)").blocks() == std::vector<std::vector<int>>{{1}});

    // blocks reordered by minimum element
    SetPartition q = parse_partition("(2,4)(1,5)(3)");
    CHECK(q.blocks() == std::vector<std::vector<int>>{{1, 5}, {2, 4}, {3}});

    // elements sorted within a block
    CHECK(format_partition(parse_partition("(4,1)(3,2)")) == "(1,4)(2,3)");
}

TEST_CASE("parse_partition rejects bad input") {
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    CHECK_THROWS_AS(parse_partition("("), ParseError);
    CHECK_THROWS_AS(parse_partition("()"), ParseError);
    CHECK_THROWS_AS(parse_partition("(1,)(2)"), ParseError);
    CHECK_THROWS_AS(parse_partition("(1,2"), ParseError);
    CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
    CHECK_THROWS_AS(parse_partition("(1, 2)"), ParseError);
    CHECK_THROWS_AS(parse_partition("(1)(2) "), ParseError);
    CHECK_THROWS_AS(parse_partition("(01)"), ParseError);
    CHECK_THROWS_AS(parse_partition("(0)"), ParseError);
    CHECK_THROWS_AS(parse_partition("(-1,2)"), ParseError);
    CHECK_THROWS_AS(parse_partition("(1,1)"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("(1)(1,2)"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("(1)(3)"), InvalidPartition); // gap: 2 missing
    CHECK_THROWS_AS(parse_partition("(2)(3)"), InvalidPartition); // 1 missing
}

TEST_CASE("format_partition emits minimum-ordered blocks") {
    CHECK(format_partition(parse_partition("(1,4)(2,5,7)(3)(6)")) == "(1,4)(2,5,7)(3)(6)");
    CHECK(format_partition(SetPartition({{1}, {2}})) == "(1)(2)");
    CHECK(format_partition(SetPartition({{1, 2, 3}})) == "(1,2,3)");
}

TEST_CASE("canonical sequential form") {
    CHECK(to_canonical(parse_partition("(1,4)(2,5,7)(3)(6)")) ==
          CanonicalSequence({1, 2, 3, 1, 2, 4, 2}));
    CHECK(to_canonical(parse_partition("(1)(2)(3)")) == CanonicalSequence({1, 2, 3}));
    CHECK(to_canonical(parse_partition("(1,2,3)")) == CanonicalSequence({1, 1, 1}));

    CHECK(from_canonical(CanonicalSequence({1, 2, 3, 1, 2, 4, 2})) ==
          parse_partition("(1,4)(2,5,7)(3)(6)"));
    CHECK(from_canonical(CanonicalSequence({1, 1, 1})) == parse_partition("(1,2,3)"));

    // 3 occurs before 2: growth condition violated
    CHECK_THROWS_AS(CanonicalSequence({1, 3, 2}), InvalidCanonical);
    CHECK_THROWS_AS(CanonicalSequence({2, 1}), InvalidCanonical);
    CHECK_THROWS_AS(CanonicalSequence({1, 0}), InvalidCanonical);
}

TEST_CASE("canonical text form") {
    CHECK(format_canonical(CanonicalSequence({1, 2, 3, 1, 2, 4, 2})) == "1231242");
    CHECK(parse_canonical("1231242") == CanonicalSequence({1, 2, 3, 1, 2, 4, 2}));
    CHECK(parse_canonical("1,2,3,1,2,4,2") == CanonicalSequence({1, 2, 3, 1, 2, 4, 2}));

    // more than nine blocks forces the comma form
    std::vector<int> big;
    for (int i = 1; i <= 11; ++i) big.push_back(i);
    CHECK(format_canonical(CanonicalSequence(big)) == "1,2,3,4,5,6,7,8,9,10,11");
    CHECK(parse_canonical("1,2,3,4,5,6,7,8,9,10,11") == CanonicalSequence(big));

    CHECK_THROWS_AS(parse_canonical(""), ParseError);
    CHECK_THROWS_AS(parse_canonical("12x"), ParseError);
    CHECK_THROWS_AS(parse_canonical("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_canonical("102"), InvalidCanonical); // digit 0
    CHECK_THROWS_AS(parse_canonical("132"), InvalidCanonical);
}

TEST_CASE("regularity") {
    CHECK(regularity(parse_partition("(1,4)(2,5,7)(3)(6)")) == Regularity::finite(2));
    CHECK(regularity(parse_partition("(1)(2)(3)")).is_infinite());
    CHECK(regularity(parse_partition("(1,2)(3)")) == Regularity::finite(1));
    CHECK(regularity(SetPartition{}).is_infinite());

    CHECK(Regularity::infinity() > Regularity::finite(1000000));
    CHECK(Regularity::finite(3) > Regularity::finite(2));
    CHECK(Regularity::infinity() == Regularity::infinity());
    CHECK(Regularity::infinity().at_least(999));
    CHECK(Regularity::finite(2).str() == "2");
    CHECK(Regularity::infinity().str() == "inf");
    CHECK_THROWS_AS(Regularity::finite(0), DomainError);
}

TEST_CASE("is_m_regular") {
    SetPartition running = parse_partition("(1,4)(2,5,7)(3)(6)");
    CHECK(is_m_regular(running, 2));
    CHECK_FALSE(is_m_regular(running, 3)); // gap 7-5 = 2 < 3
    CHECK(is_m_regular(parse_partition("(1)(2)"), 999));
    CHECK(is_m_regular(running, 1));
    CHECK_THROWS_AS(is_m_regular(running, 0), DomainError);
}

TEST_CASE("regularity monotonicity") {
    for_each_partition(7, {}, [](const SetPartition& p) {
        Regularity r = regularity(p);
        for (int m = 1; m <= 8; ++m) {
            if (is_m_regular(p, m)) {
                for (int m2 = 1; m2 < m; ++m2) CHECK(is_m_regular(p, m2));
            }
            CHECK(is_m_regular(p, m) == r.at_least(m));
        }
        return true;
    });
}

TEST_CASE("is_poor") {
    CHECK(is_poor(parse_partition("(1,4)(2,3)")));
    CHECK_FALSE(is_poor(parse_partition("(1,4)(2,5,7)(3)(6)")));
    CHECK(is_poor(parse_partition("(1)(2)(3)")));
    CHECK(is_poor(SetPartition{}));
}

TEST_CASE("is_noncrossing") {
    CHECK_FALSE(is_noncrossing(parse_partition("(1,4)(2,5,7)(3)(6)"))); // 1<2<4<5
    CHECK(is_noncrossing(parse_partition("(1,3,5)(2)(4)")));
    CHECK(is_noncrossing(parse_partition("(1,2,6)(3,4)(5)")));
    CHECK(is_noncrossing(SetPartition{}));
}

TEST_CASE("is_abab_free") {
    CHECK_FALSE(is_abab_free(CanonicalSequence({1, 2, 3, 1, 2, 4, 2})));
    CHECK(is_abab_free(CanonicalSequence({1, 1, 1})));
    CHECK(is_abab_free(CanonicalSequence({1, 2, 2, 1}))); // abba is fine
    CHECK(is_abab_free(CanonicalSequence{}));
}

TEST_CASE("the three crossing tests agree exhaustively up to n = 9") {
    for (int n = 0; n <= 9; ++n) {
        for_each_partition(n, {}, [&](const SetPartition& p) {
            bool nc = is_noncrossing(p);
            CHECK(nc == is_abab_free(to_canonical(p)));
            if (n <= 7) CHECK(nc == !testing::crossing_by_quadruples(p));
            return true;
        });
    }
}

TEST_CASE("canonical round-trip, exhaustive then randomized") {
    for (int n = 0; n <= 9; ++n) {
        for_each_partition(n, {}, [&](const SetPartition& p) {
            CanonicalSequence s = to_canonical(p);
            CHECK(from_canonical(s) == p);
            return true;
        });
    }
    // randomized growth strings at larger n
    std::mt19937 rng(20240305);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 10 + static_cast<int>(rng() % 20);
        std::vector<int> entries;
        int max_used = 0;
        for (int i = 0; i < n; ++i) {
            int v = 1 + static_cast<int>(rng() % (max_used + 1));
            entries.push_back(v);
            max_used = std::max(max_used, v);
        }
        CanonicalSequence s(entries);
        CHECK(to_canonical(from_canonical(s)) == s);
    }
}

TEST_CASE("parsing is normalization-idempotent") {
    for (const char* text : {"(3)(1,4)(2,5,7)(6)", "(2,4)(1,5)(3)", "(1)", "(5,3,1)(2)(4)"}) {
        SetPartition once = parse_partition(text);
        CHECK(parse_partition(format_partition(once)) == once);
    }
    for_each_partition(6, {}, [](const SetPartition& p) {
        CHECK(parse_partition(format_partition(p)) == p);
        return true;
    });
}
