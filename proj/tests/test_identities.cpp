#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "partred/identities.hpp"

using namespace partred;

namespace {

const VerificationReport* find_cell(const std::vector<VerificationReport>& reports, int n,
                                    std::optional<int> k = {}, std::optional<int> m = {}) {
    for (const auto& r : reports)
        if (r.n == n && r.k == k && r.m == m) return &r;
    return nullptr;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.pass(); });
}

} // namespace

TEST_CASE("verify_eq2") {
    auto reports = verify_eq2(7);
    CHECK(all_pass(reports));

    const auto* cell = find_cell(reports, 5, 3, 2);
    REQUIRE(cell);
    CHECK(cell->lhs == 7);
    CHECK(cell->rhs == 7);
    CHECK_FALSE(cell->empty);

    // (1,2) is not 2-regular, so both families are empty
    const auto* vac = find_cell(reports, 2, 1, 2);
    REQUIRE(vac);
    CHECK(vac->lhs == 0);
    CHECK(vac->rhs == 0);
    CHECK(vac->empty);
    CHECK(vac->pass());

    const auto* big = find_cell(reports, 6, 3, 2);
    REQUIRE(big);
    CHECK(big->lhs == big->rhs);

    // every cell is covered exactly once
    CHECK(reports.size() == [] {
        size_t total = 0;
        for (int n = 2; n <= 7; ++n) total += static_cast<size_t>(n) * (n - 1);
        return total;
    }());
}

TEST_CASE("verify_eq3") {
    auto reports = verify_eq3(7);
    CHECK(all_pass(reports));

    const auto* cell = find_cell(reports, 5, 3, 2);
    REQUIRE(cell);
    CHECK(cell->lhs == 2);
    CHECK(cell->rhs == 2);

    const auto* tiny = find_cell(reports, 2, 2, 2);
    REQUIRE(tiny);
    CHECK(tiny->lhs == 1);
    CHECK(tiny->rhs == 1);

    const auto* seven = find_cell(reports, 7, 4, 3);
    REQUIRE(seven);
    CHECK(seven->lhs == seven->rhs);
}

TEST_CASE("verify_narayana") {
    auto reports = verify_narayana(12, 9);
    CHECK(all_pass(reports));

    const auto* cell = find_cell(reports, 4, 2);
    REQUIRE(cell);
    CHECK(cell->lhs == 6);
    CHECK(cell->rhs == 6);

    for (int n = 1; n <= 12; ++n) {
        const auto* diag = find_cell(reports, n, n);
        REQUIRE(diag);
        CHECK(diag->lhs == 1);
    }
}

TEST_CASE("verify_eq5") {
    auto reports = verify_eq5(12);
    CHECK(all_pass(reports));

    const auto* cell = find_cell(reports, 5, 3);
    REQUIRE(cell);
    CHECK(cell->lhs == 20); // N(5,3)
    CHECK(cell->rhs == 20);

    const auto* cell2 = find_cell(reports, 5, 2);
    REQUIRE(cell2);
    CHECK(cell2->lhs == 10);

    const auto* one_block = find_cell(reports, 6, 1);
    REQUIRE(one_block);
    CHECK(one_block->lhs == 1); // only the boundary summand contributes
}

TEST_CASE("verify_motzkin") {
    auto reports = verify_motzkin(8);
    CHECK(all_pass(reports));
    for (int n = 1; n <= 8; ++n) {
        const auto* cell = find_cell(reports, n);
        REQUIRE(cell);
        CHECK(cell->lhs == catalan(n));
    }
}

TEST_CASE("verification sweeps are deterministic across worker counts") {
    auto serial = verify_eq3(6, 1);
    auto parallel = verify_eq3(6, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(report_to_json_line(serial[i]) == report_to_json_line(parallel[i]));
    }
}

TEST_CASE("report JSON lines") {
    VerificationReport r;
    r.identity = "eq2";
    r.n = 5;
    r.k = 3;
    r.m = 2;
    r.lhs = 7;
    r.rhs = 7;
    r.roundtrip_ok = true;
    CHECK(report_to_json_line(r) ==
          R"({"identity":"eq2","n":5,"k":3,"m":2,"lhs":"7","rhs":"7","roundtrip":true,"status":"pass"})");

    VerificationReport v;
    v.identity = "eq2";
    v.n = 2;
    v.k = 1;
    v.m = 2;
    v.lhs = 0;
    v.rhs = 0;
    v.empty = true;
    CHECK(report_to_json_line(v) ==
          R"({"identity":"eq2","n":2,"k":1,"m":2,"lhs":"0","rhs":"0","roundtrip":true,"status":"pass","empty":true})");

    VerificationReport f;
    f.identity = "motzkin";
    f.n = 4;
    f.lhs = 14;
    f.rhs = 13;
    f.roundtrip_ok = false;
    CHECK(report_to_json_line(f) ==
          R"({"identity":"motzkin","n":4,"lhs":"14","rhs":"13","roundtrip":false,"status":"fail"})");
}

TEST_CASE("rna_table") {
    auto table = rna_table(5);
    REQUIRE(table.size() == 3); // k = 0, 1, 2
    CHECK(table.at(0) == 1);
    CHECK(table.at(1) == 6); // (1,3),(1,4),(1,5),(2,4),(2,5),(3,5)
    CHECK(table.at(2) == 1); // only (1,5)(2,4)(3)

    // the bijection chain: p2(abab;n,n-k,2) = p(abab;n+1,n-k+1,3)
    for (int n = 1; n <= 9; ++n) {
        auto t = rna_table(n);
        for (const auto& [k, count] : t) {
            FamilyFilter chain;
            chain.k = n - k + 1;
            chain.m = Regularity::finite(3);
            chain.noncrossing = true;
            CHECK(count == count_family(n + 1, chain));
        }
    }

    // totals match the known RNA structure counts
    const long long rna_totals[] = {1, 1, 2, 4, 8, 17, 37, 82, 185, 423};
    for (int n = 1; n <= 10; ++n) {
        BigCount total = 0;
        for (const auto& [k, count] : rna_table(n)) total += count;
        CHECK(total == rna_totals[n - 1]);
    }
}
