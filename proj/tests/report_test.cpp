#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumtable/report.hpp"

using namespace sumtable;

TEST_CASE("predict") {
    CHECK(predict(12) == 21);
    CHECK(predict(16) == 13);
    CHECK(predict(2) == 1);
    CHECK_THROWS_AS((void)predict(1), std::invalid_argument);
}

TEST_CASE("predict by divisor count") {
    for (const int n : {2, 3, 5, 7}) CHECK(predict(n) == 1);   // p = 2
    for (const int n : {4, 9}) CHECK(predict(n) == 3);         // p = 3
    for (const int n : {6, 8, 10}) CHECK(predict(n) == 7);     // p = 4
    CHECK(predict(12) == 21);                                  // p = 6
}

TEST_CASE("report for n = 2..12") {
    const auto rows = build_report(2, 12);
    REQUIRE(rows.size() == 11);
    const std::vector<std::uint64_t> actual{1, 1, 3, 1, 7, 1, 10, 3, 7, 1, 42};
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        CAPTURE(r.n);
        REQUIRE(r.cyclotomic.has_value());
        REQUIRE(r.geometry_full.has_value());
        REQUIRE(r.oracle.has_value());
        CHECK(*r.oracle == actual[k]);
        CHECK(*r.cyclotomic == *r.oracle);
        CHECK(*r.geometry_full == *r.oracle);
        // the single-level patterns are exactly what the formula counts
        CHECK(static_cast<std::int64_t>(*r.geometry_flat) == r.predicted);
        CHECK(r.prediction_mismatch == (r.n == 8 || r.n == 12));
        CHECK_FALSE(r.engine_mismatch);
        CHECK(r.predicted == (r.p - 2) * (r.p - 1) + 1);
    }
}

TEST_CASE("rows 2..7 match the reference counts without flags") {
    const auto rows = build_report(2, 7);
    const std::vector<std::uint64_t> table{1, 1, 3, 1, 7, 1};
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].actual() == table[k]);
        CHECK_FALSE(rows[k].prediction_mismatch);
    }
}

TEST_CASE("n = 9 is not flagged, n = 8 is") {
    const auto rows = build_report(8, 9);
    CHECK(rows[0].predicted == 7);
    CHECK(rows[0].oracle == 10u);
    CHECK(rows[0].prediction_mismatch);
    CHECK(rows[1].predicted == 3);
    CHECK(rows[1].oracle == 3u);
    CHECK_FALSE(rows[1].prediction_mismatch);
}

TEST_CASE("skipped engines are reported as absent") {
    ReportOptions options;
    options.skip_oracle_above = 5;
    options.geometry.cell_cap = 40;
    const auto rows = build_report(5, 7, options);
    CHECK(rows[0].oracle.has_value());
    CHECK_FALSE(rows[1].oracle.has_value());
    CHECK_FALSE(rows[2].geometry_full.has_value());
    CHECK(rows[2].cyclotomic == 1u);
    CHECK_FALSE(rows[2].notes.empty());
}

TEST_CASE("format_report") {
    const auto text = format_report(build_report(7, 8));
    CHECK(text.rfind("n    n^2    Divisors", 0) == 0);
    CHECK(text.find("\n7    49     1, 7        2   1       1        1       1       1\n") != std::string::npos);
    CHECK(text.find("\n8    64     1, 2, 4, 8  4   7       10       7       10      10        *\n") != std::string::npos);
}

TEST_CASE("bad range") {
    CHECK_THROWS_AS((void)build_report(1, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)build_report(5, 4), std::invalid_argument);
}
