#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive_oracle.hpp"
#include "reference_solutions.hpp"
#include "sumtable/cyclotomic.hpp"
#include "sumtable/errors.hpp"
#include "sumtable/oracle.hpp"
#include "sumtable/splitter.hpp"

#include <set>

using namespace sumtable;
using sumtable::testing::naive_enumerate;
using sumtable::testing::reference_10x10;

TEST_CASE("10x10 yields the seven reference labelings") {
    const auto sols = enumerate_cyclotomic(10, 10);
    REQUIRE(sols.size() == 7);
    std::set<Splitting> found(sols.begin(), sols.end());
    for (const auto& p : reference_10x10()) {
        CHECK_MESSAGE(found.count(canonicalize(Splitting{10, 10, p.a, p.b})) == 1, "solution " << p.number);
    }
    CHECK(found.count(Splitting{10, 10, {0, 2, 20, 22, 40, 42, 60, 62, 80, 82}, {0, 1, 4, 5, 8, 9, 12, 13, 16, 17}}));
}

TEST_CASE("2x2 has one labeling with 1 on the column side") {
    const auto sols = enumerate_cyclotomic(2, 2);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == Splitting{2, 2, {0, 2}, {0, 1}});
}

TEST_CASE("4x4 has the three factorizations of 1 + x + ... + x^15") {
    const std::vector<Splitting> expected{
        {4, 4, {0, 2, 4, 6}, {0, 1, 8, 9}},
        {4, 4, {0, 2, 8, 10}, {0, 1, 4, 5}},
        {4, 4, {0, 4, 8, 12}, {0, 1, 2, 3}},
    };
    CHECK(enumerate_cyclotomic(4, 4) == expected);
}

TEST_CASE("2x3 matches the subset-pair reference") {
    const auto reference = naive_enumerate(2, 3);
    REQUIRE(reference.size() == 2);
    CHECK(reference == std::vector<Splitting>{{2, 3, {0, 1}, {0, 2, 4}}, {2, 3, {0, 3}, {0, 1, 2}}});
    CHECK(enumerate_cyclotomic(2, 3) == reference);
    // transposed problem: mirrored answers, a stays the rows-sized side
    CHECK(enumerate_cyclotomic(3, 2) == std::vector<Splitting>{{3, 2, {0, 1, 2}, {0, 3}}, {3, 2, {0, 2, 4}, {0, 1}}});
}

TEST_CASE("degenerate tables") {
    CHECK(enumerate_cyclotomic(1, 1) == std::vector<Splitting>{{1, 1, {0}, {0}}});
    CHECK(enumerate_cyclotomic(1, 5) == std::vector<Splitting>{{1, 5, {0}, {0, 1, 2, 3, 4}}});
    CHECK(enumerate_cyclotomic(7, 1) == std::vector<Splitting>{{7, 1, {0, 1, 2, 3, 4, 5, 6}, {0}}});
}

TEST_CASE("solution_polynomials multiply to c(x)") {
    const Splitting sol1{10, 10, {0, 10, 20, 30, 40, 50, 60, 70, 80, 90}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
    const auto [a, b] = solution_polynomials(sol1);
    CHECK(a.to_string(Poly::Order::ascending) == "1 + x^10 + x^20 + x^30 + x^40 + x^50 + x^60 + x^70 + x^80 + x^90");
    CHECK(b == Poly(std::vector<Poly::Coeff>(10, 1)));
    CHECK(a * b == Poly(std::vector<Poly::Coeff>(100, 1)));

    const auto [one_a, one_b] = solution_polynomials(Splitting{1, 1, {0}, {0}});
    CHECK(one_a == Poly({1}));
    CHECK(one_b == Poly({1}));

    const Splitting sol5{10, 10, {0, 1, 20, 21, 40, 41, 60, 61, 80, 81}, {0, 2, 4, 6, 8, 10, 12, 14, 16, 18}};
    const auto [a5, b5] = solution_polynomials(sol5);
    CHECK(a5.to_string(Poly::Order::ascending).rfind("1 + x + x^20 + x^21", 0) == 0);
    CHECK(b5.to_string(Poly::Order::ascending) == "1 + x^2 + x^4 + x^6 + x^8 + x^10 + x^12 + x^14 + x^16 + x^18");
    CHECK(a5 * b5 == Poly(std::vector<Poly::Coeff>(100, 1)));
}

TEST_CASE("caps") {
    SplitterOptions tight;
    tight.cell_cap = 99;
    CHECK_THROWS_AS((void)enumerate_cyclotomic(10, 10, tight), CapExceededError);
    SplitterOptions few;
    few.max_candidates = 4;
    CHECK_THROWS_AS((void)enumerate_cyclotomic(10, 10, few), CapExceededError);
    CHECK_THROWS_AS((void)enumerate_cyclotomic(0, 3), std::invalid_argument);
}

TEST_CASE("thread count does not change the output") {
    SplitterOptions one;
    one.threads = 1;
    SplitterOptions many;
    many.threads = 7;
    for (const auto& [r, c] : std::vector<std::pair<int, int>>{{12, 12}, {8, 8}, {6, 20}, {16, 9}}) {
        CHECK(enumerate_cyclotomic(r, c, one) == enumerate_cyclotomic(r, c, many));
    }
}

TEST_CASE("property: output is valid, sorted and duplicate free for r*c <= 144") {
    for (int r = 1; r <= 144; ++r) {
        for (int c = 1; r * c <= 144; ++c) {
            const auto sols = enumerate_cyclotomic(r, c);
            REQUIRE(!sols.empty());
            REQUIRE(std::is_sorted(sols.begin(), sols.end()));
            REQUIRE(std::adjacent_find(sols.begin(), sols.end()) == sols.end());
            for (const auto& s : sols) {
                REQUIRE_MESSAGE(verify_splitting(s).ok, r << "x" << c);
                REQUIRE(s == canonicalize(s));
            }
        }
    }
}

TEST_CASE("property: groupings rejected by the x = 1 test never expand to a labeling") {
    // Expand every grouping, including the ones the engine skips, and check
    // the skipped ones are never 0/1 with the right term counts.
    for (std::int64_t m = 2; m <= 72; ++m) {
        const auto fac = factorize_c(m);
        const auto k = fac.factors.size();
        for (const auto rows : divisors(m)) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                Poly a{1};
                Poly b{1};
                Poly::Coeff a_at_one = 1;
                for (std::size_t i = 0; i < k; ++i) {
                    if (mask >> i & 1U) {
                        a = a * fac.factors[i].phi;
                        a_at_one *= poly_eval_int(fac.factors[i].phi, 1);
                    } else {
                        b = b * fac.factors[i].phi;
                    }
                }
                if (a_at_one == rows) continue;
                const auto sa = poly_support_if_zero_one(a);
                const auto sb = poly_support_if_zero_one(b);
                const bool valid = sa && sb && static_cast<std::int64_t>(sa->size()) == rows &&
                                   static_cast<std::int64_t>(sb->size()) == m / rows;
                REQUIRE_FALSE_MESSAGE(valid, "m = " << m << ", rows = " << rows << ", mask = " << mask);
            }
        }
    }
}
