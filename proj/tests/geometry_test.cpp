#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reference_solutions.hpp"
#include "sumtable/errors.hpp"
#include "sumtable/geometry.hpp"
#include "sumtable/oracle.hpp"

#include <random>
#include <set>

using namespace sumtable;
using sumtable::testing::reference_10x10;

TEST_CASE("realize") {
    SUBCASE("[5A 2B 2A 5B] is Solution 4 with sides exchanged") {
        const RadixScheme s{{{5, Side::A}, {2, Side::B}, {2, Side::A}, {5, Side::B}}};
        const auto sp = realize(s);
        CHECK(sp.a == LabelSet{0, 1, 2, 3, 4, 10, 11, 12, 13, 14});
        CHECK(sp.b == LabelSet{0, 5, 20, 25, 40, 45, 60, 65, 80, 85});
        CHECK(canonicalize(sp) == Splitting{10, 10, reference_10x10()[3].a, reference_10x10()[3].b});
    }
    SUBCASE("[10A 10B]") {
        const auto sp = realize(RadixScheme{{{10, Side::A}, {10, Side::B}}});
        CHECK(sp == Splitting{10, 10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {0, 10, 20, 30, 40, 50, 60, 70, 80, 90}});
        CHECK(canonicalize(sp) == Splitting{10, 10, reference_10x10()[0].a, reference_10x10()[0].b});
    }
    SUBCASE("single row side") {
        CHECK(realize(RadixScheme{{{6, Side::A}}}) == Splitting{6, 1, {0, 1, 2, 3, 4, 5}, {0}});
        CHECK(realize(RadixScheme{}) == Splitting{1, 1, {0}, {0}});
    }
    SUBCASE("bad radix") {
        CHECK_THROWS_AS((void)realize(RadixScheme{{{1, Side::A}}}), std::invalid_argument);
    }
}

TEST_CASE("ordered_factorizations") {
    CHECK(ordered_factorizations(1) == std::vector<std::vector<std::int64_t>>{{}});
    CHECK(ordered_factorizations(8) ==
          std::vector<std::vector<std::int64_t>>{{2, 2, 2}, {2, 4}, {4, 2}, {8}});
    CHECK(ordered_factorizations(12, 2).size() == 5);  // 12, 2*6, 6*2, 3*4, 4*3
}

TEST_CASE("enumerate_schemes") {
    SUBCASE("10x10 gives the seven reference labelings") {
        const auto sols = enumerate_schemes(10, 10);
        REQUIRE(sols.size() == 7);
        std::set<Splitting> found(sols.begin(), sols.end());
        for (const auto& p : reference_10x10()) CHECK(found.count(canonicalize(Splitting{10, 10, p.a, p.b})) == 1);
    }
    SUBCASE("8x8 contains a nested labeling no flat pattern produces") {
        // [2B 2A 2B 2A 2B 2A]: blocks within blocks on both sides
        const Splitting nested{8, 8, {0, 2, 8, 10, 32, 34, 40, 42}, {0, 1, 4, 5, 16, 17, 20, 21}};
        const auto full = enumerate_schemes(8, 8);
        const auto flat = flat_patterns(8);
        CHECK(std::find(full.begin(), full.end(), nested) != full.end());
        CHECK(std::find(flat.begin(), flat.end(), nested) == flat.end());
        CHECK(full == enumerate_bruteforce(8, 8));
    }
    SUBCASE("7x7") { CHECK(enumerate_schemes(7, 7).size() == 1); }
    SUBCASE("cap") {
        GeometryOptions tight;
        tight.cell_cap = 10;
        CHECK_THROWS_AS((void)enumerate_schemes(4, 4, tight), CapExceededError);
    }
}

TEST_CASE("flat_patterns") {
    CHECK(flat_patterns(10).size() == 7);
    CHECK(flat_patterns(2).size() == 1);
    CHECK(flat_patterns(8).size() == 7);
    CHECK(flat_patterns(8).size() < enumerate_schemes(8, 8).size());
}

TEST_CASE("property: every alternating scheme realizes a valid labeling, m <= 144") {
    for (int r = 1; r <= 144; ++r) {
        for (int c = 1; r * c <= 144; ++c) {
            for (const auto& scheme : alternating_schemes(r, c)) {
                const auto sp = realize(scheme);
                REQUIRE_MESSAGE(verify_splitting(sp).ok, scheme.to_string());
                REQUIRE(sp.rows == r);
                REQUIRE(sp.cols == c);
            }
        }
    }
}

TEST_CASE("property: merging adjacent same-side factors does not change the labeling") {
    std::mt19937_64 rng(64);
    std::uniform_int_distribution<int> radix(2, 5);
    for (int trial = 0; trial < 500; ++trial) {
        RadixScheme s;
        const auto len = 2 + rng() % 5;
        for (std::size_t k = 0; k < len; ++k) s.factors.push_back({radix(rng), rng() % 2 ? Side::A : Side::B});
        const auto before = realize(s);
        for (std::size_t k = 0; k + 1 < s.factors.size(); ++k) {
            if (s.factors[k].side != s.factors[k + 1].side) continue;
            RadixScheme merged = s;
            merged.factors[k].radix *= merged.factors[k + 1].radix;
            merged.factors.erase(merged.factors.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            REQUIRE_MESSAGE(realize(merged) == before, s.to_string() << " -> " << merged.to_string());
        }
    }
}

TEST_CASE("property: flat patterns are a subset of all schemes, n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        const auto flat = flat_patterns(n);
        const auto full = enumerate_schemes(n, n);
        REQUIRE(std::includes(full.begin(), full.end(), flat.begin(), flat.end()));
    }
}

TEST_CASE("property: schemes and brute force agree for r*c <= 144") {
    for (int r = 1; r <= 144; ++r) {
        for (int c = 1; r * c <= 144; ++c) {
            REQUIRE_MESSAGE(enumerate_schemes(r, c) == enumerate_bruteforce(r, c), r << "x" << c);
        }
    }
}
