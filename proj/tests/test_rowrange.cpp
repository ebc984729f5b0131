#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "goldbach_lab/rowrange.hpp"
#include "test_support.hpp"

using namespace goldbach_lab;
using Seq = std::vector<std::uint64_t>;

namespace {

Seq iota_seq(std::uint64_t a, std::uint64_t b) {
    Seq s(b - a + 1);
    std::iota(s.begin(), s.end(), a);
    return s;
}

std::vector<std::string> labels(const std::vector<Violation>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.property);
    return out;
}

}  // namespace

TEST_CASE("Row examples A-E", "[rowrange]") {
    const auto a = validate_row(Seq{1, 2, 3, 4});
    REQUIRE(a.accepted());
    CHECK(*a.value == Row(1, 4));

    const auto b = validate_row(Seq{25, 26, 27});
    REQUIRE(b.accepted());
    CHECK(*b.value == Row(25, 27));

    const auto c = validate_row(Seq{4, 3, 2, 1});
    CHECK(labels(c.violations) == std::vector<std::string>{"III"});
    CHECK_FALSE(c.value);

    CHECK(labels(validate_row(Seq{5, 9, 10, 11, 14}).violations) == std::vector<std::string>{"IV"});
    CHECK(labels(validate_row(Seq{49, 51, 53, 55}).violations) == std::vector<std::string>{"IV"});
}

TEST_CASE("Range examples F-I", "[rowrange]") {
    const auto f = validate_range(iota_seq(1, 100));
    REQUIRE(f.accepted());
    CHECK(*f.value == Range(1, 100));

    const auto g = validate_range(iota_seq(5, 23));
    REQUIRE(g.accepted());
    CHECK(*g.value == Range(5, 23));

    const auto h = validate_range(Seq{30, 31, 32, 35, 36, 37, 39, 41, 42, 45});
    CHECK(labels(h.violations) == std::vector<std::string>{"[5]"});

    const auto i = validate_range(Seq{31, 32, 50, 33, 50, 1, 2, 4, 10, 2000});
    CHECK_FALSE(i.accepted());
    CHECK(i.violations.size() >= 2);
    CHECK(i.violates("[5]"));
    CHECK(i.violates("[6]"));
}

TEST_CASE("validation edge cases", "[rowrange]") {
    CHECK_THROWS_AS(validate_row(Seq{}), Error);
    CHECK_THROWS_AS(validate_range(Seq{}), Error);

    const auto single = validate_row(Seq{7});
    REQUIRE(single.accepted());
    CHECK(single.value->cardinality() == 1);

    const auto zero = validate_row(Seq{0, 1, 2});
    CHECK(zero.violates("I"));
    CHECK(validate_range(Seq{0, 1, 2}).violates("[1]"));

    const auto repeated = validate_row(Seq{1, 1, 2});
    CHECK(repeated.violates("II"));
    CHECK(repeated.violates("IV"));

    CHECK(validate_range(Seq{3, 5, 9}).violates("[2]"));
}

TEST_CASE("partition_rows", "[rowrange]") {
    const auto rows = partition_rows(Range(1, 100), 10);
    REQUIRE(rows.size() == 10);
    CHECK(rows.front() == Row(1, 10));
    CHECK(rows[1] == Row(11, 20));
    CHECK(rows.back() == Row(91, 100));

    CHECK(partition_rows(Range(5, 5), 1) == std::vector<Row>{Row(5, 5)});

    try {
        partition_rows(Range(1, 100), 7);
        FAIL("expected NonDivisibleWidth");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonDivisibleWidth);
    }
    try {
        partition_rows(Range(1, 10), 20);
        FAIL("expected WidthExceedsRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::WidthExceedsRange);
    }
    CHECK_THROWS_AS(partition_rows(Range(1, 10), 0), Error);
}

TEST_CASE("successor_offset", "[rowrange]") {
    CHECK(successor_offset(Row(1, 10), Row(11, 20)) == 1);
    CHECK(successor_offset(Row(1, 10), Row(21, 30)) == 11);
    CHECK(successor_offset(Row(11, 20), Row(1, 10)) == -19);
    CHECK(are_successive(Row(1, 10), Row(11, 20)));
    CHECK_FALSE(are_successive(Row(1, 10), Row(12, 20)));
    try {
        successor_offset(Row(1, 10), Row(5, 20));
        FAIL("expected OverlappingRows");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OverlappingRows);
    }
}

TEST_CASE("Row and Range reject invalid endpoints", "[rowrange]") {
    CHECK_THROWS_AS(Row(0, 3), Error);
    CHECK_THROWS_AS(Row(4, 3), Error);
    CHECK_THROWS_AS(Range(0, 0), Error);
}

TEST_CASE("property: Row round trip through its element sequence", "[rowrange][property]") {
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = test_support::uniform(1, 1'000'000'000);
        const auto b = a + test_support::uniform(0, 300);
        const Row row(a, b);
        const auto verdict = validate_row(row.elements());
        REQUIRE(verdict.accepted());
        REQUIRE(*verdict.value == row);
    }
}

TEST_CASE("property: partitions are disjoint covers of successive rows", "[rowrange][property]") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto lo = test_support::uniform(1, 1'000'000);
        const auto d = test_support::uniform(1, 2000);
        const Range range(lo, lo + d - 1);
        std::vector<std::uint64_t> divisors;
        for (std::uint64_t w = 1; w <= d; ++w) {
            if (d % w == 0) divisors.push_back(w);
        }
        const auto width = divisors[test_support::uniform(0, divisors.size() - 1)];
        const auto rows = partition_rows(range, width);

        REQUIRE(rows.size() == d / width);
        REQUIRE(rows.front().smallest() == range.smallest());
        REQUIRE(rows.back().greatest() == range.greatest());
        for (const auto& r : rows) REQUIRE(r.cardinality() == width);
        for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
            REQUIRE_FALSE(rows[k].intersects(rows[k + 1]));
            REQUIRE(successor_offset(rows[k], rows[k + 1]) == 1);
        }
    }
}

TEST_CASE("property: every consecutive slice of an accepted Range is a Row", "[rowrange][property]") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto lo = test_support::uniform(1, 10'000);
        const auto seq = iota_seq(lo, lo + test_support::uniform(0, 40));
        REQUIRE(validate_range(seq).accepted());
        for (std::size_t k = 1; k <= seq.size(); ++k) {
            for (std::size_t start = 0; start + k <= seq.size(); ++start) {
                REQUIRE(validate_row(std::span(seq).subspan(start, k)).accepted());
            }
        }
    }
}

TEST_CASE("property: reversing an accepted candidate flips exactly III / [6]", "[rowrange][property]") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto lo = test_support::uniform(1, 1'000'000);
        auto seq = iota_seq(lo, lo + test_support::uniform(1, 200));
        std::reverse(seq.begin(), seq.end());
        CHECK(labels(validate_row(seq).violations) == std::vector<std::string>{"III"});
        CHECK(labels(validate_range(seq).violations) == std::vector<std::string>{"[6]"});
    }
}
