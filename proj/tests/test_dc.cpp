#include <catch_amalgamated.hpp>

#include <algorithm>

#include "goldbach_lab/dc.hpp"
#include "test_support.hpp"

using namespace goldbach_lab;
using Multiset = std::vector<std::uint64_t>;

namespace {

void require_sound(const DcResult& r) {
    REQUIRE(verify_witness(r));
    REQUIRE(std::is_sorted(r.witness.begin(), r.witness.end()));
    const bool has_two = std::find(r.witness.begin(), r.witness.end(), 2) != r.witness.end();
    // Sum parity: with no 2 among the summands, parity of the count equals parity of the target.
    if (!has_two) REQUIRE((r.witness.size() % 2) == (r.target % 2));
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("dc_min examples", "[dc]") {
    const auto eight = dc_min(8);
    CHECK(eight.value == 2);
    CHECK(eight.witness == Multiset{3, 5});
    require_sound(eight);

    const auto big = dc_min(216);
    CHECK(big.value == 2);
    CHECK(big.witness == Multiset{5, 211});
    CHECK(big.witness != Multiset{3, 213});  // 213 = 3 * 71 is not prime
    require_sound(big);

    CHECK(dc_min(4).witness == Multiset{2, 2});
    CHECK(dc_min(27).value == 3);
    require_sound(dc_min(27));
    CHECK(dc_min(2) == DcResult{2, 1, {2}});
    CHECK(dc_min(9) == DcResult{9, 2, {2, 7}});
    CHECK(code_of([] { dc_min(1); }) == Errc::TargetTooSmall);
    CHECK(code_of([] { dc_min(0); }) == Errc::TargetTooSmall);
}

TEST_CASE("dc_min on large targets", "[dc]") {
    for (std::uint64_t a : {1'000'000'000'000ull, 999'999'999'999'999'998ull, 18'446'744'073'709'551'614ull}) {
        const auto r = dc_min(a);
        CHECK(r.value == 2);
        require_sound(r);
    }
    const auto odd = dc_min(1'000'000'000'000'000'001ull);
    CHECK(odd.value >= 2);
    require_sound(odd);
}

TEST_CASE("dc_oracle examples and errors", "[dc]") {
    CHECK(dc_oracle(8) == 2);
    CHECK(dc_oracle(2) == 1);
    CHECK(dc_oracle(11) == 1);
    CHECK(dc_oracle(27) == 3);
    CHECK(code_of([] { dc_oracle(1); }) == Errc::TargetTooSmall);
    CHECK(code_of([] { dc_oracle(1'000'001); }) == Errc::AboveOracleCap);
    DcLimits small;
    small.oracle_cap = 100;
    CHECK(code_of([&] { dc_oracle(101, small); }) == Errc::AboveOracleCap);
    CHECK(dc_oracle(100, small) == 2);
}

TEST_CASE("dc_min agrees with the oracle and witnesses verify up to 2*10^4", "[dc][property]") {
    const DcOracleTable table(20'000);
    for (std::uint64_t a = 2; a <= 20'000; ++a) {
        const auto r = dc_min(a);
        REQUIRE(r.value == table.value(a));
        require_sound(r);
    }
}

TEST_CASE("decompositions", "[dc]") {
    const auto fours = decompositions(8, 4);
    CHECK(std::find(fours.begin(), fours.end(), Multiset{2, 2, 2, 2}) != fours.end());
    CHECK(decompositions(8, 2) == std::vector<Multiset>{{3, 5}});
    CHECK(decompositions(4, 3).empty());
    CHECK(decompositions(7, 1) == std::vector<Multiset>{{7}});
    CHECK(decompositions(8, 3) == std::vector<Multiset>{{2, 3, 3}});
    CHECK(code_of([] { decompositions(10'001, 2); }) == Errc::AboveEnumerationCap);
    CHECK(code_of([] { decompositions(10, 0); }) == Errc::InvalidArgument);

    for (const auto& m : decompositions(60, 4)) {
        REQUIRE(m.size() == 4);
        REQUIRE(std::is_sorted(m.begin(), m.end()));
        REQUIRE(verify_witness({60, 4, m}));
    }
}

TEST_CASE("goldbach_pairs", "[dc]") {
    using Pairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    CHECK(goldbach_pairs(100) == Pairs{{3, 97}, {11, 89}, {17, 83}, {29, 71}, {41, 59}, {47, 53}});
    CHECK(goldbach_pairs(4) == Pairs{{2, 2}});
    CHECK(code_of([] { goldbach_pairs(7); }) == Errc::NotEven);
    CHECK(code_of([] { goldbach_pairs(2); }) == Errc::TargetTooSmall);
    CHECK(code_of([] { goldbach_pairs(1'000'002); }) == Errc::AboveEnumerationCap);
    CHECK(goldbach_pair_count(10'000) == 127);
    CHECK(goldbach_pair_count(100) == 6);
}

TEST_CASE("property: pairs, decompositions and dc_min agree for even targets", "[dc][property]") {
    for (std::uint64_t a = 4; a <= 2000; a += 2) {
        const auto pairs = goldbach_pairs(a);
        REQUIRE(pairs == test_support::brute_force_pairs(a));
        REQUIRE((dc_min(a).value == 2) == !pairs.empty());
        const auto two = decompositions(a, 2);
        REQUIRE(two.size() == pairs.size());
        for (std::size_t i = 0; i < two.size(); ++i) REQUIRE(two[i] == Multiset{pairs[i].first, pairs[i].second});
        REQUIRE(dc_min(a).witness == Multiset{pairs.front().first, pairs.front().second});
    }
}

TEST_CASE("find_goldbach_pair reports absence", "[dc]") {
    // A test that never answers prime forces the exhaustive search to fail.
    CHECK_FALSE(find_goldbach_pair(100, [](std::uint64_t) { return false; }));
    const GoldbachCounterexample e(100);
    CHECK(e.target() == 100);
    CHECK(e.code() == Errc::GoldbachCounterexample);
}
