#include <catch_amalgamated.hpp>

#include <sstream>

#include "goldbach_lab/cli.hpp"
#include "goldbach_lab/numeric_arg.hpp"

using namespace goldbach_lab;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "goldbach-lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_natural accepts underscore separators", "[cli]") {
    CHECK(parse_natural("10_000_000") == 10'000'000);
    CHECK(parse_natural("42") == 42);
    CHECK(parse_natural("18446744073709551615") == 18446744073709551615ull);
    for (const char* bad : {"", "_1", "1_", "1__0", "-3", "1e6", "18446744073709551616", "abc"}) {
        CHECK_THROWS_AS(parse_natural(bad), Error);
    }
}

TEST_CASE("cli audit json", "[cli]") {
    const auto r = run_cli({"audit", "--from", "1", "--to", "100", "--row-width", "10", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["command"] == "audit");
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["payload"]["reports"].size() == 10);
    CHECK(j["payload"]["verdict_summary"]["(27)"]["failed"] == 10);
    CHECK(j["payload"]["verdict_summary"]["(27)"]["held"] == 0);
    CHECK(j["payload"]["reports"][0]["census"] == json{{"gamma_even", 5}, {"gamma_odd", 5}, {"gamma_prime", 4}, {"m", 10}});
    CHECK(j.dump(2) + "\n" == r.out);  // canonical: sorted keys, two-space indent

    // Key order is lexicographic throughout.
    const auto first_check = j["payload"]["reports"][0]["row_checks"][0];
    std::vector<std::string> keys;
    for (const auto& [k, _] : first_check.items()) keys.push_back(k);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("cli audit errors map to exit codes", "[cli]") {
    const auto bad_width = run_cli({"audit", "--from", "1", "--to", "100", "--row-width", "7"});
    CHECK(bad_width.code == 2);
    CHECK(bad_width.err.find("NonDivisibleWidth") != std::string::npos);

    CHECK(run_cli({"audit", "--from", "x", "--to", "100"}).code == 2);
    CHECK(run_cli({"audit", "--from", "1", "--to", "100", "--format", "xml"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"audit", "--from", "1", "--to", "10", "--relations", "(12)"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("cli audit csv has both tables", "[cli]") {
    const auto r = run_cli({"audit", "--from", "2", "--to", "3", "--row-width", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    const std::string per_row_header = "row_start,row_end,gamma_even,gamma_odd,gamma_prime,m,relation_id,lhs,rhs,holds\n";
    const std::string per_a_header = "row_start,A,dc_value,relation_id,lhs,rhs,holds\n";
    REQUIRE(r.out.rfind(per_row_header, 0) == 0);
    // No even A > 2 in {2, 3}: the per-A section is the header alone.
    CHECK(r.out.size() >= per_a_header.size());
    CHECK(r.out.substr(r.out.size() - per_a_header.size() - 1) == "\n" + per_a_header);
    CHECK(r.out.find("2,3,1,1,2,2,(3),2,1;1,false\n") != std::string::npos);

    const auto full = run_cli({"audit", "--from", "1", "--to", "10", "--row-width", "10", "--format", "csv"});
    CHECK(full.out.find("1,10,5,5,4,10,(27),16,5,false\n") != std::string::npos);
    CHECK(full.out.find("1,8,2,(11-3),2,2,true\n") != std::string::npos);
}

TEST_CASE("cli census", "[cli]") {
    const auto r = run_cli({"census", "--from", "1", "--to", "100", "--row-width", "10", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1,10,5,5,4,10\n") != std::string::npos);
    CHECK(r.out.find("91,100,5,5,1,10\n") != std::string::npos);
    const auto small = run_cli({"census", "--from", "2", "--to", "3", "--row-width", "2"});
    const auto j = json::parse(small.out);
    CHECK(j["payload"]["censuses"][0]["gamma_prime"] == 2);
    CHECK(j["payload"]["censuses"][0]["row"] == json{{"start", 2}, {"end", 3}});
}

TEST_CASE("cli dc", "[cli]") {
    const auto eight = json::parse(run_cli({"dc", "8"}).out);
    CHECK(eight["payload"]["value"] == 2);
    CHECK(eight["payload"]["witness"] == json{3, 5});

    const auto hundred = json::parse(run_cli({"dc", "100", "--list-pairs"}).out);
    CHECK(hundred["payload"]["pairs"].size() == 6);
    CHECK(hundred["payload"]["pairs"][0] == json{3, 97});

    const auto three = json::parse(run_cli({"dc", "3"}).out);
    CHECK(three["payload"]["value"] == 1);
    CHECK(three["payload"]["witness"] == json{3});

    CHECK(run_cli({"dc", "1"}).code == 2);
    CHECK(run_cli({"dc", "7", "--list-pairs"}).code == 2);
    CHECK(run_cli({"dc", "1_000_000", "--format", "text"}).out.rfind("DC(1000000) = 2", 0) == 0);
}

TEST_CASE("cli sieve and partition", "[cli]") {
    const auto sieve = json::parse(run_cli({"sieve", "--from", "90", "--to", "100", "--list"}).out);
    CHECK(sieve["payload"]["prime_count"] == 1);
    CHECK(sieve["payload"]["primes"] == json{97});
    CHECK(run_cli({"sieve", "--from", "0", "--to", "10"}).code == 2);

    const auto part = json::parse(run_cli({"partition", "--from", "1", "--to", "100", "--row-width", "10"}).out);
    CHECK(part["payload"]["rows"].size() == 10);
    CHECK(part["payload"]["successor_offsets"] == json(std::vector<int>(9, 1)));
    CHECK(run_cli({"partition", "--from", "1", "--to", "100", "--row-width", "7"}).code == 2);
}

TEST_CASE("cli verify", "[cli]") {
    const auto r = run_cli({"verify", "--from", "4", "--to", "4"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["payload"] == json{{"failures", json::array()}, {"from", 4}, {"to", 4}, {"verified", 1}});
    CHECK(j["metadata"].contains("wall_seconds"));

    CHECK(run_cli({"verify", "--from", "5", "--to", "10"}).code == 2);
    CHECK(run_cli({"verify", "--from", "2", "--to", "10"}).code == 2);
    CHECK(run_cli({"verify", "--from", "4", "--to", "10", "--workers", "0"}).code == 2);
}

TEST_CASE("cli writes to --output", "[cli]") {
    const auto path = std::filesystem::temp_directory_path() / "goldbach_lab_cli_output.json";
    std::filesystem::remove(path);
    const auto r = run_cli({"dc", "8", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(json::parse(in)["payload"]["value"] == 2);
    std::filesystem::remove(path);
}
