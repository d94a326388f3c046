#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stq/cli.hpp"

using namespace stq;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string &s)
{
    auto end = s.find_last_not_of('\n');
    if (end == std::string::npos)
        return {};
    auto start = s.find_last_of('\n', end);
    return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

} // namespace

TEST_CASE("st-table csv")
{
    Run r = run({"st-table", "--max-n", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.substr(0, 5) == "n,sT\n");
    CHECK(last_line(r.out) == "5,15");
    // max-n 0: header only
    Run r0 = run({"st-table", "--max-n", "0", "--format", "csv"});
    CHECK(r0.code == 0);
    CHECK(r0.out == "n,sT\n");
}

TEST_CASE("crank-table csv and modulus view")
{
    Run r = run({"crank-table", "--max-n", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 6) == "n,m,C\n");
    CHECK(r.out.find("5,-4,1\n") != std::string::npos);
    CHECK(r.out.find("5,0,3\n") != std::string::npos);
    Run rm = run({"crank-table", "--max-n", "5", "--modulus", "5", "--format", "csv"});
    CHECK(rm.code == 0);
    for (int k = 0; k < 5; ++k)
        CHECK(rm.out.find("5," + std::to_string(k) + ",3\n") != std::string::npos);
}

TEST_CASE("enumerate lists pairs with cranks")
{
    Run r = run({"enumerate", "--max-n", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1,1,-,0\n") != std::string::npos);
    CHECK(r.out.find("2,1,1,-1\n") != std::string::npos);
    CHECK(r.out.find("2,1+1,-,1\n") != std::string::npos);
    CHECK(r.out.find("2,2,-,0\n") != std::string::npos);
}

TEST_CASE("verify single identity: json output and exit codes")
{
    Run r = run({"verify", "--identity", "misc_prop_1", "--order", "30", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["name"] == "misc_prop_1");
    CHECK(j["passed"] == true);
    CHECK(j["order"].is_number_integer());

    // unknown identity -> usage error on stderr
    Run bad = run({"verify", "--identity", "no_such_check"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("no_such_check") != std::string::npos);
}

TEST_CASE("bad arguments give exit code 2")
{
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"st-table"}).code == 2);                        // missing --max-n
    CHECK(run({"st-table", "--max-n", "five"}).code == 2);     // non-numeric
    CHECK(run({"verify"}).code == 2);                          // missing --identity
    CHECK(run({"st-table", "--max-n", "3", "--format", "xml"}).code == 2);
    CHECK(run({}).code == 2); // no command
}

TEST_CASE("output is byte-identical across runs with the same seed")
{
    std::vector<std::string> args = {"verify", "--identity", "misc_prop_3",
                                     "--order", "40", "--seed", "777", "--format", "json"};
    Run a = run(args);
    Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("list prints the registry")
{
    Run r = run({"--list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("prop_bailey_pair") != std::string::npos);
    CHECK(r.out.find("thm4_crank") != std::string::npos);
}

TEST_CASE("json table output keeps big values as strings")
{
    Run r = run({"st-table", "--max-n", "6", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 6);
    CHECK(j[4]["n"] == 5);
    CHECK(j[4]["sT"] == "15");
    CHECK(j[4]["sT"].is_string());
}
