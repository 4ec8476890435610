#include "qcount/cli.hpp"
#include "qcount/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qcount;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("count")
{
    auto r = run({"count", "--n", "2", "--r", "1", "--k", "1", "--q", "2", "--alpha", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");

    r = run({"count", "--n", "2", "--r", "1", "--k", "1", "--p", "2", "--alpha", "nonzero"});
    CHECK(r.out == "4\n");

    r = run({"count", "--n", "3", "--r", "2", "--k", "2", "--q", "9", "--alpha", "1", "--method", "rec"});
    const auto closed = run({"count", "--n", "3", "--r", "2", "--k", "2", "--p", "3", "--m", "2",
                             "--alpha", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == closed.out);

    r = run({"count", "--n", "0", "--r", "0", "--k", "0", "--q", "5", "--alpha", "zero"});
    CHECK(r.out == "1\n");
}

TEST_CASE("count json")
{
    const auto r = run({"count", "--n", "2", "--r", "2", "--k", "2", "--q", "2", "--alpha", "0", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["result"] == "4");
    CHECK(j["method"] == "closed_form");
    CHECK(j["query"]["n"] == 2);
    CHECK(j["query"]["p"] == 2);
    CHECK(j["query"]["m"] == 1);
    CHECK(j["query"]["alpha"] == "zero");
    CHECK(j["elapsed_ms"].is_number_integer());
    CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("table")
{
    auto r = run({"table", "--n", "2", "--k", "1", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "r,f0,f1,g,a\n0,1,0,1,1\n1,5,4,1,9\n2,2,4,-2,6\n");

    r = run({"table", "--n", "0", "--k", "0", "--q", "3"});
    CHECK(r.out == "r,f0,f1,g,a\n0,1,0,1,1\n");

    r = run({"table", "--n", "2", "--k", "1", "--q", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][1]["f0"] == "5");
    CHECK(j.dump() + "\n" == r.out);

    CHECK(run({"table", "--n", "2", "--k", "3", "--q", "2"}).code == 2);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--suite", "identities", "--max-n", "6", "--q-list", "2,3,5"});
    CHECK(r.code == 0);
    CHECK(r.out.ends_with("PASS\n"));
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run({"verify", "--suite", "oracle", "--max-n", "3", "--q-list", "2,3", "--workers", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.ends_with("PASS\n"));

    r = run({"verify", "--suite", "oracle", "--max-n", "9", "--q-list", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("size guard exceeded") != std::string::npos);

    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("zcount")
{
    auto r = run({"zcount", "--matrix", "2,1;0 0;0 0", "--r", "1", "--alpha", "0", "--method", "closed"});
    CHECK(r.code == 0);
    CHECK(r.out == "9\n");

    r = run({"zcount", "--matrix", "2,1;0 1;0 0", "--r", "1", "--alpha", "1", "--method", "oracle"});
    CHECK(r.out == "4\n");

    r = run({"zcount", "--matrix", "3,1;1 0;0 1", "--r", "2", "--alpha", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "closed_form 18\noracle 18\n");

    r = run({"zcount", "--matrix", "3,1;1 0;0 1", "--r", "2", "--alpha", "2", "--json",
             "--method", "closed"});
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["result"] == "15");
    CHECK(j["query"]["alpha"] == "nonzero");
    CHECK(j["query"]["alpha_index"] == 2);
    CHECK(j["query"]["k"] == 2);

    const auto path = std::filesystem::temp_directory_path() / "qcount_zcount_matrix.txt";
    {
        std::ofstream f(path);
        f << "2,2;1 2;3 1\n";
    }
    const auto from_file = run({"zcount", "--matrix", path.string(), "--r", "1", "--alpha", "1"});
    const auto inline_m = run({"zcount", "--matrix", "2,2;1 2;3 1", "--r", "1", "--alpha", "1"});
    std::filesystem::remove(path);
    CHECK(from_file.code == 0);
    CHECK(from_file.out == inline_m.out);

    CHECK(run({"zcount", "--matrix", "2,1;1 0 1;0 1", "--r", "1", "--alpha", "0"}).code == 2);
    CHECK(run({"zcount", "--matrix", "2,1;1 0;0 1", "--r", "3", "--alpha", "0"}).code == 2);
    CHECK(run({"zcount", "--matrix", "2,1;1 0;0 1", "--r", "1", "--alpha", "2"}).code == 2);
}

TEST_CASE("parse_matrix")
{
    const MatGF m = cli::parse_matrix("2,2;1 2;3 0");
    CHECK(m.ctx().q() == 4);
    CHECK(m.at(0, 1) == FieldElem{2});
    CHECK(m.at(1, 0) == FieldElem{3});
    CHECK_THROWS_AS(cli::parse_matrix("2,1;1 0"), DimensionMismatch);
    CHECK_THROWS_AS(cli::parse_matrix("4,1;1"), NotPrime);
}

TEST_CASE("gf-info")
{
    auto r = run({"gf-info", "--q", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("GF(4) = GF(2)[t]/(t^2+t+1)\n"));

    r = run({"gf-info", "--p", "3", "--m", "2", "--json"});
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["modulus"] == "t^2+1");
    CHECK(j["elements"].size() == 9);
    CHECK(j["elements"][0]["inverse"].is_null());
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"count", "--n", "2", "--r", "1", "--k", "1", "--q", "6", "--alpha", "0"}).code == 2);
    CHECK(run({"count", "--n", "2", "--r", "1", "--k", "1", "--q", "2", "--alpha", "7"}).code == 2);
    CHECK(run({"count", "--n", "2", "--r", "1", "--k", "3", "--q", "2", "--alpha", "0"}).code == 2);
    CHECK(run({"count", "--n", "2", "--r", "1", "--q", "2", "--alpha", "0"}).code == 2);
    CHECK(run({"count", "--help"}).code == 0);
}

} // TEST_SUITE
