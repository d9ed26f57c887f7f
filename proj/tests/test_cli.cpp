#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gtj/cli.hpp"
#include "gtj/sequence.hpp"

using Json = nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "gtj");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = gtj::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("terms renders the jg table") {
    const auto res = run({"terms", "--preset", "jg", "--from", "0", "--to", "5"});
    CHECK_EQ(res.code, 0);
    CHECK(res.out.find("9+5i") != std::string::npos);
    CHECK(res.out.find("1+i") != std::string::npos);
}

TEST_CASE("terms json matches the tabulated values") {
    const auto res =
        run({"terms", "--preset", "jg", "--from", "0", "--to", "5", "--format", "json"});
    REQUIRE_EQ(res.code, 0);
    const Json rows = Json::parse(res.out);
    REQUIRE_EQ(rows.size(), 6);
    const std::vector<std::pair<std::string, std::string>> expected{
        {"0", "0"}, {"1", "0"}, {"1", "1"}, {"2", "1"}, {"5", "2"}, {"9", "5"}};
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK_EQ(rows[k]["n"], static_cast<std::int64_t>(k));
        CHECK_EQ(rows[k]["re"], expected[k].first);
        CHECK_EQ(rows[k]["im"], expected[k].second);
    }
}

TEST_CASE("terms accepts an explicit fraction seed") {
    const auto res =
        run({"terms", "--seed", "1,0,0", "--from", "0", "--to", "3", "--format", "json"});
    REQUIRE_EQ(res.code, 0);
    const Json rows = Json::parse(res.out);
    CHECK_EQ(rows[0]["re"], "1");
    CHECK_EQ(rows[0]["im"], "-1/2");
    CHECK_EQ(rows[1]["re"], "0");
    CHECK_EQ(rows[1]["im"], "1");
    CHECK_EQ(rows[2]["re"], "0");
    CHECK_EQ(rows[2]["im"], "0");
    CHECK_EQ(rows[3]["re"], "2");
    CHECK_EQ(rows[3]["im"], "0");
}

TEST_CASE("terms covers negative indices with exact dyadic fractions") {
    const auto res =
        run({"terms", "--preset", "kg", "--from", "-2", "--to", "0", "--format", "json"});
    REQUIRE_EQ(res.code, 0);
    const Json rows = Json::parse(res.out);
    CHECK_EQ(rows[0]["re"], "-3/4");
    CHECK_EQ(rows[0]["im"], "17/8");
    CHECK_EQ(rows[1]["re"], "-1/2");
    CHECK_EQ(rows[1]["im"], "-3/4");
    CHECK_EQ(rows[2]["re"], "3");
    CHECK_EQ(rows[2]["im"], "-1/2");
}

TEST_CASE("terms csv emits a header and fraction columns") {
    const auto res =
        run({"terms", "--preset", "jg", "--from", "0", "--to", "2", "--format", "csv"});
    REQUIRE_EQ(res.code, 0);
    CHECK_EQ(res.out, "n,re,im\n0,0,0\n1,1,0\n2,1,1\n");
}

TEST_CASE("csv values parse back to equal terms") {
    const auto res =
        run({"terms", "--preset", "kg", "--from", "-4", "--to", "6", "--format", "csv"});
    REQUIRE_EQ(res.code, 0);
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);  // header
    const auto seed = gtj::preset_seed(gtj::Preset::Kg);
    while (std::getline(lines, line)) {
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        const std::int64_t n = std::stoll(line.substr(0, first));
        const gtj::Rational re = gtj::parse_rational(line.substr(first + 1, second - first - 1));
        const gtj::Rational im = gtj::parse_rational(line.substr(second + 1));
        CHECK_EQ(gtj::GaussianRational(re, im), gtj::term_recurrence(seed, n));
    }
}

TEST_CASE("terms method=all reports agreement") {
    const auto res = run({"terms", "--preset", "kg", "--from", "-5", "--to", "12", "--method",
                          "all", "--format", "json"});
    REQUIRE_EQ(res.code, 0);
    const Json rows = Json::parse(res.out);
    REQUIRE_EQ(rows.size(), 18);
    for (const auto& row : rows) {
        CHECK_EQ(row["match"], true);
        CHECK_EQ(row["recurrence"]["re"], row["binet"]["re"]);
        CHECK_EQ(row["recurrence"]["im"], row["fast"]["im"]);
    }
}

TEST_CASE("q-terms wraps the q-family") {
    const auto res = run({"q-terms", "--preset", "jg", "--q", "2", "--from", "0", "--to", "3",
                          "--format", "json"});
    REQUIRE_EQ(res.code, 0);
    const Json rows = Json::parse(res.out);
    CHECK_EQ(rows[2]["re"], "1");
    CHECK_EQ(rows[2]["im"], "0");
    CHECK_EQ(rows[3]["re"], "1");
    CHECK_EQ(rows[3]["im"], "1");
}

TEST_CASE("series reproduces the term table with match flags") {
    const auto res = run({"series", "--preset", "jg", "--count", "6", "--format", "json"});
    REQUIRE_EQ(res.code, 0);
    const Json rows = Json::parse(res.out);
    REQUIRE_EQ(rows.size(), 6);
    CHECK_EQ(rows[5]["re"], "9");
    CHECK_EQ(rows[5]["im"], "5");
    for (const auto& row : rows) {
        CHECK_EQ(row["match"], true);
    }

    const auto single = run({"series", "--preset", "kg", "--count", "1"});
    REQUIRE_EQ(single.code, 0);
    CHECK(single.out.find("3-1/2i") != std::string::npos);
}

TEST_CASE("check passes on identity sweeps and reports counts") {
    const auto res = run({"check", "--identity", "cassini", "--preset", "kg", "--n", "1..10"});
    CHECK_EQ(res.code, 0);
    CHECK(res.out.find("10 checked, 0 failed") != std::string::npos);

    const auto sum = run({"check", "--identity", "sum", "--seed", "2/3,1,1/5", "--n", "0..20"});
    CHECK_EQ(sum.code, 0);
    CHECK(sum.out.find("21 checked, 0 failed") != std::string::npos);
}

TEST_CASE("check docagne single instance shows the common value") {
    const auto res = run({"check", "--identity", "docagne", "--preset", "jg", "--m", "1", "--n",
                          "2"});
    CHECK_EQ(res.code, 0);
    CHECK(res.out.find("lhs=rhs=-2+i") != std::string::npos);

    const auto json = run({"check", "--identity", "docagne", "--preset", "jg", "--m", "1", "--n",
                           "2", "--format", "json"});
    REQUIRE_EQ(json.code, 0);
    const Json rows = Json::parse(json.out);
    REQUIRE_EQ(rows.size(), 1);
    CHECK_EQ(rows[0]["identity"], "docagne");
    CHECK_EQ(rows[0]["seed"], Json::array({"0", "1", "1"}));
    CHECK_EQ(rows[0]["status"], "holds");
    CHECK(rows[0]["counterexample"].is_null());
    CHECK(json.err.find("1 checked, 0 failed") != std::string::npos);
}

TEST_CASE("check q-family identities") {
    const auto res = run({"check", "--identity", "qbinom", "--preset", "kg", "--q", "1..4", "--m",
                          "0..6", "--format", "csv"});
    CHECK_EQ(res.code, 0);
    CHECK(res.out.find("qbinom,q=1;m=0,holds") != std::string::npos);

    const auto geom = run({"check", "--identity", "qgeom", "--seed", "1,1,4", "--q", "3", "--m",
                           "0"});
    CHECK_EQ(geom.code, 0);
    CHECK(geom.out.find("ratio 1") != std::string::npos);
}

TEST_CASE("errata audit is deterministic and informational") {
    const auto res = run({"errata", "--format", "json"});
    REQUIRE_EQ(res.code, 0);
    const Json entries = Json::parse(res.out);
    REQUIRE_EQ(entries.size(), 6);

    const auto find = [&entries](const std::string& name) {
        for (const auto& entry : entries) {
            if (entry["entry"] == name) {
                return entry;
            }
        }
        FAIL(("missing entry " + name));
        return entries[0];
    };

    const auto jg_sum = find("jg-sum-constant");
    CHECK_EQ(jg_sum["printed_status"], "fails");
    CHECK_EQ(jg_sum["printed_counterexample"]["indices"], Json::array({0}));
    CHECK_EQ(jg_sum["derived_status"], "holds");

    const auto kg_sum = find("kg-sum-constant");
    CHECK_EQ(kg_sum["printed_status"], "holds");

    const auto kg_cas = find("kg-cassini-closed-form");
    CHECK_EQ(kg_cas["printed_status"], "fails");
    CHECK_EQ(kg_cas["printed_counterexample"]["indices"], Json::array({1}));
    CHECK_EQ(kg_cas["printed_counterexample"]["lhs"], "-35/2,9/2");
    CHECK_EQ(kg_cas["derived_status"], "holds");

    const auto xi = find("xi-omega-coefficient");
    CHECK_EQ(xi["printed_status"], "fails");
    CHECK_EQ(xi["printed_counterexample"]["lhs"], "1,-1");
    CHECK_EQ(xi["printed_counterexample"]["rhs"], "1,1");
    CHECK_EQ(xi["derived_status"], "holds");

    const auto qstep = find("qstep-companion-form");
    CHECK_EQ(qstep["printed_status"], "fails");
    CHECK_EQ(qstep["derived_status"], "holds");
}

TEST_CASE("usage errors exit with status 2") {
    CHECK_EQ(run({"terms", "--preset", "jg", "--from", "3", "--to", "1"}).code, 2);
    CHECK_EQ(run({"terms", "--seed", "1,zz,3", "--from", "0", "--to", "1"}).code, 2);
    CHECK_EQ(run({"terms", "--seed", "1,2", "--from", "0", "--to", "1"}).code, 2);
    CHECK_EQ(run({"terms", "--seed", "0,0,0", "--from", "0", "--to", "1"}).code, 2);
    CHECK_EQ(run({"terms", "--seed", "1,2,3", "--preset", "jg", "--from", "0", "--to", "1"}).code,
             2);
    CHECK_EQ(run({"terms", "--from", "0", "--to", "1"}).code, 2);
    CHECK_EQ(run({"terms", "--preset", "jg", "--from", "0", "--to", "1", "--format", "nope"}).code,
             2);
    CHECK_EQ(run({"check", "--identity", "nope", "--preset", "jg"}).code, 2);
    CHECK_EQ(run({"check", "--identity", "step", "--preset", "jg", "--n", "5..2"}).code, 2);
    CHECK_EQ(run({"series", "--preset", "jg", "--count", "0"}).code, 2);
    CHECK_EQ(run({"q-terms", "--preset", "jg", "--q", "0", "--from", "0", "--to", "1"}).code, 2);
    CHECK_EQ(run({"q-terms", "--preset", "jg", "--q", "2", "--from", "-1", "--to", "1"}).code, 2);
    CHECK_EQ(run({}).code, 2);
}

TEST_CASE("help exits cleanly") {
    CHECK_EQ(run({"--help"}).code, 0);
    CHECK_EQ(run({"terms", "--help"}).code, 0);
}
