#include "morsefiber/cli.hpp"
#include "morsefiber/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace morsefiber;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MF_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("fiber on F1") {
    const auto r = run({"fiber", data("f1.ocf"), "--base", "1,0", "--dir", "1,1", "--dim", "0"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    REQUIRE(j["points"].size() == 2);
    CHECK(j["points"][0]["birthT"] == "0");
    CHECK(j["points"][0]["deathT"] == "1");
    CHECK(j["points"][1]["deathT"] == "inf");
    CHECK(j["points"][0]["multiplicity"] == 1);
    CHECK(j["line"]["dir"] == Json::parse(R"(["1","1"])"));

    const auto oracle = run({"fiber", data("f1.ocf"), "--base", "1,0", "--dir", "1,1", "--oracle"});
    CHECK(oracle.code == kExitOk);
    CHECK(Json::parse(oracle.out)["oracle"] == "agree");

    const auto text = run({"fiber", data("f1.ocf"), "--base", "1,0", "--dir", "1,1", "--dim", "0,1",
                           "--format", "text"});
    CHECK(text.code == kExitOk);
    CHECK_FALSE(text.out.empty());
}

TEST_CASE("critical on F1") {
    const auto r = run({"critical", data("f1.ocf")});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j["C"].size() == 3);
    CHECK(j["Cbar"] == j["C"]);
    CHECK(j["criticalCells"].size() == 3);
}

TEST_CASE("rank on F1") {
    auto r = run({"rank", data("f1.ocf"), "--u", "1/2,1/2", "--v", "2,2", "--dim", "0"});
    REQUIRE(r.code == kExitOk);
    CHECK(Json::parse(r.out)["rank"] == 1);
    r = run({"rank", data("f1.ocf"), "--u", "1/2,1/2", "--v", "2,2", "--dim", "0", "--format", "text"});
    CHECK(r.out == "1\n");
    CHECK(run({"rank", data("f1.ocf"), "--u", "2,2", "--v", "1,1", "--dim", "0"}).code == kExitUsage);
    CHECK(run({"rank", data("f1.ocf"), "--u", "0.5,1", "--v", "2,2", "--dim", "0"}).code == kExitUsage);
}

TEST_CASE("validate") {
    auto r = run({"validate", data("f4.ocf"), "--dgvf", data("f4.dgvf")});
    CHECK(r.code == kExitOk);
    auto j = Json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["dgvf"]["acyclic"] == true);

    r = run({"validate", data("f4.ocf"), "--dgvf", data("f4_matched_twice.dgvf")});
    CHECK(r.code == kExitValidation);
    CHECK(Json::parse(r.out)["dgvf"]["matchingViolations"].size() == 1);

    r = run({"validate", data("missing_face.ocf")});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(run({"validate", data("not_monotone.ocf")}).code == kExitValidation);
    CHECK(run({"validate", data("no_such_file.ocf")}).code == kExitValidation);
}

TEST_CASE("dgvf output validates") {
    const auto r = run({"dgvf", data("f4.ocf")});
    REQUIRE(r.code == kExitOk);
    CHECK_FALSE(r.out.empty());
    const std::string path = "cli_test_generated.dgvf";
    {
        std::ofstream(path) << r.out;
    }
    CHECK(run({"validate", data("f4.ocf"), "--dgvf", path}).code == kExitOk);
    const auto crit = run({"critical", data("f4.ocf"), "--dgvf", path});
    CHECK(Json::parse(crit.out)["criticalCells"].size() <= 2);
    std::remove(path.c_str());
}

TEST_CASE("classify") {
    const auto a = run({"classify", data("f1.ocf"), "--base", "1,0", "--dir", "1,1", "--format", "text"});
    const auto b = run({"classify", data("f1.ocf"), "--base", "1,0", "--dir", "2,1", "--format", "text"});
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.size() == 17);
}

TEST_CASE("usage errors") {
    auto r = run({"fiber", data("f1.ocf"), "--base", "1,0", "--dir", "1,0"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("direction must be strictly positive") != std::string::npos);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"fiber", data("f1.ocf"), "--base", "1,0"}).code == kExitUsage);
    CHECK(run({"fiber", data("f1.ocf"), "--base", "1,0,0", "--dir", "1,1,1"}).code == kExitUsage);
    CHECK(run({"critical", data("f1.ocf"), "--format", "xml"}).code == kExitUsage);
    CHECK(run({"critical"}).code == kExitUsage);
    CHECK(run({"help"}).code == kExitOk);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"critical", data("f4.ocf")},
        {"fiber", data("f4.ocf"), "--base", "0,-1", "--dir", "1,3"},
        {"dgvf", data("f4.ocf")},
        {"rank", data("f1.ocf"), "--u", "0,0", "--v", "3,3", "--dim", "0"}};
    for (const auto& c : commands) {
        const auto first = run(c);
        CHECK(first.code == kExitOk);
        CHECK(run(c).out == first.out);
    }
}

TEST_CASE("closure cap from the environment") {
    ::setenv("MF_CBAR_CAP", "2", 1);
    const auto r = run({"critical", data("f1.ocf")});
    ::unsetenv("MF_CBAR_CAP");
    CHECK(r.code == kExitValidation);
    CHECK(run({"critical", data("f1.ocf")}).code == kExitOk);
}
