#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = a2act::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("strict pipeline runs succeed") {
    for (std::string c : {"sym", "gen", "b"}) {
        auto r = run({"pipeline", "--case", c, "--strict"});
        CHECK(r.code == 0);
        CHECK(r.err.empty());
    }
}

TEST_CASE("json step log") {
    auto r = run({"pipeline", "--case", "sym", "--log", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "sym");
    CHECK(j["steps"][0]["step"] == "sq8");
    CHECK(j["steps"][0]["distinct"] == 496);
    CHECK(j["steps"][1]["distinct"] == 95);
}

TEST_CASE("dictionary output") {
    auto r = run({"pipeline", "--case", "sym", "--dictionary"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("<5, d20, 1>,") != std::string::npos);
    CHECK(r.out.find("<106, a14, a23*a2 + a13*a1 + a13 + a1>") == std::string::npos);
    CHECK(r.out.find("<106, a14, ") != std::string::npos);
}

TEST_CASE("enumerate and self-dual") {
    auto r = run({"enumerate", "--case", "gen", "--what", "sq8", "--format", "json", "--strict"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 100);
    r = run({"self-dual", "--case", "b", "--format", "json", "--strict"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 8);
}

TEST_CASE("point commands") {
    auto r = run({"dual-point", "--case", "sym", "--point", "0,0,0,0,0,0,0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1,1,1,0,0,1,1,0\n");
    r = run({"maps", "--map", "incl", "--point", "0,0,0,0,0,0,0,0,0", "--format", "json"});
    CHECK(r.code == 0);
    r = run({"lift", "--point", "0,1,0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("symmetric lifts: 0") != std::string::npos);
    r = run({"hopf-check", "--profile", "3,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("false", 0) == 0);
    r = run({"moddef", "--case", "sym", "--point", "0,0,0,0,0,0,0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("64\n", 0) == 0);
    r = run({"literature", "--strict"});
    CHECK(r.code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"pipeline", "--case", "nope"}).code == 2);
    CHECK(run({"dual-point", "--case", "sym", "--point", "0,1"}).code == 2);
    CHECK(run({"hopf-check", "--profile", "3,x"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
