#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "polyexp/cli.hpp"
#include "polyexp/error.hpp"

using namespace polyexp;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex parsing") {
    CHECK(cli::parse_complex("-8") == Complex(-8.0, 0.0));
    CHECK(cli::parse_complex("1.5-2i") == Complex(1.5, -2.0));
    CHECK(cli::parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(cli::parse_complex("2e-3i") == Complex(0.0, 2e-3));
    CHECK(cli::parse_complex("1e-2+3e+1i") == Complex(1e-2, 30.0));
    CHECK(cli::parse_complex(" +3 ") == Complex(3.0, 0.0));
    CHECK_THROWS_AS(cli::parse_complex("abc"), ParseError);
    CHECK_THROWS_AS(cli::parse_complex(""), ParseError);
    CHECK_THROWS_AS(cli::parse_complex("1+2"), ParseError);
}

TEST_CASE("eval subcommand") {
    auto r = run_cli({"eval", "--fn", "ELi", "--index", "2,1", "--z", "-8", "--tol", "1e-9", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "polyexp/1");
    CHECK(j["method"] == "Relation");
    CHECK(j["value"]["re"].get<double>() == doctest::Approx(-0.1294906320401248).epsilon(1e-12));
    CHECK(j["meets_tol"] == true);
    // 17 significant digits
    CHECK(r.out.find("-0.12949063204012") != std::string::npos);

    auto far = run_cli({"eval", "--fn", "ELi", "--index", "1", "--z=-30"});
    CHECK(far.code == 0);
    CHECK(nlohmann::json::parse(far.out)["method"] == "Asymptotic");

    auto csv = run_cli({"--format", "csv", "eval", "--fn", "EL", "--index", "1", "--z", "1+1i"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("fn,index,z_re", 0) == 0);

    auto human = run_cli({"eval", "--fn", "el", "--index", "1,1", "--z", "0.5", "--format", "human"});
    CHECK(human.code == 0);
    CHECK(human.out.find("el_{1,1}") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"eval", "--fn", "ELi", "--index", "0,1", "--z", "-1"}).code == 2);
    CHECK(run_cli({"eval", "--fn", "ELi", "--index", "1", "--z", "x"}).code == 2);
    CHECK(run_cli({"eval", "--fn", "Li", "--index", "1", "--z", "-1"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    auto zero = run_cli({"eval", "--fn", "ELi", "--index", "1", "--z", "0"});
    CHECK(zero.code == 3);
    CHECK(zero.err.find("singularity") != std::string::npos);
    CHECK(run_cli({"eval", "--fn", "ELi", "--index", "1", "--z", "2", "--method", "quadrature"}).code == 3);
    // optimal truncation at |z| = 3 is far from 1e-10
    CHECK(run_cli({"eval", "--fn", "ELi", "--index", "1", "--z", "-3", "--method", "asymptotic"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("coeffs subcommand") {
    auto r = run_cli({"coeffs", "--index", "1,1", "--N", "10"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 10);
    CHECK(j["all_match"] == true);
    CHECK(j["rows"][0]["numerator"] == "-1");
    CHECK(j["rows"][2]["numerator"] == "-2");
    CHECK(j["rows"][2]["denominator"] == "3");
    auto csv = run_cli({"coeffs", "--index", "2", "--N", "4", "--format", "csv"});
    CHECK(csv.out == "j,numerator,denominator,closed_numerator,closed_denominator,match\n"
                     "1,0,1,0,1,true\n2,1,1,1,1,true\n3,3,1,3,1,true\n4,11,1,11,1,true\n");
    // deterministic
    CHECK(run_cli({"coeffs", "--index", "1,1", "--N", "10"}).out == r.out);
}

TEST_CASE("constants subcommand") {
    auto r = run_cli({"constants", "--max-weight", "3"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    bool saw = false;
    for (const auto& e : j["entries"])
        if (e["name"] == "cLi(1,2)") {
            saw = true;
            CHECK(e["value"].get<double>() == doctest::Approx(1.2020569031595942).epsilon(1e-15));
        }
    CHECK(saw);
}

TEST_CASE("identities and verify subcommands") {
    auto r = run_cli({"identities", "--alpha", "--max", "6"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["passed"] == 42);
    auto a = run_cli({"identities", "--appendix", "--m-max", "8", "--weight-max", "3", "--format", "human"});
    CHECK(a.code == 0);
    CHECK(a.out.find("FAIL") == std::string::npos);
    auto v = run_cli({"verify", "--max-weight", "2"});
    CHECK(v.code == 0);
}
