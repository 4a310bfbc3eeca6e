#include <doctest.h>

#include "dgloc/cli.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace dgloc;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "dgloc");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DGLOC_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("usage errors exit 1")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"tangent"}).code == kExitUsage);
    CHECK(run({"tangent", "--space", "torus"}).code == kExitUsage);
    CHECK(run({"tangent", "--space", "torus", "--r", "0"}).code == kExitUsage);
    CHECK(run({"tangent", "--space", "torus", "--r", "1", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"tangent", "--space", "simplex:x", "--r", "1"}).code == kExitUsage);
    CHECK(run({"tangent", "--space", data("missing.space"), "--r", "1"}).code == kExitUsage);
    CHECK(run({"tangent", "--space", "torus", "--r", "1", "--basepoint", "nowhere"}).code == kExitUsage);
    CHECK(run({"tangent", "--space", "torus", "--connection", data("torus_diag.conn"), "--r", "1"}).code ==
          kExitUsage);
}

TEST_CASE("validate")
{
    CHECK(run({"validate", "--space", "sphere"}).code == kExitOk);
    CHECK(run({"validate", "--space", data("torus.space")}).code == kExitOk);
    const auto broken = run({"validate", "--space", data("broken_torus.space"), "--format", "json"});
    CHECK(broken.code == kExitInvariant);
    const auto j = json::parse(broken.out);
    CHECK(j["valid"] == false);
    CHECK(j["simplex"] == "L");
}

TEST_CASE("spaces lists the built-ins")
{
    const auto r = run({"spaces", "--format", "json"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out).size() == builtin_spaces().size());
}

TEST_CASE("tangent: human and json agree")
{
    const auto human = run({"tangent", "--space", "torus", "--r", "2"});
    const auto machine = run({"tangent", "--space", "torus", "--r", "2", "--format", "json"});
    REQUIRE(human.code == kExitOk);
    REQUIRE(machine.code == kExitOk);
    CHECK(human.out.find("H^0 = 8\nH^1 = 4\n") != std::string::npos);
    const auto j = json::parse(machine.out);
    CHECK(j["dims"] == json::array({8, 4}));
    CHECK(j["gauge_kernel_dim"] == 0);
    CHECK(j["checks"]["euler_consistent"] == true);
}

TEST_CASE("tangent from files")
{
    const auto r = run({"tangent", "--space", data("torus.space"), "--connection", data("torus_diag.conn"),
                        "--format", "json", "--prequotient"});
    REQUIRE(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["dims"] == json::array({6, 2}));
    CHECK(j.contains("prequotient_dims"));
}

TEST_CASE("non-flat connection exits 3 and names the triangle")
{
    const auto r = run({"tangent", "--space", data("torus.space"), "--connection", data("torus_nonflat.conn")});
    CHECK(r.code == kExitNonFlat);
    CHECK(r.err.find("L") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"tangent", "--space", "sphere", "--r", "2", "--format", "json", "--bases"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> check{"resolution-check", "--n", "2", "--r", "2", "--seed", "3", "--format", "json"};
    const auto a = run(check), b = run(check);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
}

TEST_CASE("resolution-check")
{
    const auto r = run({"resolution-check", "--n", "2", "--r", "1", "--format", "json"});
    CHECK(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(run({"resolution-check", "--n", "2"}).code == kExitUsage);
    CHECK(run({"resolution-check", "--n", "-1", "--r", "1"}).code == kExitUsage);
}

TEST_CASE("bracket")
{
    const auto r = run({"bracket", "--space", "torus", "--r", "1", "--format", "json"});
    CHECK(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["laws"]["jacobi"] == true);
    CHECK(run({"bracket", "--space", "sphere", "--r", "2"}).code == kExitOk);
}

TEST_CASE("invariance")
{
    const auto same = run({"invariance", "--space", "simplex:2", "--other-space", "simplex:0", "--r", "2"});
    CHECK(same.code == kExitOk);
    const auto different = run({"invariance", "--space", "torus", "--other-space", "sphere", "--r", "1"});
    CHECK(different.code == kExitInvariant);
}

TEST_CASE("suite runs a single criterion")
{
    const auto r = run({"suite", "--criterion", "4", "--format", "json"});
    CHECK(r.code == kExitOk);
    const auto j = json::parse(r.out);
    REQUIRE(j["criteria"].size() == 1);
    CHECK(j["criteria"][0]["id"] == 4);
    CHECK(run({"suite", "--criterion", "11"}).code == kExitUsage);
}
