#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cli.hpp"

namespace {

const std::string kData = GIRREG_TEST_DATA;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = girreg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name)
{
    return kData + "/" + name;
}

}  // namespace

TEST_CASE("sg on two triangles")
{
    const auto r = run({"sg", "--graph", data("2k3.edges")});
    CHECK(r.code == 0);
    CHECK(r.out == "n=6, lower=7, upper=7, constructed: Z_7 ok\ns_g = 7\n");
}

TEST_CASE("sg with the exhaustive oracle")
{
    const auto r = run({"sg", "--graph", data("2k3.edges"), "--exact"});
    CHECK(r.code == 0);
    CHECK(r.out.find("exact: s_g=7, rejected orders: 6 (Z_2xZ_3 fails)") != std::string::npos);
}

TEST_CASE("sg reports a violated hypothesis")
{
    const auto r = run({"sg", "--graph", data("c6k3.edges")});
    CHECK(r.code == 2);
    CHECK(r.err.find("hypothesis violated") != std::string::npos);
}

TEST_CASE("kval")
{
    auto r = run({"kval", "--graph", data("c6k3.edges")});
    CHECK(r.code == 0);
    CHECK(r.out == "n=9, k=9 (exact), constructed: Z_9 ok\n");
    r = run({"kval", "--graph", data("k13k3.edges")});
    CHECK(r.code == 2);
}

TEST_CASE("partition")
{
    auto r = run({"partition", "--t", "7", "--triples", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "7 1 6\n2 5\n3 4\n");
    r = run({"partition", "--t", "8", "--triples", "1"});
    CHECK(r.code == 2);
    r = run({"partition", "--t", "7", "--triples", "2", "--zero-free"});
    CHECK(r.code == 0);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--graph", data("k3.edges"), "--labeling", data("k3_zero.labeling")});
    CHECK(r.code == 1);
    CHECK(r.out == "collision: vertices 0,1 weight 0\n");
    r = run({"verify", "--graph", data("k3.edges"), "--labeling", data("k3_good.labeling")});
    CHECK(r.code == 0);
    CHECK(r.out == "ok: 3 distinct weights over Z_3\n");
    r = run({"verify", "--graph", data("k3.edges"), "--labeling", data("k3_good.labeling"), "--group",
             "Z5"});
    CHECK(r.code == 2);
}

TEST_CASE("label then verify")
{
    for (const auto& [graph, group] : std::vector<std::pair<std::string, std::string>>{
             {"2k3.edges", "Z7"}, {"c4k3.edges", "Z7"}, {"c4k3.edges", "Z4xZ2"}}) {
        const auto lab = run({"label", "--graph", data(graph), "--group", group});
        if (group == "Z4xZ2") {
            CHECK(lab.code == 2);
            continue;
        }
        REQUIRE(lab.code == 0);
        const std::string path = "girreg_cli_roundtrip.labeling";
        std::ofstream(path) << lab.out;
        const auto v = run({"verify", "--graph", data(graph), "--labeling", path});
        CHECK(v.code == 0);
        std::remove(path.c_str());
    }
    const auto c = run({"label", "--graph", data("c6k3.edges"), "--cyclic-odd", "11"});
    CHECK(c.code == 0);
    CHECK(c.out.find("ok: 9 distinct weights") != std::string::npos);
    CHECK(run({"label", "--graph", data("k13k3.edges"), "--cyclic-odd", "7"}).code == 2);
    CHECK(run({"label", "--graph", data("k3.edges")}).code == 2);
}

TEST_CASE("oracle")
{
    auto r = run({"oracle", "--graph", data("k3.edges"), "--order", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Z_3: irregular labeling found\n", 0) == 0);
    r = run({"oracle", "--graph", data("2k3.edges"), "--order", "6"});
    CHECK(r.code == 1);
    CHECK(r.out == "Z_2xZ_3: no irregular labeling\n");
    r = run({"oracle", "--graph", data("k6.edges"), "--order", "7"});
    CHECK(r.code == 3);
}

TEST_CASE("bad input")
{
    CHECK(run({"sg", "--graph", data("bad.edges")}).code == 2);
    CHECK(run({"sg", "--graph", data("missing.edges")}).code == 2);
    CHECK(run({"frobnicate"}).code != 0);
}
