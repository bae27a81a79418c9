#include "efm/json_io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(EFM_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string hook21 = "--n 3 --p 1 --q 2 --a 2 --b 2 --xi 2,1,0";

} // namespace

TEST_CASE("cli decompose")
{
    const auto r = run("decompose " + hook21);
    REQUIRE(r.code == 0);
    const auto j = efm::Json::parse(r.out);
    CHECK(j["dimension"] == 11);
    CHECK(j["okada"].size() == 3);
    CHECK(run("decompose " + hook21).out == r.out);

    const auto zero = run("decompose --n 3 --p 1 --q 2 --mu 1/3 --xi 2,1,0");
    REQUIRE(zero.code == 0);
    CHECK(efm::Json::parse(zero.out)["dimension"] == 0);
}

TEST_CASE("cli exit codes")
{
    CHECK(run("decompose --n 3 --p 2 --q 1 --a 2 --b 2").code == 2);
    CHECK(run("decompose --n 3 --p 1 --q 2 --a 2 --b 2 --xi 2.5").code == 2);
    CHECK(run("verify " + hook21).code == 0);
    CHECK(run("verify " + hook21 + " --mutate 1:0:0").code == 5);
    CHECK(run("recover --weight [-3,-2,-1] --kappa2 -6").code == 4);
    // kappa2 = 0 with zeta_n = 0 at the cell (2,1)
    CHECK(run("verify --n 2 --p 1 --q 2 --a 0 --b 1").code == 3);
}

TEST_CASE("cli sweep is byte-identical across runs")
{
    const std::string args = std::string("sweep --verify ") + EFM_DATA_DIR + "/sweep.jsonl";
    const auto first = run(args);
    REQUIRE(first.code == 0);
    CHECK(run(args).out == first.out);
    std::size_t lines = 0;
    for (char c : first.out)
        lines += c == '\n';
    CHECK(lines == 6);
}

TEST_CASE("cli verify reports")
{
    const auto j = efm::Json::parse(run("verify " + hook21).out);
    CHECK(j["irreducibility"]["irreducible"] == true);
    const auto bad = efm::Json::parse(run("verify " + hook21 + " --mutate 1:0:0").out);
    bool located = false;
    for (const auto& c : bad["relations"])
        located |= c["passed"] == false && c.contains("where");
    CHECK(located);
}

TEST_CASE("cli graph")
{
    const auto dot = run("graph " + hook21);
    REQUIRE(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    const auto j = efm::Json::parse(run("graph --format json " + hook21).out);
    CHECK(j["nodes"].size() == 11);
}

TEST_CASE("cli recover")
{
    const auto j = efm::Json::parse(run("recover --weight [0,-1,-2,1,-5,-6,-4] --kappa2 -2").out);
    CHECK(j["trace"]["case"] == "1");
    CHECK(j["params"]["mu"] == "1/7");
    const auto m = efm::Json::parse(run("recover --weight [0,4,-1,6,-2,5,1] --kappa2 -2 --minimalize").out);
    CHECK(m["params"]["N"] == 7);
}
