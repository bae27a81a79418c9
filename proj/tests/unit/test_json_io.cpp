#include "../common.hpp"
#include "efm/json_io.hpp"

#include <doctest.h>

using namespace efm;
using namespace efm::testing;

TEST_CASE("json shapes and parameters")
{
    const auto params = make_parameters(3, 1, 2, 2, 2, {2, 1, 0});
    const Json j = to_json(params);
    CHECK(j["kappa2"] == -1);
    CHECK(j["mu"] == "0");
    CHECK(j["shift"] == "1/2");
    CHECK(to_json(minimal_shape(params)).dump() == R"({"outer":[4,2],"inner":[2,1]})");
    CHECK(to_json(W({1, -3, -5})).dump() == R"(["1/2","-3/2","-5/2"])");
    CHECK(to_json(StandardTableau{{{2, 2}, {1, 3}}}).dump() == "[[2,2],[1,3]]");
}

TEST_CASE("parameters from json")
{
    const auto a = parameters_from_json(Json::parse(R"({"n":3,"p":1,"q":2,"a":2,"b":2,"xi":[2,1,0]})"));
    const auto m = parameters_from_json(Json::parse(R"({"n":3,"p":1,"q":2,"mu":"0","xi":[2,1]})"));
    REQUIRE(a);
    REQUIRE(m);
    CHECK(a->a == m->a);
    CHECK(a->b == m->b);
    CHECK_FALSE(parameters_from_json(Json::parse(R"({"n":3,"p":1,"q":2,"mu":"1/2","xi":[2,1]})")));
    CHECK_THROWS_AS(parameters_from_json(Json::parse(R"({"n":3,"p":1})")), Error);
    CHECK_THROWS_AS(parameters_from_json(Json::parse(R"({"n":3,"p":1,"q":2,"mu":0.5})")), Error);
}

TEST_CASE("sparse matrix json")
{
    RationalMatrix m(2, 2);
    m(0, 1) = Rational(-3, 4);
    CHECK(to_json(m).dump() == R"({"rows":2,"cols":2,"entries":[[0,1,"-3/4"]]})");
}

TEST_CASE("fnv1a reference values")
{
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("dot output is deterministic and complete")
{
    const auto params = make_parameters(3, 1, 2, 2, 2, {2, 1, 0});
    const auto g = weight_graph(params);
    const std::string dot = to_dot(g);
    CHECK(dot == to_dot(weight_graph(params)));
    std::size_t nodes = 0, edges = 0;
    for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos)
        (dot.rfind("->", pos) != std::string::npos && dot.rfind("->", pos) > dot.rfind('\n', pos) ? edges : nodes)++;
    CHECK(nodes == 11);
    CHECK(edges == g.edges.size());
}
