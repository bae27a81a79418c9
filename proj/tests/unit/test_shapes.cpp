#include "../common.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace efm;
using namespace efm::testing;

namespace {

const EfmParameters hook21 = make_parameters(3, 1, 2, 2, 2, {2, 1, 0});

std::set<Cell> cells(std::initializer_list<Cell> cs) { return std::set<Cell>(cs); }

} // namespace

TEST_CASE("content is col minus row")
{
    CHECK(content({1, 1}) == 0);
    CHECK(content({3, 1}) == -2);
    CHECK(content({2, 5}) == 3);
}

TEST_CASE("partition equality ignores trailing zeros")
{
    CHECK(Partition{2, 1, 0} == Partition{2, 1});
    CHECK(Partition{2, 1}.length() == 2);
    CHECK(Partition{3, 2, 2}.size() == 7);
    CHECK_FALSE(Partition{1, 2}.is_valid());
    CHECK(Partition{4, 2}.contains({2, 1}));
    CHECK_FALSE(Partition{4, 2}.contains({2, 2, 1}));
}

TEST_CASE("derived parameters")
{
    CHECK(hook21.N() == 3);
    CHECK(hook21.mu() == 0);
    CHECK(hook21.kappa2() == -1);
    CHECK(hook21.shift() == HalfInt::from_twice(1));

    const auto p = make_parameters(7, 3, 4, 4, 3, {5, 5, 2, 2, 2, 1, 0});
    CHECK(p.mu() == Rational(1, 7));
    CHECK(p.kappa2() == -2);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(make_parameters(3, 2, 1, 2, 2, {}), Error);    // p > q
    CHECK_THROWS_AS(make_parameters(4, 1, 2, 2, 2, {2, 1}), Error);  // |xi|+n != pa+qb
    CHECK_THROWS_AS(make_parameters(1, 1, 2, 1, 1, {1, 1, 1}), Error);  // xi_N != 0
}

TEST_CASE("resolve_parameters from mu")
{
    auto p = resolve_parameters(3, 1, 2, Rational(0), {2, 1, 0});
    REQUIRE(p);
    CHECK(p->a == 2);
    CHECK(p->b == 2);
    CHECK_FALSE(resolve_parameters(3, 1, 2, Rational(1, 2), {2, 1, 0}));
    CHECK_FALSE(resolve_parameters(2, 1, 2, Rational(0), {2, 1, 0}));
}

TEST_CASE("minimal shape")
{
    SUBCASE("xi = (2,1), N = 3")
    {
        const SkewShape s = minimal_shape(hook21);
        CHECK(s.outer == Partition{4, 2});
        CHECK(s.inner == Partition{2, 1});
        CHECK(s.cell_set() == cells({{1, 3}, {1, 4}, {2, 2}}));
    }
    SUBCASE("two-rectangle shape with xi = (3,3,2)")
    {
        const SkewShape s = minimal_shape(make_parameters(3, 1, 3, 2, 3, {3, 3, 2, 0}));
        CHECK(s.outer == Partition{5, 3, 3});
        CHECK(s.inner == Partition{3, 3, 2});
        CHECK(s.size() == 3);
    }
    SUBCASE("empty xi gives the two-rectangle union")
    {
        for (int p = 1; p <= 2; ++p)
            for (int q = p; q <= 3; ++q)
                for (int a = 0; a <= 2; ++a)
                    for (int b = 0; b <= 2; ++b) {
                        const int n = p * a + q * b;
                        if (n == 0)
                            continue;
                        std::vector<int> nu(p, a + b);
                        nu.insert(nu.end(), q - p, b);
                        const SkewShape s = minimal_shape(make_parameters(n, p, q, a, b, {}));
                        CHECK(s.outer == Partition(nu));
                        CHECK(s.inner.size() == 0);
                    }
    }
}

TEST_CASE("gamma moves")
{
    const SkewShape s0 = minimal_shape(hook21);
    const SkewShape s1 = gamma_move(s0, {1, 4}, hook21);
    CHECK(s1.cell_set() == cells({{1, 3}, {2, 2}, {3, 1}}));
    const SkewShape s2 = gamma_move(s1, {1, 3}, hook21);
    CHECK(s2.cell_set() == cells({{2, 2}, {3, 1}, {3, 2}}));

    CHECK(movable_corners(s2, hook21).empty());
    try {
        gamma_move(s2, {3, 2}, hook21);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MoveNotApplicable);
    }
    try {
        gamma_move(s0, {1, 3}, hook21);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACorner);
    }
}

TEST_CASE("shape family")
{
    const auto fam = shape_family(hook21);
    REQUIRE(fam.size() == 3);
    CHECK(std::is_sorted(fam.begin(), fam.end()));
    std::vector<Partition> outers;
    for (const auto& s : fam) {
        CHECK(s.inner == Partition{2, 1});
        outers.push_back(s.outer);
    }
    CHECK(outers == std::vector<Partition>{{2, 2, 2}, {3, 2, 1}, {4, 2}});

    // no legal corner: singleton family
    const auto single = make_parameters(2, 1, 2, 0, 1, {});
    CHECK(movable_corners(minimal_shape(single), single).empty());
    CHECK(shape_family(single).size() == 1);
}

TEST_CASE("shape family is closed and cell counts are preserved")
{
    for (const auto& params : parameter_grid(4, 2, 3, 5)) {
        std::vector<SkewShape> fam;
        try {
            fam = shape_family(params);
        } catch (const Error&) {
            continue;
        }
        const std::set<SkewShape> members(fam.begin(), fam.end());
        CHECK(members.size() == fam.size());
        for (const auto& s : fam) {
            CHECK(static_cast<int>(s.size()) == params.n);
            for (Cell c : movable_corners(s, params))
                CHECK(members.count(gamma_move(s, c, params)) == 1);
            // complementary rows of the outer shape sum to a+b
            for (int i = 1; i <= params.N(); ++i) {
                const int j = params.N() - i + 1;
                if (s.outer[i] > 0 && s.outer[j] > 0 && i <= params.p)
                    CHECK(s.outer[i] + s.outer[j] == params.a + params.b);
            }
        }
        // the minimal shape sits inside the union of the two rectangles
        for (Cell c : minimal_shape(params).cells()) {
            CHECK(c.col <= params.a + params.b);
            CHECK((c.row <= params.q && (c.col <= params.b || c.row <= params.p)));
        }
    }
}

TEST_CASE("okada expansion")
{
    CHECK(okada_expand(2, 1, 2, 2) == std::vector<Partition>{{2, 2, 2}, {3, 2, 1}, {4, 2, 0}});
    CHECK(okada_expand(0, 2, 0, 3) == std::vector<Partition>{{}});
    CHECK(okada_expand(1, 1, 1, 2) == std::vector<Partition>{{1, 1, 1}, {2, 1, 0}});
    CHECK_THROWS_AS(okada_expand(1, 3, 1, 2), Error);

    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int p = 1; p <= 3; ++p)
                for (int q = p; q <= 3; ++q)
                    for (const auto& nu : okada_expand(a, p, b, q))
                        CHECK(nu.size() == p * a + q * b);
}

TEST_CASE("admissible outer shapes")
{
    CHECK(admissible_outer_shapes(hook21).size() == 3);
    // xi_1 > a + b: nothing contains xi
    const auto params = make_parameters(1, 1, 2, 0, 2, {3, 0, 0});
    CHECK(admissible_outer_shapes(params).empty());
    for (const auto& nu : okada_expand(0, 1, 2, 2))
        CHECK_FALSE(nu.contains(params.xi));
}
