#include "../common.hpp"

#include <doctest.h>

#include <set>

using namespace efm;
using namespace efm::testing;

namespace {

struct Golden {
    const char* label;
    Weight zeta;
    std::pair<int, int> rect1, rect2;  // (width, height) as printed
    Partition xi;
    int N;
    Rational mu;
};

const std::vector<Golden> goldens = {
    {"1", Wi({0, -1, -2, 1, -5, -6, -4}), {4, 3}, {3, 4}, {5, 5, 2, 2, 2, 1, 0}, 7, Rational(1, 7)},
    {"2", Wi({-1, 1, 0, -2, -1, -5, -3}), {2, 2}, {5, 3}, {6, 3, 2, 1, 0}, 5, Rational(3, 5)},
    {"3a", Wi({-1, 2, 1, 0, 3, 2, 1}), {2, 1}, {3, 4}, {5, 2, 0, 0, 0}, 5, Rational(-1, 5)},
    {"3b", Wi({0, -2, -1, 1, 2, 0, 1}), {1, 1}, {3, 5}, {4, 2, 1, 1, 1, 0}, 6, Rational(-1, 3)},
    {"4a", Wi({4, 3, 2, -2, 1, 0, -1}), {2, 1}, {6, 3}, {8, 5, 0, 0}, 4, Rational(1)},
    {"4b", Wi({0, -1, 2, 1, -2, 0, -1}), {1, 1}, {5, 3}, {6, 2, 1, 0}, 4, Rational(1)},
    {"5", Wi({-2, -1, -5, -6, -3, -4, -2}), {3, 3}, {5, 3}, {6, 4, 4, 2, 1, 0}, 6, Rational(1, 3)},
};

// The character list of the H_3(1,-6) module generated by [1,2,-3].
const std::vector<Weight> non_image = {Wi({-3, -2, -1}), Wi({-3, -2, 1}), Wi({-3, 1, -2}), Wi({-3, 1, 2}),
                                       Wi({1, -3, -2}),  Wi({1, -3, 2}),  Wi({1, 2, -3})};

} // namespace

TEST_CASE("fixed coordinates")
{
    const Weight z = Wi({-3, -2, 1});
    CHECK_FALSE(is_fixed(z, 1, -2));
    CHECK_FALSE(is_fixed(z, 2, -2));
    CHECK(is_fixed(z, 3, -2));

    const Weight m = Wi({0, -1, -2, 1, -5, -6, -4});
    CHECK(is_fixed(m, 1, -2));
    CHECK(is_fixed(m, 4, -2));
    CHECK(is_minimal(m, -2));
    CHECK_FALSE(is_minimal(Wi({-2, 2, 4, 5, 6, -3, 1}), -2));
}

TEST_CASE("corners")
{
    CHECK(corners_of(Wi({0, -1, -2, 1, -5, -6, -4})) == std::vector<int>{3, 4, 6, 7});
    CHECK(corners_of(W({3})) == std::vector<int>{1});
}

TEST_CASE("corners are southeastern corners of the reconstructed tableau")
{
    for (const auto& g : goldens) {
        const auto r = reconstruct_tableau(g.zeta, -2);
        const auto cells = r.shape.cell_set();
        std::vector<int> se;
        for (int k = 1; k <= r.tableau.n(); ++k) {
            const Cell c = r.tableau.at(k);
            if (!cells.count({c.row + 1, c.col}) && !cells.count({c.row, c.col + 1}))
                se.push_back(k);
        }
        CHECK(corners_of(g.zeta) == se);
    }
}

TEST_CASE("check_properties")
{
    const auto hook21 = make_parameters(3, 1, 2, 2, 2, {2, 1, 0});
    CHECK(check_properties(build_efm_module(hook21).weights, hook21.kappa2()).passed());

    const auto rep = check_properties(non_image, -6);
    CHECK_FALSE(rep.passed());
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().weight_index == 0);
    CHECK(rep.violations.front().property == "property-1");

    const auto eq = check_properties({Wi({1, 1, -1})}, -2);
    REQUIRE(eq.violations.size() == 1);
    CHECK(eq.violations[0].property == "adjacent-equal");

    const auto par = check_properties({W({1, 2})}, -2);
    REQUIRE(par.violations.size() == 1);
    CHECK(par.violations[0].property == "parity");
}

TEST_CASE("minimalize")
{
    const auto m6 = minimalize(Wi({-2, 2, 4, 5, 6, -3, 1}), -2);
    CHECK(m6.result == Wi({-2, 2, -3, 1, -6, -5, -4}));
    CHECK(weyl_act(m6.word, Wi({-2, 2, 4, 5, 6, -3, 1})) == m6.result);

    const auto m7 = minimalize(Wi({0, 4, -1, 6, -2, 5, 1}), -2);
    CHECK(m7.result == Wi({0, -1, -2, 1, -5, -6, -4}));
    CHECK(weyl_act(m7.word, Wi({0, 4, -1, 6, -2, 5, 1})) == m7.result);

    const auto id = minimalize(Wi({0, -1, -2, 1, -5, -6, -4}), -2);
    CHECK(id.result == Wi({0, -1, -2, 1, -5, -6, -4}));
    CHECK(id.word.empty());
}

TEST_CASE("recovery goldens")
{
    for (const auto& g : goldens) {
        CAPTURE(g.label);
        const auto r = recover(g.zeta, -2);
        CHECK(r.trace.case_label == g.label);
        CHECK(r.trace.rect1 == g.rect1);
        CHECK(r.trace.rect2 == g.rect2);
        CHECK(r.params.xi == g.xi);
        CHECK(r.params.N == g.N);
        CHECK(r.params.mu == g.mu);
        CHECK(r.params.p + r.params.q == r.params.N);
        CHECK(r.params.p - r.params.q - r.params.a + r.params.b == -2);
        CHECK(roundtrip_check(g.zeta, -2));
    }
}

TEST_CASE("recovery with half-integer weights")
{
    const auto r = recover(W({1, -5, -7}), -1);
    CHECK(r.params.xi == Partition{4, 2, 0});
    CHECK(r.params.N == 3);
    CHECK(r.params.p - r.params.q - r.params.a + r.params.b == -1);
    CHECK(roundtrip_check(W({1, -5, -7}), -1));

    const auto other = build_efm_module(make_parameters(3, 1, 3, 2, 3, {3, 3, 2, 0}));
    CHECK(sorted(recovered_weights(r.params, 3)) == sorted(other.weights));
}

TEST_CASE("recover rejects invalid input")
{
    for (const auto& z : non_image) {
        try {
            recover(z, -6);
            FAIL("expected PropertyViolation");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PropertyViolation);
        }
    }
    try {
        recover(Wi({-2, 2, 4, 5, 6, -3, 1}), -2);
        FAIL("expected NotMinimal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotMinimal);
    }
}

TEST_CASE("minimalization and recovery over small modules")
{
    for (const auto& params : parameter_grid(4, 2, 3, 5)) {
        SeminormalModule m;
        try {
            m = build_efm_module(params);
        } catch (const Error&) {
            continue;
        }
        CAPTURE(to_string(params.xi));
        const int k2 = params.kappa2();
        const HalfInt half = abs(HalfInt::from_twice(k2));
        const std::set<Weight> all(m.weights.begin(), m.weights.end());
        for (const auto& w : m.weights) {
            const auto mm = minimalize(w, k2);
            CHECK(weyl_act(mm.word, w) == mm.result);
            CHECK(is_minimal(mm.result, k2));
            CHECK(all.count(mm.result) == 1);
            if (!is_minimal(w, k2))
                continue;
            for (int c : corners_of(w)) {
                const HalfInt v = w[c - 1];
                CHECK((v == half || v == -half || v < -half));
            }
            const auto r = recover(w, k2);
            CHECK(sorted(recovered_weights(r.params, params.n)) == sorted(m.weights));
        }
        CHECK(check_properties(m.weights, k2).passed());
    }
}
