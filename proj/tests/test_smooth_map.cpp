#include <catch2/catch_amalgamated.hpp>

#include "stackcalc/smooth_map.hpp"

using namespace stackcalc;

TEST_CASE("pullback is substitution: pair groupoid source map")
{
    auto m = Chart::make({"z"});
    auto g = Chart::make({"x", "y"});
    // s(x,y) = y
    SmoothMap s = SmoothMap::coordinate_map(g, m, {{"z", "y"}});
    ChartFunction z = ChartFunction::affine_coord(m, "z");
    ChartFunction y = ChartFunction::affine_coord(g, "y");
    CHECK(s.pullback(z * z) == y * y);
}

TEST_CASE("circle multiplication pulls back cosine to the angle-addition formula")
{
    auto g = Chart::make({}, {"t"});
    auto g2 = Chart::make({}, {"t1", "t2"});
    ChartFunction c1 = ChartFunction::cosine(g2, "t1"), s1 = ChartFunction::sine(g2, "t1");
    ChartFunction c2 = ChartFunction::cosine(g2, "t2"), s2 = ChartFunction::sine(g2, "t2");
    SmoothMap mult(g2, g, {}, {{c1 * c2 - s1 * s2, s1 * c2 + c1 * s2}});
    CHECK(mult.pullback(ChartFunction::cosine(g, "t")) == c1 * c2 - s1 * s2);
    CHECK(mult.pullback(ChartFunction::sine(g, "t")) == s1 * c2 + c1 * s2);
}

TEST_CASE("unit map of the pair groupoid kills x - y")
{
    auto m = Chart::make({"z"});
    auto g = Chart::make({"x", "y"});
    SmoothMap u = SmoothMap::coordinate_map(m, g, {{"x", "z"}, {"y", "z"}});
    ChartFunction f = ChartFunction::affine_coord(g, "x") - ChartFunction::affine_coord(g, "y");
    CHECK(u.pullback(f).is_zero());
}

TEST_CASE("pullback is a ring homomorphism")
{
    auto m = Chart::make({"z"}, {"w"});
    auto g = Chart::make({"x"}, {"t"});
    // phi: z = x^2, w = t (coordinate circular assignment)
    SmoothMap phi(g, m, {ChartFunction::affine_coord(g, "x").pow(2)},
                  {{ChartFunction::cosine(g, "t"), ChartFunction::sine(g, "t")}});
    ChartFunction f = ChartFunction::affine_coord(m, "z") * ChartFunction::cosine(m, "w");
    ChartFunction h = ChartFunction::sine(m, "w") + ChartFunction::one(m);
    CHECK(phi.pullback(f * h) == phi.pullback(f) * phi.pullback(h));
    CHECK(phi.pullback(f + h) == phi.pullback(f) + phi.pullback(h));
}

TEST_CASE("pullback respects composition on generators")
{
    auto a = Chart::make({"u"});
    auto b = Chart::make({"v"});
    auto c = Chart::make({"w"});
    ChartFunction u = ChartFunction::affine_coord(a, "u");
    ChartFunction v = ChartFunction::affine_coord(b, "v");
    SmoothMap phi(a, b, {u * u + Scalar(1) * ChartFunction::one(a)}, {});
    SmoothMap psi(b, c, {v * v * v}, {});
    SmoothMap comp = psi.after(phi);
    for (std::size_t g = 0; g < c->n_generators(); ++g) {
        ChartFunction gen = ChartFunction::generator(c, g);
        CHECK(comp.pullback(gen) == phi.pullback(psi.pullback(gen)));
    }
}

TEST_CASE("circular images must satisfy p^2 + q^2 = 1")
{
    auto g = Chart::make({"x"});
    auto m = Chart::make({}, {"w"});
    ChartFunction x = ChartFunction::affine_coord(g, "x");
    CHECK_THROWS(SmoothMap(g, m, {}, {{x, x}}));
    // and a valid algebraic circle point passes
    // (c, s) = ((1-x^2)/(1+x^2), 2x/(1+x^2)) is not polynomial; use (1, 0)
    SmoothMap ok(g, m, {}, {{ChartFunction::one(g), ChartFunction::zero(g)}});
    CHECK(ok.pullback(ChartFunction::cosine(m, "w")) == ChartFunction::one(g));
}

TEST_CASE("chart mismatch is rejected")
{
    auto m = Chart::make({"z"});
    auto g = Chart::make({"x", "y"});
    SmoothMap s = SmoothMap::coordinate_map(g, m, {{"z", "y"}});
    ChartFunction wrong = ChartFunction::affine_coord(g, "x");
    CHECK_THROWS(s.pullback(wrong));
}
