#include <catch2/catch_amalgamated.hpp>

#include "stackcalc/expr.hpp"

using namespace stackcalc;

TEST_CASE("prefix grammar parses coordinates, parameters and integers")
{
    auto chart = Chart::make({"x", "y"}, {"t"});
    ExprParser p(chart, {"l0", "l1"});
    ChartFunction x = ChartFunction::affine_coord(chart, "x");
    ChartFunction y = ChartFunction::affine_coord(chart, "y");
    ChartFunction c = ChartFunction::cosine(chart, "t");
    ChartFunction s = ChartFunction::sine(chart, "t");

    CHECK(p.parse("x") == x);
    CHECK(p.parse("(+ x y)") == x + y);
    CHECK(p.parse("(- x y)") == x - y);
    CHECK(p.parse("(- x)") == -x);
    CHECK(p.parse("(* 2 x x)") == Scalar(2) * (x * x));
    CHECK(p.parse("(* -3 cos_t sin_t)") == Scalar(-3) * (c * s));
    CHECK(p.parse("(+ (* l0 x) (* l1 y))") ==
          Scalar::parameter("l0") * x + Scalar::parameter("l1") * y);
    CHECK(p.parse("0").is_zero());
    // the rewrite applies at parse time
    CHECK(p.parse("(* sin_t sin_t)") == ChartFunction::one(chart) - c * c);
}

TEST_CASE("unknown symbols are rejected with the symbol name")
{
    auto chart = Chart::make({"x"});
    ExprParser p(chart, {});
    REQUIRE_THROWS_WITH(p.parse("(+ x q)"), Catch::Matchers::ContainsSubstring("q"));
    REQUIRE_THROWS_WITH(p.parse("(? x)"), Catch::Matchers::ContainsSubstring("?"));
    REQUIRE_THROWS(p.parse("(+ x"));
}

TEST_CASE("parse -> print -> parse is the identity on normal forms")
{
    auto chart = Chart::make({"x", "y"}, {"t"});
    ExprParser p(chart, {"l0", "l1"});
    std::vector<std::string> cases = {
        "x",
        "0",
        "-7",
        "(+ x y)",
        "(- (* 2 x x) y)",
        "(* sin_t sin_t sin_t)",
        "(+ (* l0 l0 x) (* -2 l1 cos_t) 5)",
        "(- (* x y sin_t))",
    };
    for (const auto& text : cases) {
        ChartFunction f = p.parse(text);
        std::string printed = print_expression(f);
        ChartFunction g = p.parse(printed);
        INFO(text << " -> " << printed);
        CHECK(f == g);
    }
}

TEST_CASE("printing covers sign and unit-coefficient corner cases")
{
    auto chart = Chart::make({"x"});
    ExprParser p(chart, {});
    ChartFunction x = ChartFunction::affine_coord(chart, "x");
    CHECK(p.parse(print_expression(-x)) == -x);
    CHECK(p.parse(print_expression(x - ChartFunction::one(chart))) ==
          x - ChartFunction::one(chart));
    CHECK(print_expression(ChartFunction::zero(chart)) == "0");
}
