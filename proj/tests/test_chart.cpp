#include <catch2/catch_amalgamated.hpp>

#include "stackcalc/chart.hpp"

using namespace stackcalc;

namespace {

// Independent oracle for the trig normal form: apply the single rewrite
// s^2 -> 1 - c^2 one position at a time until no sine exponent exceeds 1.
// Works on raw term lists, no ChartFunction internals involved.
struct RawTerm {
    ChartMonomial mono;
    Scalar coeff;
};

std::map<ChartMonomial, Scalar> rewrite_to_fixpoint(const ChartPtr& chart,
                                                    std::vector<RawTerm> work)
{
    std::map<ChartMonomial, Scalar> out;
    while (!work.empty()) {
        RawTerm t = work.back();
        work.pop_back();
        bool reduced = false;
        for (std::size_t i = 0; i < chart->n_circular() && !reduced; ++i) {
            std::size_t si = chart->sin_index(i), ci = chart->cos_index(i);
            if (t.mono[si] >= 2) {
                RawTerm a = t, b = t;
                a.mono[si] -= 2;
                b.mono[si] -= 2;
                b.mono[ci] += 2;
                b.coeff = -b.coeff;
                work.push_back(a);
                work.push_back(b);
                reduced = true;
            }
        }
        if (!reduced) {
            auto it = out.find(t.mono);
            if (it == out.end()) {
                if (!t.coeff.is_zero()) out[t.mono] = t.coeff;
            } else {
                it->second += t.coeff;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::map<ChartMonomial, Scalar> as_plain_map(const ChartFunction& f)
{
    return {f.terms().begin(), f.terms().end()};
}

}  // namespace

TEST_CASE("normalize: s^2 on a circle chart becomes 1 - c^2")
{
    auto circle = Chart::make({}, {"t"});
    ChartFunction s = ChartFunction::sine(circle, "t");
    ChartFunction c = ChartFunction::cosine(circle, "t");
    CHECK(s * s == ChartFunction::one(circle) - c * c);
}

TEST_CASE("normalize: zero pruning on affine charts")
{
    auto chart = Chart::make({"x", "y"});
    ChartFunction x = ChartFunction::affine_coord(chart, "x");
    ChartFunction y = ChartFunction::affine_coord(chart, "y");
    CHECK(x + Scalar(0) * y == x);
    CHECK((x - x).is_zero());
}

TEST_CASE("normalize: s^3 reduces to s - c^2 s (oracle: rewrite to fixpoint)")
{
    auto circle = Chart::make({}, {"t"});
    ChartFunction s = ChartFunction::sine(circle, "t");
    ChartFunction c = ChartFunction::cosine(circle, "t");
    ChartFunction lhs = s * s * s;
    CHECK(lhs == s - c * c * s);

    // oracle route: raw monomial s^3 rewritten step by step
    ChartMonomial m(circle->n_generators(), 0);
    m[circle->sin_index(0)] = 3;
    auto oracle = rewrite_to_fixpoint(circle, {{m, Scalar(1)}});
    CHECK(as_plain_map(lhs) == oracle);
}

TEST_CASE("normalization is idempotent and confluent on random raw terms")
{
    auto chart = Chart::make({"x"}, {"a", "b"});
    std::uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<RawTerm> raw;
        ChartFunction f(chart);
        for (int t = 0; t < 4; ++t) {
            ChartMonomial m(chart->n_generators(), 0);
            for (auto& e : m) e = int(next() % 4);
            Scalar c = Scalar(long(next() % 7) - 3);
            raw.push_back({m, c});
            f.add_term(m, c);
        }
        CHECK(as_plain_map(f) == rewrite_to_fixpoint(chart, raw));
        // idempotence: re-adding the normalized terms reproduces f
        ChartFunction g(chart);
        for (const auto& [m, c] : f.terms()) g.add_term(m, c);
        CHECK(f == g);
        // every sine exponent is 0 or 1
        for (const auto& [m, c] : f.terms())
            for (std::size_t i = 0; i < chart->n_circular(); ++i)
                CHECK(m[chart->sin_index(i)] <= 1);
    }
}

TEST_CASE("ring operations respect equality: (c+s)^2 = 1 + 2cs")
{
    auto circle = Chart::make({}, {"t"});
    ChartFunction s = ChartFunction::sine(circle, "t");
    ChartFunction c = ChartFunction::cosine(circle, "t");
    ChartFunction lhs = (c + s) * (c + s);
    ChartFunction rhs = ChartFunction::one(circle) + Scalar(2) * (c * s);
    CHECK(lhs == rhs);
}

TEST_CASE("degree counts cosine and sine as 1")
{
    auto chart = Chart::make({"x"}, {"t"});
    ChartFunction x = ChartFunction::affine_coord(chart, "x");
    ChartFunction c = ChartFunction::cosine(chart, "t");
    ChartFunction s = ChartFunction::sine(chart, "t");
    CHECK((x * x * c).degree() == 3);
    CHECK((c * s).degree() == 2);
    CHECK(ChartFunction::one(chart).degree() == 0);
    CHECK(ChartFunction::zero(chart).degree() == -1);
    // s^3 normalizes to degree-3 monomials
    CHECK((s * s * s).degree() == 3);
}

TEST_CASE("unknown symbols are rejected by name")
{
    auto chart = Chart::make({"x"});
    REQUIRE_THROWS_WITH(ChartFunction::affine_coord(chart, "q"),
                        Catch::Matchers::ContainsSubstring("q"));
}
