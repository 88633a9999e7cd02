#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "stackcalc/vector_field.hpp"

using namespace stackcalc;

namespace {

// deterministic little generator for property samples
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    std::uint64_t operator()()
    {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    Scalar coeff() { return Scalar(long((*this)() % 7) - 3); }
};

ChartFunction random_function(const ChartPtr& chart, int degree, Lcg& rng)
{
    ChartFunction f(chart);
    // all monomials of total degree <= degree with sine exponents <= 1
    std::vector<ChartMonomial> monos;
    ChartMonomial m(chart->n_generators(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int left) {
        if (g == m.size()) {
            monos.push_back(m);
            return;
        }
        int cap = left;
        for (int e = 0; e <= cap; ++e) {
            m[g] = e;
            rec(g + 1, left - e);
        }
        m[g] = 0;
    };
    rec(0, degree);
    for (const auto& mono : monos) f.add_term(mono, rng.coeff());
    return f;
}

VectorField random_field(const ChartPtr& chart, int degree, Lcg& rng)
{
    std::vector<ChartFunction> aff, ang;
    for (std::size_t j = 0; j < chart->n_affine(); ++j)
        aff.push_back(random_function(chart, degree, rng));
    for (std::size_t i = 0; i < chart->n_circular(); ++i)
        ang.push_back(random_function(chart, degree, rng));
    return VectorField(chart, std::move(aff), std::move(ang));
}

}  // namespace

TEST_CASE("lie derivative basics")
{
    auto line = Chart::make({"x"});
    ChartFunction x = ChartFunction::affine_coord(line, "x");
    VectorField xdx = x * VectorField::coordinate(line, "x");
    CHECK(xdx.apply(x * x) == Scalar(2) * (x * x));

    auto circle = Chart::make({}, {"t"});
    VectorField dt = VectorField::coordinate(circle, "t");
    ChartFunction c = ChartFunction::cosine(circle, "t");
    ChartFunction s = ChartFunction::sine(circle, "t");
    CHECK(dt.apply(c) == -s);
    // product rule case: d/dt (c s) = c^2 - s^2
    CHECK(dt.apply(c * s) == c * c - s * s);
}

TEST_CASE("textbook commutators")
{
    auto line = Chart::make({"x"});
    ChartFunction x = ChartFunction::affine_coord(line, "x");
    VectorField dx = VectorField::coordinate(line, "x");
    VectorField xdx = x * dx;
    CHECK(bracket(dx, xdx) == dx);
    CHECK(bracket(xdx, xdx).is_zero());

    auto torus = Chart::make({}, {"a", "b"});
    CHECK(bracket(VectorField::coordinate(torus, "a"),
                  VectorField::coordinate(torus, "b"))
              .is_zero());
}

TEST_CASE("derivation, Leibniz and Jacobi properties on random samples")
{
    auto chart = Chart::make({"x"}, {"t"});
    Lcg rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        ChartFunction f = random_function(chart, 3, rng);
        ChartFunction g = random_function(chart, 3, rng);
        VectorField x = random_field(chart, 2, rng);
        VectorField y = random_field(chart, 2, rng);
        VectorField z = random_field(chart, 2, rng);

        // derivation property
        CHECK(x.apply(f * g) == x.apply(f) * g + f * x.apply(g));
        // [X, fY] = X(f) Y + f [X, Y]
        CHECK(bracket(x, f * y) == x.apply(f) * y + f * bracket(x, y));
        // bracket acts as commutator of derivations
        CHECK(bracket(x, y).apply(f) == x.apply(y.apply(f)) - y.apply(x.apply(f)));
        // antisymmetry and Jacobi
        CHECK(bracket(x, y) == -bracket(y, x));
        VectorField jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                          bracket(z, bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("pushforward along coordinate swap")
{
    auto g = Chart::make({"x", "y"});
    SmoothMap swap = SmoothMap::coordinate_map(g, g, {{"x", "y"}, {"y", "x"}});
    VectorField dx = VectorField::coordinate(g, "x");
    CHECK(pushforward(swap, swap, dx) == VectorField::coordinate(g, "y"));
}

TEST_CASE("pushforward along identity is identity")
{
    auto chart = Chart::make({"x"}, {"t"});
    SmoothMap id = SmoothMap::identity(chart);
    Lcg rng(7);
    VectorField x = random_field(chart, 2, rng);
    CHECK(pushforward(id, id, x) == x);
}

TEST_CASE("pushforward along reflection: x d/dx is invariant")
{
    auto line = Chart::make({"x"});
    ChartFunction x = ChartFunction::affine_coord(line, "x");
    SmoothMap sigma(line, line, {-x}, {});
    VectorField xdx = x * VectorField::coordinate(line, "x");
    // oracle: (sigma_* X)(f) = (sigma^{-1})^* X(sigma^* f), computed directly
    SmoothMap inv = sigma;  // self inverse
    ChartFunction f = x * x * x;
    VectorField pushed = pushforward(sigma, inv, xdx);
    CHECK(pushed.apply(f) == inv.pullback(xdx.apply(sigma.pullback(f))));
    CHECK(pushed == xdx);
    // and d/dx is odd under the reflection
    CHECK(pushforward(sigma, inv, VectorField::coordinate(line, "x")) ==
          -VectorField::coordinate(line, "x"));
}

TEST_CASE("pushforward validates the declared inverse")
{
    auto line = Chart::make({"x"});
    ChartFunction x = ChartFunction::affine_coord(line, "x");
    SmoothMap sq(line, line, {x * x}, {});
    CHECK_THROWS(pushforward(sq, sq, VectorField::coordinate(line, "x")));
}

TEST_CASE("pushforward commutes with Lie derivative (circle rotation)")
{
    auto circle = Chart::make({}, {"t"});
    ChartFunction c = ChartFunction::cosine(circle, "t");
    ChartFunction s = ChartFunction::sine(circle, "t");
    // rotation by a quarter turn: (c, s) -> (-s, c)
    SmoothMap rot(circle, circle, {}, {{-s, c}});
    SmoothMap rot_inv(circle, circle, {}, {{s, -c}});
    Lcg rng(99);
    VectorField x = random_field(circle, 2, rng);
    ChartFunction f = random_function(circle, 3, rng);
    // phi^*(L_{phi_* X} f) = L_X(phi^* f)
    VectorField pushed = pushforward(rot, rot_inv, x);
    CHECK(rot.pullback(pushed.apply(f)) == x.apply(rot.pullback(f)));
}
