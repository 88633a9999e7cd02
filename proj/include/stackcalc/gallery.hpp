/*
 * gallery.hpp
 * -----------
 * The built-in example groupoids and algebroids, each shipped with sampler
 * seed data (known multiplicative functions and fields, known invariant
 * functions) used by the property suites.
 *
 * Stable identifiers:
 *   unit-R, pair-R, submersion-R2-R, circle-group, torus-bundle-R,
 *   z2-reflection, real-line-group          (groupoids)
 *   molino                                  (direct algebroid)
 */
#pragma once

#include "stackcalc/multcalc.hpp"

namespace stackcalc {

struct GalleryExample {
    LinkedGroupoid lg;
    bool proper = true;
    std::vector<ArrowFunction> known_mult_functions;
    std::vector<MultVectorField> known_mult_fields;
    std::vector<ChartFunction> known_invariants;  // non-constant invariant functions

    explicit GalleryExample(Groupoid g) : lg(std::move(g)) {}
};

namespace gallery_detail {

using Assign = std::map<std::string, std::string>;

inline SmoothMap pick(const ChartPtr& src, const ChartPtr& dst, const Assign& a)
{
    return SmoothMap::coordinate_map(src, dst, a);
}

inline GroupoidPresentation unit_groupoid(const ChartPtr& m, const std::string& name)
{
    GroupoidPresentation gp;
    gp.name = name;
    gp.base = gp.arrows = gp.pairs = gp.triples = m;
    SmoothMap id = SmoothMap::identity(m);
    gp.src = gp.tgt = gp.unit = gp.inv = gp.mul = gp.pr1 = gp.pr2 = id;
    gp.tp1 = gp.tp2 = gp.tp3 = gp.par12 = gp.par23 = gp.mul_first = gp.mul_second = id;
    gp.unit_left = gp.unit_right = gp.inv_right = gp.inv_left = id;
    gp.source_adapted = true;
    gp.source_block_affine = m->affine();
    gp.source_block_circular = m->circular();
    return gp;
}

inline GroupoidPresentation pair_groupoid_R()
{
    GroupoidPresentation gp;
    gp.name = "pair-R";
    gp.base = Chart::make({"z"});
    gp.arrows = Chart::make({"x", "y"});
    gp.pairs = Chart::make({"x", "y", "z"});
    gp.triples = Chart::make({"x", "y", "z", "w"});
    const auto &m = gp.base, &g = gp.arrows, &g2 = gp.pairs, &g3 = gp.triples;
    gp.src = pick(g, m, {{"z", "y"}});
    gp.tgt = pick(g, m, {{"z", "x"}});
    gp.unit = pick(m, g, {{"x", "z"}, {"y", "z"}});
    gp.inv = pick(g, g, {{"x", "y"}, {"y", "x"}});
    gp.mul = pick(g2, g, {{"x", "x"}, {"y", "z"}});
    gp.pr1 = pick(g2, g, {{"x", "x"}, {"y", "y"}});
    gp.pr2 = pick(g2, g, {{"x", "y"}, {"y", "z"}});
    gp.tp1 = pick(g3, g, {{"x", "x"}, {"y", "y"}});
    gp.tp2 = pick(g3, g, {{"x", "y"}, {"y", "z"}});
    gp.tp3 = pick(g3, g, {{"x", "z"}, {"y", "w"}});
    gp.par12 = pick(g3, g2, {{"x", "x"}, {"y", "y"}, {"z", "z"}});
    gp.par23 = pick(g3, g2, {{"x", "y"}, {"y", "z"}, {"z", "w"}});
    gp.mul_first = pick(g3, g2, {{"x", "x"}, {"y", "z"}, {"z", "w"}});
    gp.mul_second = pick(g3, g2, {{"x", "x"}, {"y", "y"}, {"z", "w"}});
    gp.unit_left = pick(g, g2, {{"x", "x"}, {"y", "x"}, {"z", "y"}});
    gp.unit_right = pick(g, g2, {{"x", "x"}, {"y", "y"}, {"z", "y"}});
    gp.inv_right = pick(g, g2, {{"x", "x"}, {"y", "y"}, {"z", "x"}});
    gp.inv_left = pick(g, g2, {{"x", "y"}, {"y", "x"}, {"z", "y"}});
    gp.source_adapted = true;
    gp.source_block_affine = {"y"};
    return gp;
}

inline GroupoidPresentation submersion_groupoid()
{
    // surjective submersion R^2 -> R, (x, y) -> x
    GroupoidPresentation gp;
    gp.name = "submersion-R2-R";
    gp.base = Chart::make({"x", "y"});
    gp.arrows = Chart::make({"x", "y", "yp"});
    gp.pairs = Chart::make({"x", "y", "yp", "ypp"});
    gp.triples = Chart::make({"x", "y", "yp", "ypp", "yppp"});
    const auto &m = gp.base, &g = gp.arrows, &g2 = gp.pairs, &g3 = gp.triples;
    gp.src = pick(g, m, {{"x", "x"}, {"y", "yp"}});
    gp.tgt = pick(g, m, {{"x", "x"}, {"y", "y"}});
    gp.unit = pick(m, g, {{"x", "x"}, {"y", "y"}, {"yp", "y"}});
    gp.inv = pick(g, g, {{"x", "x"}, {"y", "yp"}, {"yp", "y"}});
    gp.mul = pick(g2, g, {{"x", "x"}, {"y", "y"}, {"yp", "ypp"}});
    gp.pr1 = pick(g2, g, {{"x", "x"}, {"y", "y"}, {"yp", "yp"}});
    gp.pr2 = pick(g2, g, {{"x", "x"}, {"y", "yp"}, {"yp", "ypp"}});
    gp.tp1 = pick(g3, g, {{"x", "x"}, {"y", "y"}, {"yp", "yp"}});
    gp.tp2 = pick(g3, g, {{"x", "x"}, {"y", "yp"}, {"yp", "ypp"}});
    gp.tp3 = pick(g3, g, {{"x", "x"}, {"y", "ypp"}, {"yp", "yppp"}});
    gp.par12 = pick(g3, g2, {{"x", "x"}, {"y", "y"}, {"yp", "yp"}, {"ypp", "ypp"}});
    gp.par23 = pick(g3, g2, {{"x", "x"}, {"y", "yp"}, {"yp", "ypp"}, {"ypp", "yppp"}});
    gp.mul_first = pick(g3, g2, {{"x", "x"}, {"y", "y"}, {"yp", "ypp"}, {"ypp", "yppp"}});
    gp.mul_second = pick(g3, g2, {{"x", "x"}, {"y", "y"}, {"yp", "yp"}, {"ypp", "yppp"}});
    gp.unit_left = pick(g, g2, {{"x", "x"}, {"y", "y"}, {"yp", "y"}, {"ypp", "yp"}});
    gp.unit_right = pick(g, g2, {{"x", "x"}, {"y", "y"}, {"yp", "yp"}, {"ypp", "yp"}});
    gp.inv_right = pick(g, g2, {{"x", "x"}, {"y", "y"}, {"yp", "yp"}, {"ypp", "y"}});
    gp.inv_left = pick(g, g2, {{"x", "x"}, {"y", "yp"}, {"yp", "y"}, {"ypp", "yp"}});
    gp.source_adapted = true;
    gp.source_block_affine = {"x", "yp"};
    return gp;
}

// angle-addition pair on a composable chart with circular coordinates a, b
inline std::pair<ChartFunction, ChartFunction> angle_sum(const ChartPtr& chart,
                                                         const std::string& a,
                                                         const std::string& b)
{
    ChartFunction ca = ChartFunction::cosine(chart, a), sa = ChartFunction::sine(chart, a);
    ChartFunction cb = ChartFunction::cosine(chart, b), sb = ChartFunction::sine(chart, b);
    return {ca * cb - sa * sb, sa * cb + ca * sb};
}

inline GroupoidPresentation torus_bundle_groupoid(bool over_point)
{
    GroupoidPresentation gp;
    std::vector<std::string> baseaff = over_point ? std::vector<std::string>{}
                                                  : std::vector<std::string>{"x"};
    gp.name = over_point ? "circle-group" : "torus-bundle-R";
    gp.base = Chart::make(baseaff, {});
    gp.arrows = Chart::make(baseaff, {"t"});
    gp.pairs = Chart::make(baseaff, {"t1", "t2"});
    gp.triples = Chart::make(baseaff, {"t1", "t2", "t3"});
    const auto &m = gp.base, &g = gp.arrows, &g2 = gp.pairs, &g3 = gp.triples;

    auto with_base = [&](Assign a) {
        if (!over_point) a.emplace("x", "x");
        return a;
    };
    auto build = [&](const ChartPtr& src, const ChartPtr& dst, Assign circ,
                     std::vector<std::pair<std::string, std::pair<ChartFunction, ChartFunction>>>
                         explicit_circ = {}) {
        // affine part is always the base coordinate; circular per assignment
        std::vector<ChartFunction> aff;
        for (const auto& n : dst->affine())
            aff.push_back(ChartFunction::affine_coord(src, n));
        std::vector<std::pair<ChartFunction, ChartFunction>> circ_imgs;
        for (const auto& n : dst->circular()) {
            bool done = false;
            for (const auto& [cn, pq] : explicit_circ)
                if (cn == n) {
                    circ_imgs.push_back(pq);
                    done = true;
                }
            if (!done)
                circ_imgs.emplace_back(ChartFunction::cosine(src, circ.at(n)),
                                       ChartFunction::sine(src, circ.at(n)));
        }
        return SmoothMap(src, dst, std::move(aff), std::move(circ_imgs));
    };

    gp.src = gp.tgt = build(g, m, {});
    gp.unit = SmoothMap(m, g,
                        [&] {
                            std::vector<ChartFunction> aff;
                            for (const auto& n : g->affine())
                                aff.push_back(ChartFunction::affine_coord(m, n));
                            return aff;
                        }(),
                        {{ChartFunction::one(m), ChartFunction::zero(m)}});
    // inversion: t -> -t
    gp.inv = SmoothMap(g, g,
                       [&] {
                           std::vector<ChartFunction> aff;
                           for (const auto& n : g->affine())
                               aff.push_back(ChartFunction::affine_coord(g, n));
                           return aff;
                       }(),
                       {{ChartFunction::cosine(g, "t"), -ChartFunction::sine(g, "t")}});
    gp.mul = build(g2, g, {}, {{"t", angle_sum(g2, "t1", "t2")}});
    gp.pr1 = build(g2, g, {{"t", "t1"}});
    gp.pr2 = build(g2, g, {{"t", "t2"}});
    gp.tp1 = build(g3, g, {{"t", "t1"}});
    gp.tp2 = build(g3, g, {{"t", "t2"}});
    gp.tp3 = build(g3, g, {{"t", "t3"}});
    gp.par12 = build(g3, g2, {{"t1", "t1"}, {"t2", "t2"}});
    gp.par23 = build(g3, g2, {{"t1", "t2"}, {"t2", "t3"}});
    gp.mul_first = build(g3, g2, {{"t2", "t3"}}, {{"t1", angle_sum(g3, "t1", "t2")}});
    gp.mul_second = build(g3, g2, {{"t1", "t1"}}, {{"t2", angle_sum(g3, "t2", "t3")}});
    gp.unit_left = build(g, g2, {{"t2", "t"}},
                         {{"t1", {ChartFunction::one(g), ChartFunction::zero(g)}}});
    gp.unit_right = build(g, g2, {{"t1", "t"}},
                          {{"t2", {ChartFunction::one(g), ChartFunction::zero(g)}}});
    gp.inv_right = build(g, g2, {{"t1", "t"}},
                         {{"t2", {ChartFunction::cosine(g, "t"), -ChartFunction::sine(g, "t")}}});
    gp.inv_left = build(g, g2, {{"t2", "t"}},
                        {{"t1", {ChartFunction::cosine(g, "t"), -ChartFunction::sine(g, "t")}}});
    gp.source_adapted = true;
    gp.source_block_affine = baseaff;
    (void)with_base;
    return gp;
}

inline GroupoidPresentation real_line_group()
{
    GroupoidPresentation gp;
    gp.name = "real-line-group";
    gp.base = Chart::point();
    gp.arrows = Chart::make({"g"});
    gp.pairs = Chart::make({"g1", "g2"});
    gp.triples = Chart::make({"g1", "g2", "g3"});
    const auto &m = gp.base, &g = gp.arrows, &g2 = gp.pairs, &g3 = gp.triples;
    auto cf = [&](const ChartPtr& ch, const std::string& n) {
        return ChartFunction::affine_coord(ch, n);
    };
    gp.src = gp.tgt = SmoothMap(g, m, {}, {});
    gp.unit = SmoothMap(m, g, {ChartFunction::zero(m)}, {});
    gp.inv = SmoothMap(g, g, {-cf(g, "g")}, {});
    gp.mul = SmoothMap(g2, g, {cf(g2, "g1") + cf(g2, "g2")}, {});
    gp.pr1 = pick(g2, g, {{"g", "g1"}});
    gp.pr2 = pick(g2, g, {{"g", "g2"}});
    gp.tp1 = pick(g3, g, {{"g", "g1"}});
    gp.tp2 = pick(g3, g, {{"g", "g2"}});
    gp.tp3 = pick(g3, g, {{"g", "g3"}});
    gp.par12 = pick(g3, g2, {{"g1", "g1"}, {"g2", "g2"}});
    gp.par23 = pick(g3, g2, {{"g1", "g2"}, {"g2", "g3"}});
    gp.mul_first = SmoothMap(g3, g2, {cf(g3, "g1") + cf(g3, "g2"), cf(g3, "g3")}, {});
    gp.mul_second = SmoothMap(g3, g2, {cf(g3, "g1"), cf(g3, "g2") + cf(g3, "g3")}, {});
    gp.unit_left = SmoothMap(g, g2, {ChartFunction::zero(g), cf(g, "g")}, {});
    gp.unit_right = SmoothMap(g, g2, {cf(g, "g"), ChartFunction::zero(g)}, {});
    gp.inv_right = SmoothMap(g, g2, {cf(g, "g"), -cf(g, "g")}, {});
    gp.inv_left = SmoothMap(g, g2, {-cf(g, "g"), cf(g, "g")}, {});
    gp.source_adapted = true;
    return gp;
}

inline DiscreteActionGroupoid z2_reflection()
{
    DiscreteActionGroupoid ag;
    ag.name = "z2-reflection";
    ag.base = Chart::make({"x"});
    ag.elements = {"e", "s"};
    ag.table = {{0, 1}, {1, 0}};
    SmoothMap id = SmoothMap::identity(ag.base);
    ChartFunction x = ChartFunction::affine_coord(ag.base, "x");
    SmoothMap refl(ag.base, ag.base, {-x}, {});
    ag.action = {id, refl};
    ag.action_inv = {id, refl};
    return ag;
}

}  // namespace gallery_detail

inline std::vector<std::string> gallery_names()
{
    return {"unit-R",         "pair-R",        "submersion-R2-R", "circle-group",
            "torus-bundle-R", "z2-reflection", "real-line-group"};
}

inline Groupoid build_groupoid(const std::string& name)
{
    using namespace gallery_detail;
    if (name == "unit-R") return unit_groupoid(Chart::make({"x"}), "unit-R");
    if (name == "pair-R") return pair_groupoid_R();
    if (name == "submersion-R2-R") return submersion_groupoid();
    if (name == "circle-group") return torus_bundle_groupoid(true);
    if (name == "torus-bundle-R") return torus_bundle_groupoid(false);
    if (name == "z2-reflection") return z2_reflection();
    if (name == "real-line-group") return real_line_group();
    throw std::invalid_argument("unknown gallery example '" + name + "'");
}

// The infinitesimal model of the irrational torus foliation: frame {e},
// anchor l0 d/dt0 + l1 d/dt1 with formal parameters l0, l1, abelian bracket.
inline AlgebroidPresentation build_molino_algebroid()
{
    AlgebroidPresentation a;
    a.name = "molino";
    a.parameters = {"l0", "l1"};
    a.base = Chart::make({}, {"t0", "t1"});
    a.frame = {"e"};
    VectorField rho(a.base);
    rho.angular_coeffs()[0] = ChartFunction::constant(a.base, Scalar::parameter("l0"));
    rho.angular_coeffs()[1] = ChartFunction::constant(a.base, Scalar::parameter("l1"));
    a.anchor_frame = {rho};
    a.structure = {{a.zero_section()}};
    return a;
}

inline GalleryExample build_example(const std::string& name)
{
    GalleryExample ex(build_groupoid(name));
    const LinkedGroupoid& lg = ex.lg;
    auto arrow_fn = [&](ChartFunction f) {
        ArrowFunction a;
        a.comps.push_back(std::move(f));
        return a;
    };
    auto lift_field = [&](const VectorField& arrows, const VectorField& base) {
        MultVectorField x;
        x.arrows.push_back(arrows);
        x.base = base;
        return x;
    };

    if (name == "unit-R") {
        const auto* gp = lg.chart_presentation();
        ChartFunction x = ChartFunction::affine_coord(gp->base, "x");
        VectorField dx = VectorField::coordinate(gp->base, "x");
        ex.known_invariants = {x, x * x};
        ex.known_mult_fields = {lift_field(dx, dx), lift_field(x * dx, x * dx),
                                lift_field((x * x) * dx, (x * x) * dx)};
    } else if (name == "pair-R") {
        const auto* gp = lg.chart_presentation();
        ChartFunction x = ChartFunction::affine_coord(gp->arrows, "x");
        ChartFunction y = ChartFunction::affine_coord(gp->arrows, "y");
        ChartFunction z = ChartFunction::affine_coord(gp->base, "z");
        VectorField dx = VectorField::coordinate(gp->arrows, "x");
        VectorField dy = VectorField::coordinate(gp->arrows, "y");
        VectorField dz = VectorField::coordinate(gp->base, "z");
        ex.known_mult_functions = {arrow_fn(x - y)};
        ex.known_mult_fields = {lift_field(dx + dy, dz),
                                lift_field(x * dx + y * dy, z * dz),
                                lift_field((x * x) * dx + (y * y) * dy, (z * z) * dz)};
    } else if (name == "submersion-R2-R") {
        const auto* gp = lg.chart_presentation();
        ChartFunction gx = ChartFunction::affine_coord(gp->arrows, "x");
        ChartFunction gy = ChartFunction::affine_coord(gp->arrows, "y");
        ChartFunction gyp = ChartFunction::affine_coord(gp->arrows, "yp");
        ChartFunction mx = ChartFunction::affine_coord(gp->base, "x");
        ChartFunction my = ChartFunction::affine_coord(gp->base, "y");
        VectorField dgx = VectorField::coordinate(gp->arrows, "x");
        VectorField dgy = VectorField::coordinate(gp->arrows, "y");
        VectorField dgyp = VectorField::coordinate(gp->arrows, "yp");
        VectorField dmx = VectorField::coordinate(gp->base, "x");
        VectorField dmy = VectorField::coordinate(gp->base, "y");
        ex.known_invariants = {mx, mx * mx};
        ex.known_mult_functions = {arrow_fn(gy - gyp), arrow_fn(gx * (gy - gyp))};
        ex.known_mult_fields = {
            lift_field(gx * dgx + gx * gy * dgy + gx * gyp * dgyp, mx * dmx + mx * my * dmy),
            lift_field(dgy + dgyp, dmy),
            lift_field(gy * dgy + gyp * dgyp, my * dmy)};
    } else if (name == "torus-bundle-R") {
        const auto* gp = lg.chart_presentation();
        ChartFunction x = ChartFunction::affine_coord(gp->base, "x");
        VectorField dgx = VectorField::coordinate(gp->arrows, "x");
        VectorField dmx = VectorField::coordinate(gp->base, "x");
        ChartFunction gx = ChartFunction::affine_coord(gp->arrows, "x");
        ex.known_invariants = {x, x * x};
        ex.known_mult_fields = {lift_field(dgx, dmx), lift_field(gx * dgx, x * dmx),
                                lift_field((gx * gx) * dgx, (x * x) * dmx)};
        ex.proper = true;
    } else if (name == "circle-group") {
        // only the zero multiplicative field; sections supply the interest
        ex.proper = true;
    } else if (name == "real-line-group") {
        const auto* gp = lg.chart_presentation();
        ChartFunction gg = ChartFunction::affine_coord(gp->arrows, "g");
        VectorField dg = VectorField::coordinate(gp->arrows, "g");
        ex.known_mult_functions = {arrow_fn(gg)};
        ex.known_mult_fields = {lift_field(gg * dg, VectorField::zero(gp->base))};
        ex.proper = false;
    } else if (name == "z2-reflection") {
        const auto& ag = *lg.action_presentation();
        ChartFunction x = ChartFunction::affine_coord(ag.base, "x");
        VectorField dx = VectorField::coordinate(ag.base, "x");
        auto act_fn = [&](ChartFunction odd) {
            ArrowFunction f;
            f.comps = {ChartFunction::zero(ag.base), std::move(odd)};
            return f;
        };
        auto act_field = [&](const VectorField& v) {
            MultVectorField m;
            m.arrows = {v, v};
            m.base = v;
            return m;
        };
        ex.known_invariants = {x * x, (x * x) * (x * x)};
        // cocycles vanish on the identity component; the reflection leg is odd
        ex.known_mult_functions = {act_fn(Scalar(-2) * x), act_fn(Scalar(-2) * (x * x * x))};
        ex.known_mult_fields = {act_field(x * dx), act_field((x * x * x) * dx)};
    }
    return ex;
}

}  // namespace stackcalc
