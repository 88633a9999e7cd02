/*
 * groupoid.hpp
 * ------------
 * Lie groupoid presentations over charts, and action groupoids of finite
 * groups.  Chart presentations carry explicit composable-pair and triple
 * charts with all projections and pairings as substitution maps; the
 * validator replays every structure equation through those maps and
 * reports a certificate (offending generator + nonzero normal form) for
 * each failure.
 */
#pragma once

#include <variant>

#include "stackcalc/vector_field.hpp"

namespace stackcalc {

struct AxiomCheck {
    std::string axiom;
    bool pass = false;
    std::string detail;  // empty when passing, certificate otherwise
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string first_failure() const
    {
        for (const auto& c : checks)
            if (!c.pass) return c.axiom + ": " + c.detail;
        return "";
    }
};

namespace detail {

inline void check_maps_equal(ValidationReport& report, const std::string& axiom,
                             const SmoothMap& lhs, const SmoothMap& rhs)
{
    auto diff = SmoothMap::first_difference(lhs, rhs);
    if (!diff) {
        report.checks.push_back({axiom, true, ""});
    } else {
        report.checks.push_back(
            {axiom, false, "generator " + diff->first + ": difference = " + diff->second.str()});
    }
}

}  // namespace detail

// A chart presentation of a Lie groupoid.  The source-adapted blocks list
// for each base coordinate the arrow coordinate that the source map
// projects onto; every other arrow coordinate is a fiber coordinate.
struct GroupoidPresentation {
    std::string name;
    std::vector<std::string> parameters;

    ChartPtr base;     // M
    ChartPtr arrows;   // G
    ChartPtr pairs;    // G2
    ChartPtr triples;  // G3

    SmoothMap src, tgt;  // s, t : G -> M
    SmoothMap unit;      // u : M -> G
    SmoothMap inv;       // i : G -> G
    SmoothMap mul;       // m : G2 -> G
    SmoothMap pr1, pr2;  // G2 -> G

    // triple data
    SmoothMap tp1, tp2, tp3;              // G3 -> G
    SmoothMap par12, par23;               // G3 -> G2, (g1,g2) and (g2,g3)
    SmoothMap mul_first, mul_second;      // G3 -> G2, (m(g1,g2),g3) and (g1,m(g2,g3))

    // pairings G -> G2
    SmoothMap unit_left;   // g -> (u(t(g)), g)
    SmoothMap unit_right;  // g -> (g, u(s(g)))
    SmoothMap inv_right;   // g -> (g, i(g))
    SmoothMap inv_left;    // g -> (i(g), g)

    // source-adapted data: arrow coordinate names the source projects onto,
    // aligned with base->affine() and base->circular() respectively
    bool source_adapted = false;
    std::vector<std::string> source_block_affine;
    std::vector<std::string> source_block_circular;

    struct FiberCoordinate {
        bool circular;
        std::size_t index;  // position within arrows->affine() or ->circular()
        std::string name;
    };

    std::vector<FiberCoordinate> fiber_coordinates() const
    {
        std::vector<FiberCoordinate> out;
        for (std::size_t j = 0; j < arrows->n_affine(); ++j) {
            const std::string& n = arrows->affine()[j];
            if (std::find(source_block_affine.begin(), source_block_affine.end(), n) ==
                source_block_affine.end())
                out.push_back({false, j, n});
        }
        for (std::size_t i = 0; i < arrows->n_circular(); ++i) {
            const std::string& n = arrows->circular()[i];
            if (std::find(source_block_circular.begin(), source_block_circular.end(), n) ==
                source_block_circular.end())
                out.push_back({true, i, n});
        }
        return out;
    }

    ValidationReport validate_axioms() const
    {
        ValidationReport report;
        SmoothMap id_m = SmoothMap::identity(base);
        SmoothMap id_g = SmoothMap::identity(arrows);
        detail::check_maps_equal(report, "s∘u = id_M", src.after(unit), id_m);
        detail::check_maps_equal(report, "t∘u = id_M", tgt.after(unit), id_m);
        detail::check_maps_equal(report, "s∘pr1 = t∘pr2 (fibered constraint)",
                                 src.after(pr1), tgt.after(pr2));
        detail::check_maps_equal(report, "s∘m = s∘pr2", src.after(mul), src.after(pr2));
        detail::check_maps_equal(report, "t∘m = t∘pr1", tgt.after(mul), tgt.after(pr1));
        detail::check_maps_equal(report, "i∘i = id_G", inv.after(inv), id_g);
        detail::check_maps_equal(report, "s∘i = t", src.after(inv), tgt);
        detail::check_maps_equal(report, "t∘i = s", tgt.after(inv), src);
        // pairing consistency
        detail::check_maps_equal(report, "pr1∘(u∘t,id) = u∘t", pr1.after(unit_left),
                                 unit.after(tgt));
        detail::check_maps_equal(report, "pr2∘(u∘t,id) = id", pr2.after(unit_left), id_g);
        detail::check_maps_equal(report, "pr1∘(id,u∘s) = id", pr1.after(unit_right), id_g);
        detail::check_maps_equal(report, "pr2∘(id,u∘s) = u∘s", pr2.after(unit_right),
                                 unit.after(src));
        detail::check_maps_equal(report, "pr1∘(id,i) = id", pr1.after(inv_right), id_g);
        detail::check_maps_equal(report, "pr2∘(id,i) = i", pr2.after(inv_right), inv);
        detail::check_maps_equal(report, "pr1∘(i,id) = i", pr1.after(inv_left), inv);
        detail::check_maps_equal(report, "pr2∘(i,id) = id", pr2.after(inv_left), id_g);
        // unit and inverse laws
        detail::check_maps_equal(report, "m∘(u∘t,id) = id", mul.after(unit_left), id_g);
        detail::check_maps_equal(report, "m∘(id,u∘s) = id", mul.after(unit_right), id_g);
        detail::check_maps_equal(report, "m∘(id,i) = u∘t", mul.after(inv_right),
                                 unit.after(tgt));
        detail::check_maps_equal(report, "m∘(i,id) = u∘s", mul.after(inv_left),
                                 unit.after(src));
        // triples consistency and associativity
        detail::check_maps_equal(report, "pr1∘par12 = p1", pr1.after(par12), tp1);
        detail::check_maps_equal(report, "pr2∘par12 = p2", pr2.after(par12), tp2);
        detail::check_maps_equal(report, "pr1∘par23 = p2", pr1.after(par23), tp2);
        detail::check_maps_equal(report, "pr2∘par23 = p3", pr2.after(par23), tp3);
        detail::check_maps_equal(report, "pr1∘(m×id) = m∘par12", pr1.after(mul_first),
                                 mul.after(par12));
        detail::check_maps_equal(report, "pr2∘(m×id) = p3", pr2.after(mul_first), tp3);
        detail::check_maps_equal(report, "pr1∘(id×m) = p1", pr1.after(mul_second), tp1);
        detail::check_maps_equal(report, "pr2∘(id×m) = m∘par23", pr2.after(mul_second),
                                 mul.after(par23));
        detail::check_maps_equal(report, "m∘(m×id) = m∘(id×m) (associativity)",
                                 mul.after(mul_first), mul.after(mul_second));
        if (source_adapted) {
            std::map<std::string, std::string> assignment;
            for (std::size_t j = 0; j < base->n_affine(); ++j)
                assignment[base->affine()[j]] = source_block_affine.at(j);
            for (std::size_t i = 0; i < base->n_circular(); ++i)
                assignment[base->circular()[i]] = source_block_circular.at(i);
            detail::check_maps_equal(report, "s is the source-block projection", src,
                                     SmoothMap::coordinate_map(arrows, base, assignment));
        }
        return report;
    }
};

// Action groupoid of a finite group acting on a chart by diffeomorphisms.
struct DiscreteActionGroupoid {
    std::string name;
    std::vector<std::string> parameters;

    ChartPtr base;                        // M
    std::vector<std::string> elements;    // element names; identity first
    std::vector<std::vector<int>> table;  // table[i][j] = index of e_i * e_j
    std::vector<SmoothMap> action;        // per element, M -> M
    std::vector<SmoothMap> action_inv;    // declared inverses

    std::size_t size() const { return elements.size(); }

    ValidationReport validate_axioms() const
    {
        ValidationReport report;
        auto note = [&](const std::string& axiom, bool ok, const std::string& detail) {
            report.checks.push_back({axiom, ok, ok ? "" : detail});
        };
        std::size_t n = elements.size();
        bool shape = table.size() == n && action.size() == n && action_inv.size() == n;
        for (const auto& row : table) shape = shape && row.size() == n;
        note("multiplication table shape", shape, "table/action sizes inconsistent");
        if (!shape) return report;

        bool idlaw = true;
        for (std::size_t i = 0; i < n && idlaw; ++i)
            idlaw = table[0][i] == int(i) && table[i][0] == int(i);
        note("identity element is neutral", idlaw, "row/column of the identity is not neutral");

        bool assoc = true;
        for (std::size_t i = 0; i < n && assoc; ++i)
            for (std::size_t j = 0; j < n && assoc; ++j)
                for (std::size_t k = 0; k < n && assoc; ++k)
                    assoc = table[table[i][j]][k] == table[i][table[j][k]];
        note("multiplication table associativity", assoc, "associativity fails");

        bool inverses = true;
        for (std::size_t i = 0; i < n && inverses; ++i) {
            bool found = false;
            for (std::size_t j = 0; j < n; ++j)
                if (table[i][j] == 0 && table[j][i] == 0) found = true;
            inverses = found;
        }
        note("group inverses exist", inverses, "an element has no inverse");

        detail::check_maps_equal(report, "identity element acts as the identity", action[0],
                                 SmoothMap::identity(base));
        for (std::size_t i = 0; i < n; ++i) {
            detail::check_maps_equal(report,
                                     "action inverse of " + elements[i],
                                     action[i].after(action_inv[i]), SmoothMap::identity(base));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                detail::check_maps_equal(
                    report, "action compatibility " + elements[i] + "·" + elements[j],
                    action[i].after(action[j]), action[table[i][j]]);
            }
        return report;
    }
};

using Groupoid = std::variant<GroupoidPresentation, DiscreteActionGroupoid>;

inline const ChartPtr& base_chart(const Groupoid& g)
{
    return std::visit([](const auto& gp) -> const ChartPtr& { return gp.base; }, g);
}
inline const std::string& groupoid_name(const Groupoid& g)
{
    return std::visit([](const auto& gp) -> const std::string& { return gp.name; }, g);
}
inline const std::vector<std::string>& groupoid_parameters(const Groupoid& g)
{
    return std::visit([](const auto& gp) -> const std::vector<std::string>& { return gp.parameters; },
                      g);
}
inline ValidationReport validate_axioms(const Groupoid& g)
{
    return std::visit([](const auto& gp) { return gp.validate_axioms(); }, g);
}
inline std::size_t n_arrow_components(const Groupoid& g)
{
    if (std::holds_alternative<DiscreteActionGroupoid>(g))
        return std::get<DiscreteActionGroupoid>(g).elements.size();
    return 1;
}

// A function on the arrow space: one ChartFunction per arrow component
// (chart presentations have a single component, action groupoids one per
// group element).
struct ArrowFunction {
    std::vector<ChartFunction> comps;

    bool is_zero() const
    {
        for (const auto& f : comps)
            if (!f.is_zero()) return false;
        return true;
    }
    ArrowFunction operator-() const
    {
        ArrowFunction r;
        for (const auto& f : comps) r.comps.push_back(-f);
        return r;
    }
    ArrowFunction& operator+=(const ArrowFunction& o)
    {
        if (comps.size() != o.comps.size())
            throw std::invalid_argument("ArrowFunction: component count mismatch");
        for (std::size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
        return *this;
    }
    ArrowFunction& operator-=(const ArrowFunction& o) { return *this += -o; }
    friend ArrowFunction operator+(ArrowFunction a, const ArrowFunction& b) { a += b; return a; }
    friend ArrowFunction operator-(ArrowFunction a, const ArrowFunction& b) { a -= b; return a; }
    friend ArrowFunction operator*(const Scalar& c, const ArrowFunction& f)
    {
        ArrowFunction r;
        for (const auto& g : f.comps) r.comps.push_back(c * g);
        return r;
    }
    bool operator==(const ArrowFunction& o) const { return comps == o.comps; }
    bool operator!=(const ArrowFunction& o) const { return !(*this == o); }
    int degree() const
    {
        int d = -1;
        for (const auto& f : comps) d = std::max(d, f.degree());
        return d;
    }
    std::string str() const
    {
        if (comps.size() == 1) return comps[0].str();
        std::string s = "[";
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i) s += "; ";
            s += comps[i].str();
        }
        return s + "]";
    }
};

inline ArrowFunction zero_arrow_function(const Groupoid& g)
{
    ArrowFunction f;
    if (const auto* gp = std::get_if<GroupoidPresentation>(&g)) {
        f.comps.push_back(ChartFunction::zero(gp->arrows));
    } else {
        const auto& ag = std::get<DiscreteActionGroupoid>(g);
        f.comps.assign(ag.elements.size(), ChartFunction::zero(ag.base));
    }
    return f;
}

// A multiplicative vector field candidate: a field per arrow component
// plus the base field.
struct MultVectorField {
    std::vector<VectorField> arrows;
    VectorField base;

    MultVectorField operator-() const
    {
        MultVectorField r;
        for (const auto& v : arrows) r.arrows.push_back(-v);
        r.base = -base;
        return r;
    }
    MultVectorField& operator+=(const MultVectorField& o)
    {
        if (arrows.size() != o.arrows.size())
            throw std::invalid_argument("MultVectorField: component count mismatch");
        for (std::size_t i = 0; i < arrows.size(); ++i) arrows[i] += o.arrows[i];
        base += o.base;
        return *this;
    }
    friend MultVectorField operator+(MultVectorField a, const MultVectorField& b)
    {
        a += b;
        return a;
    }
    friend MultVectorField operator-(MultVectorField a, const MultVectorField& b)
    {
        a += -b;
        return a;
    }
    bool operator==(const MultVectorField& o) const
    {
        return arrows == o.arrows && base == o.base;
    }
    bool operator!=(const MultVectorField& o) const { return !(*this == o); }
    bool is_zero() const
    {
        for (const auto& v : arrows)
            if (!v.is_zero()) return false;
        return base.is_zero();
    }
    std::string str() const
    {
        std::string s = "(X = ";
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            if (i) s += "; ";
            s += arrows[i].str();
        }
        return s + ", X_M = " + base.str() + ")";
    }
};

inline MultVectorField zero_mult_field(const Groupoid& g)
{
    MultVectorField v;
    if (const auto* gp = std::get_if<GroupoidPresentation>(&g)) {
        v.arrows.push_back(VectorField::zero(gp->arrows));
        v.base = VectorField::zero(gp->base);
    } else {
        const auto& ag = std::get<DiscreteActionGroupoid>(g);
        v.arrows.assign(ag.elements.size(), VectorField::zero(ag.base));
        v.base = VectorField::zero(ag.base);
    }
    return v;
}

// Boolean predicate result with a certificate for the failing identity.
struct Certificate {
    bool ok = true;
    std::string where;
    std::string defect;  // printed nonzero normal form

    explicit operator bool() const { return ok; }
    static Certificate pass() { return {}; }
    static Certificate fail(std::string where, std::string defect)
    {
        return {false, std::move(where), std::move(defect)};
    }
    std::string str() const { return ok ? "ok" : where + ": " + defect; }
};

// F multiplicative iff m*F = pr1*F + pr2*F (chart case) or the cocycle
// form F_{gh} = h*(F_g) + F_h with F_e = 0 (action case).
inline Certificate is_multiplicative_function(const Groupoid& g, const ArrowFunction& f)
{
    if (const auto* gp = std::get_if<GroupoidPresentation>(&g)) {
        if (f.comps.size() != 1 || !same_chart(f.comps[0].chart(), gp->arrows))
            throw std::invalid_argument("is_multiplicative_function: chart mismatch");
        ChartFunction defect = gp->mul.pullback(f.comps[0]) - gp->pr1.pullback(f.comps[0]) -
                               gp->pr2.pullback(f.comps[0]);
        if (!defect.is_zero())
            return Certificate::fail("m*F - pr1*F - pr2*F", defect.str());
        return Certificate::pass();
    }
    const auto& ag = std::get<DiscreteActionGroupoid>(g);
    if (f.comps.size() != ag.elements.size())
        throw std::invalid_argument("is_multiplicative_function: component count mismatch");
    for (const auto& c : f.comps)
        if (!same_chart(c.chart(), ag.base))
            throw std::invalid_argument("is_multiplicative_function: chart mismatch");
    if (!f.comps[0].is_zero())
        return Certificate::fail("F_e", f.comps[0].str());
    for (std::size_t i = 0; i < ag.size(); ++i)
        for (std::size_t j = 0; j < ag.size(); ++j) {
            ChartFunction defect =
                f.comps[ag.table[i][j]] - ag.action[j].pullback(f.comps[i]) - f.comps[j];
            if (!defect.is_zero())
                return Certificate::fail(
                    "cocycle at (" + ag.elements[i] + "," + ag.elements[j] + ")", defect.str());
        }
    return Certificate::pass();
}

namespace detail {

// For a product-like composable chart, builds the vector field (X1, X2) on
// G2 determined by pr1-relatedness to x1 and pr2-relatedness to x2.  Every
// G2 coordinate must be hit by a plain coordinate image of pr1 or pr2;
// overlapping prescriptions are checked for consistency.
inline std::variant<VectorField, Certificate> pair_field(const GroupoidPresentation& gp,
                                                         const VectorField& x1,
                                                         const VectorField& x2)
{
    const ChartPtr& g2 = gp.pairs;
    const ChartPtr& g = gp.arrows;
    std::vector<std::optional<ChartFunction>> aff(g2->n_affine());
    std::vector<std::optional<ChartFunction>> ang(g2->n_circular());
    auto record = [&](bool circular, std::size_t idx, const ChartFunction& value,
                      const std::string& who) -> std::optional<Certificate> {
        auto& slot = circular ? ang[idx] : aff[idx];
        if (!slot) {
            slot = value;
            return std::nullopt;
        }
        ChartFunction d = *slot - value;
        if (d.is_zero()) return std::nullopt;
        return Certificate::fail("pair field inconsistency at " + who, d.str());
    };

    for (int leg = 0; leg < 2; ++leg) {
        const SmoothMap& pr = leg == 0 ? gp.pr1 : gp.pr2;
        const VectorField& x = leg == 0 ? x1 : x2;
        // affine coordinates of G whose pr-image is a plain G2 coordinate
        for (std::size_t j = 0; j < g->n_affine(); ++j) {
            const ChartFunction& im = pr.affine_image(j);
            if (im.terms().size() != 1) continue;
            const auto& [mono, coeff] = *im.terms().begin();
            if (!coeff.is_one() || monomial_degree(mono) != 1) continue;
            // which G2 generator?
            std::size_t gen = std::find(mono.begin(), mono.end(), 1) - mono.begin();
            if (gen >= g2->n_affine()) continue;  // circular generator: kind mismatch
            auto err = record(false, gen, pr.pullback(x.affine_coeff(j)),
                              g2->affine()[gen]);
            if (err) return *err;
        }
        for (std::size_t i = 0; i < g->n_circular(); ++i) {
            const auto& [pc, ps] = pr.circular_image(i);
            if (pc.terms().size() != 1 || ps.terms().size() != 1) continue;
            const auto& [mc, cc] = *pc.terms().begin();
            const auto& [ms, cs] = *ps.terms().begin();
            if (!cc.is_one() || !cs.is_one()) continue;
            if (monomial_degree(mc) != 1 || monomial_degree(ms) != 1) continue;
            std::size_t genc = std::find(mc.begin(), mc.end(), 1) - mc.begin();
            std::size_t gens = std::find(ms.begin(), ms.end(), 1) - ms.begin();
            // must be the cos/sin pair of one circular G2 coordinate
            if (genc < g2->n_affine() || gens != genc + 1) continue;
            std::size_t idx = (genc - g2->n_affine()) / 2;
            if (g2->cos_index(idx) != genc) continue;
            auto err = record(true, idx, pr.pullback(x.angular_coeff(i)),
                              g2->circular()[idx]);
            if (err) return *err;
        }
    }
    for (std::size_t j = 0; j < g2->n_affine(); ++j)
        if (!aff[j])
            return Certificate::fail("pair field", "composable chart coordinate " +
                                                       g2->affine()[j] +
                                                       " is not covered by pr1/pr2");
    for (std::size_t i = 0; i < g2->n_circular(); ++i)
        if (!ang[i])
            return Certificate::fail("pair field", "composable chart coordinate " +
                                                       g2->circular()[i] +
                                                       " is not covered by pr1/pr2");
    std::vector<ChartFunction> a, b;
    for (auto& f : aff) a.push_back(std::move(*f));
    for (auto& f : ang) b.push_back(std::move(*f));
    return VectorField(g2, std::move(a), std::move(b));
}

}  // namespace detail

// (X, X_M) multiplicative iff X is s- and t-related to X_M and (X, X) on
// G2 is m-related to X.  For action groupoids this reduces to each arrow
// component equalling an invariant base field.
inline Certificate is_multiplicative_vector_field(const Groupoid& g, const MultVectorField& x)
{
    if (const auto* gp = std::get_if<GroupoidPresentation>(&g)) {
        if (x.arrows.size() != 1 || !same_chart(x.arrows[0].chart(), gp->arrows) ||
            !same_chart(x.base.chart(), gp->base))
            throw std::invalid_argument("is_multiplicative_vector_field: chart mismatch");
        const VectorField& X = x.arrows[0];
        if (auto d = relatedness_defect(gp->src, X, x.base))
            return Certificate::fail("X not s-related to X_M at " + d->first, d->second.str());
        if (auto d = relatedness_defect(gp->tgt, X, x.base))
            return Certificate::fail("X not t-related to X_M at " + d->first, d->second.str());
        auto paired = detail::pair_field(*gp, X, X);
        if (std::holds_alternative<Certificate>(paired)) return std::get<Certificate>(paired);
        const VectorField& W = std::get<VectorField>(paired);
        if (auto d = relatedness_defect(gp->mul, W, X))
            return Certificate::fail("(X,X) not m-related to X at " + d->first,
                                     d->second.str());
        return Certificate::pass();
    }
    const auto& ag = std::get<DiscreteActionGroupoid>(g);
    if (x.arrows.size() != ag.size() || !same_chart(x.base.chart(), ag.base))
        throw std::invalid_argument("is_multiplicative_vector_field: chart mismatch");
    for (std::size_t i = 0; i < ag.size(); ++i) {
        // s = id on each component, so s-relatedness forces X_i = X_M
        VectorField d = x.arrows[i] - x.base;
        if (!d.is_zero())
            return Certificate::fail("component " + ag.elements[i] + " != X_M", d.str());
        // t = the action map, so t-relatedness is invariance
        if (auto def = relatedness_defect(ag.action[i], x.arrows[i], x.base))
            return Certificate::fail(
                "X_M not invariant under " + ag.elements[i] + " at " + def->first,
                def->second.str());
    }
    return Certificate::pass();
}

// Lie derivative of an arrow function along a multiplicative field.
inline ArrowFunction arrow_lie_derivative(const MultVectorField& x, const ArrowFunction& f)
{
    if (x.arrows.size() != f.comps.size())
        throw std::invalid_argument("arrow_lie_derivative: component count mismatch");
    ArrowFunction r;
    for (std::size_t i = 0; i < f.comps.size(); ++i)
        r.comps.push_back(x.arrows[i].apply(f.comps[i]));
    return r;
}

}  // namespace stackcalc
