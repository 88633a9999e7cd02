/*
 * multcalc.hpp
 * ------------
 * The 2-term complex of multiplicative functions, the dgla of
 * multiplicative vector fields, the bullet action and the graded module
 * operations, over a groupoid linked with its extracted Lie algebroid.
 *
 * Right-invariant fields are computed from the source-adapted chart data:
 * the frame field of a fiber coordinate w is
 *
 *     E_w(F) = (u∘t, id)^* [ d/dW ( m^* F ) ]
 *
 * where W is the first-slot copy of w on the composable chart, and the
 * left-invariant counterpart is alpha^l = -i_* alpha^r.
 */
#pragma once

#include <functional>

#include "stackcalc/algebroid.hpp"

namespace stackcalc {

namespace detail {

// Locates, for a fiber coordinate of G, the G2 coordinate carrying the
// first slot's copy of it (pr1-image must be a plain coordinate).
inline std::string first_slot_coordinate(const GroupoidPresentation& gp,
                                         const GroupoidPresentation::FiberCoordinate& fc)
{
    const ChartPtr& g2 = gp.pairs;
    if (!fc.circular) {
        const ChartFunction& im = gp.pr1.affine_image(fc.index);
        if (im.terms().size() == 1) {
            const auto& [mono, coeff] = *im.terms().begin();
            if (coeff.is_one() && monomial_degree(mono) == 1) {
                std::size_t gen = std::find(mono.begin(), mono.end(), 1) - mono.begin();
                if (gen < g2->n_affine()) return g2->affine()[gen];
            }
        }
    } else {
        const auto& [pc, ps] = gp.pr1.circular_image(fc.index);
        if (pc.terms().size() == 1 && ps.terms().size() == 1) {
            const auto& [mc, cc] = *pc.terms().begin();
            const auto& [ms, cs] = *ps.terms().begin();
            if (cc.is_one() && cs.is_one() && monomial_degree(mc) == 1 &&
                monomial_degree(ms) == 1) {
                std::size_t genc = std::find(mc.begin(), mc.end(), 1) - mc.begin();
                std::size_t gens = std::find(ms.begin(), ms.end(), 1) - ms.begin();
                if (genc >= g2->n_affine() && gens == genc + 1) {
                    std::size_t idx = (genc - g2->n_affine()) / 2;
                    if (g2->cos_index(idx) == genc) return g2->circular()[idx];
                }
            }
        }
    }
    throw std::invalid_argument(
        "presentation does not expose the first-slot fiber direction for coordinate " +
        fc.name);
}

// Builds a vector field on `target` from its action on generators via
// phi-pullback composed with `push`: coeff_v = push( action(phi^* v) ).
inline VectorField field_from_action(const ChartPtr& target, const SmoothMap& phi,
                                     const std::function<ChartFunction(const ChartFunction&)>& act)
{
    std::vector<ChartFunction> aff, ang;
    for (std::size_t j = 0; j < target->n_affine(); ++j)
        aff.push_back(act(phi.pullback(ChartFunction::generator(target, j))));
    for (std::size_t i = 0; i < target->n_circular(); ++i) {
        ChartFunction dc = act(phi.pullback(ChartFunction::generator(target, target->cos_index(i))));
        ChartFunction ds = act(phi.pullback(ChartFunction::generator(target, target->sin_index(i))));
        ChartFunction c = ChartFunction::generator(target, target->cos_index(i));
        ChartFunction s = ChartFunction::generator(target, target->sin_index(i));
        ang.push_back(c * ds - s * dc);
    }
    return VectorField(target, std::move(aff), std::move(ang));
}

}  // namespace detail

// Right-invariant frame fields E_k on the arrow chart, one per fiber
// coordinate of a source-adapted presentation.
inline std::vector<VectorField> frame_right_invariant_fields(const GroupoidPresentation& gp)
{
    if (!gp.source_adapted)
        throw std::invalid_argument("frame_right_invariant_fields: presentation is not source-adapted");
    std::vector<VectorField> out;
    for (const auto& fc : gp.fiber_coordinates()) {
        std::string w2 = detail::first_slot_coordinate(gp, fc);
        VectorField dir = VectorField::coordinate(gp.pairs, w2);
        // the direction must differentiate only the first slot
        VectorField dG = VectorField::coordinate(gp.arrows, fc.name);
        if (auto d = relatedness_defect(gp.pr2, dir, VectorField::zero(gp.arrows)))
            throw std::invalid_argument("first-slot direction for " + fc.name +
                                        " is not pr2-related to zero: " + d->second.str());
        if (auto d = relatedness_defect(gp.pr1, dir, dG))
            throw std::invalid_argument("first-slot direction for " + fc.name +
                                        " is not pr1-related to d/d" + fc.name + ": " +
                                        d->second.str());
        auto act = [&](const ChartFunction& f) {
            return gp.unit_left.pullback(dir.apply(gp.mul.pullback(f)));
        };
        std::vector<ChartFunction> aff, ang;
        for (std::size_t j = 0; j < gp.arrows->n_affine(); ++j)
            aff.push_back(act(ChartFunction::generator(gp.arrows, j)));
        for (std::size_t i = 0; i < gp.arrows->n_circular(); ++i) {
            ChartFunction dc = act(ChartFunction::generator(gp.arrows, gp.arrows->cos_index(i)));
            ChartFunction ds = act(ChartFunction::generator(gp.arrows, gp.arrows->sin_index(i)));
            ChartFunction c = ChartFunction::generator(gp.arrows, gp.arrows->cos_index(i));
            ChartFunction s = ChartFunction::generator(gp.arrows, gp.arrows->sin_index(i));
            ang.push_back(c * ds - s * dc);
        }
        out.emplace_back(gp.arrows, std::move(aff), std::move(ang));
    }
    return out;
}

// A groupoid together with its extracted Lie algebroid and cached
// right-invariant frame fields.  Action groupoids are étale, so their
// algebroid has empty frame.
class LinkedGroupoid {
public:
    explicit LinkedGroupoid(Groupoid g) : groupoid_(std::move(g))
    {
        if (const auto* gp = std::get_if<GroupoidPresentation>(&groupoid_)) {
            if (!gp->source_adapted)
                throw std::invalid_argument("LinkedGroupoid: presentation is not source-adapted");
            frame_rinv_ = frame_right_invariant_fields(*gp);
            algebroid_ = extract_algebroid(*gp, frame_rinv_);
        } else {
            const auto& ag = std::get<DiscreteActionGroupoid>(groupoid_);
            algebroid_.name = ag.name;
            algebroid_.parameters = ag.parameters;
            algebroid_.base = ag.base;
        }
    }

    const Groupoid& groupoid() const { return groupoid_; }
    const AlgebroidPresentation& algebroid() const { return algebroid_; }
    const GroupoidPresentation* chart_presentation() const
    {
        return std::get_if<GroupoidPresentation>(&groupoid_);
    }
    const DiscreteActionGroupoid* action_presentation() const
    {
        return std::get_if<DiscreteActionGroupoid>(&groupoid_);
    }
    const ChartPtr& base() const { return base_chart(groupoid_); }
    const std::string& name() const { return groupoid_name(groupoid_); }
    const std::vector<VectorField>& frame_fields() const { return frame_rinv_; }

    // ---- degree-wise pieces -------------------------------------------

    ArrowFunction delta(const ChartFunction& f) const
    {
        if (!same_chart(f.chart(), base()))
            throw std::invalid_argument("delta: function not on the base chart");
        ArrowFunction out;
        if (const auto* gp = chart_presentation()) {
            out.comps.push_back(gp->tgt.pullback(f) - gp->src.pullback(f));
        } else {
            const auto& ag = *action_presentation();
            for (std::size_t i = 0; i < ag.size(); ++i)
                out.comps.push_back(ag.action[i].pullback(f) - f);
        }
        return out;
    }

    VectorField alpha_r(const AlgebroidSection& s) const
    {
        const auto* gp = chart_presentation();
        if (!gp) {
            if (!s.coeffs.empty())
                throw std::invalid_argument("alpha_r: action groupoid has trivial algebroid");
            throw std::invalid_argument("alpha_r: no sections on an étale action groupoid");
        }
        if (s.coeffs.size() != frame_rinv_.size())
            throw std::invalid_argument("alpha_r: frame mismatch");
        VectorField v = VectorField::zero(gp->arrows);
        for (std::size_t k = 0; k < frame_rinv_.size(); ++k)
            v += gp->tgt.pullback(s.coeffs[k]) * frame_rinv_[k];
        return v;
    }

    VectorField alpha_l(const AlgebroidSection& s) const
    {
        const auto* gp = chart_presentation();
        VectorField ar = alpha_r(s);
        return -pushforward(gp->inv, gp->inv, ar);
    }

    // Restriction to M of a vertical field on G, by unit-pullback of the
    // fiber coefficients; rejects fields that are not vertical along M.
    AlgebroidSection restrict_to_base(const VectorField& v) const
    {
        const auto* gp = chart_presentation();
        if (!gp) throw std::invalid_argument("restrict_to_base: chart presentation required");
        AlgebroidSection s = algebroid_.zero_section();
        auto fibers = gp->fiber_coordinates();
        for (std::size_t k = 0; k < fibers.size(); ++k) {
            const auto& fc = fibers[k];
            s.coeffs[k] = fc.circular ? gp->unit.pullback(v.angular_coeff(fc.index))
                                      : gp->unit.pullback(v.affine_coeff(fc.index));
        }
        // base-block components must vanish along M
        for (std::size_t j = 0; j < gp->arrows->n_affine(); ++j) {
            const std::string& n = gp->arrows->affine()[j];
            if (std::find(gp->source_block_affine.begin(), gp->source_block_affine.end(), n) ==
                gp->source_block_affine.end())
                continue;
            ChartFunction r = gp->unit.pullback(v.affine_coeff(j));
            if (!r.is_zero())
                throw std::invalid_argument("restrict_to_base: field not vertical along M at " +
                                            n + ": " + r.str());
        }
        for (std::size_t i = 0; i < gp->arrows->n_circular(); ++i) {
            const std::string& n = gp->arrows->circular()[i];
            if (std::find(gp->source_block_circular.begin(), gp->source_block_circular.end(),
                          n) == gp->source_block_circular.end())
                continue;
            ChartFunction r = gp->unit.pullback(v.angular_coeff(i));
            if (!r.is_zero())
                throw std::invalid_argument("restrict_to_base: field not vertical along M at " +
                                            n + ": " + r.str());
        }
        return s;
    }

    // partial(alpha) = alpha^r - alpha^l with base field a(alpha).
    MultVectorField partial(const AlgebroidSection& s) const
    {
        MultVectorField x = zero_mult_field(groupoid_);
        if (algebroid_.rank() == 0) return x;
        x.arrows[0] = alpha_r(s) - alpha_l(s);
        x.base = algebroid_.anchor(s);
        return x;
    }

    // ---- the bullet operation -----------------------------------------

    ChartFunction bullet_Xf(const MultVectorField& x, const ChartFunction& f) const
    {
        return x.base.apply(f);
    }
    ArrowFunction bullet_XF(const MultVectorField& x, const ArrowFunction& f) const
    {
        return arrow_lie_derivative(x, f);
    }
    // alpha bullet f = 0
    ChartFunction bullet_aF(const AlgebroidSection& s, const ArrowFunction& f) const
    {
        if (algebroid_.rank() == 0) return ChartFunction::zero(base());
        const auto* gp = chart_presentation();
        return gp->unit.pullback(alpha_r(s).apply(f.comps[0]));
    }

    // ---- graded brackets ----------------------------------------------

    MultVectorField field_bracket(const MultVectorField& x, const MultVectorField& y) const
    {
        MultVectorField r;
        for (std::size_t i = 0; i < x.arrows.size(); ++i)
            r.arrows.push_back(bracket(x.arrows[i], y.arrows[i]));
        r.base = bracket(x.base, y.base);
        return r;
    }

    // [[X, alpha]] = [X, alpha^r]|_M
    AlgebroidSection mixed_bracket(const MultVectorField& x, const AlgebroidSection& s) const
    {
        if (algebroid_.rank() == 0) return algebroid_.zero_section();
        return restrict_to_base(bracket(x.arrows[0], alpha_r(s)));
    }

private:
    static AlgebroidPresentation extract_algebroid(const GroupoidPresentation& gp,
                                                   const std::vector<VectorField>& frame_rinv)
    {
        AlgebroidPresentation a;
        a.name = gp.name;
        a.parameters = gp.parameters;
        a.base = gp.base;
        auto fibers = gp.fiber_coordinates();
        for (const auto& fc : fibers) a.frame.push_back("e_" + fc.name);
        // anchor: a(e_k) = dt ∘ E_k ∘ u
        for (std::size_t k = 0; k < fibers.size(); ++k) {
            auto act = [&](const ChartFunction& f) {
                return gp.unit.pullback(frame_rinv[k].apply(gp.tgt.pullback(f)));
            };
            a.anchor_frame.push_back(detail::field_from_action(
                gp.base, SmoothMap::identity(gp.base), act));
        }
        // bracket structure: [e_i, e_j] = [E_i, E_j]|_M
        LinkedTools tools{gp, fibers};
        a.structure.assign(fibers.size(), {});
        for (std::size_t i = 0; i < fibers.size(); ++i) {
            for (std::size_t j = 0; j < fibers.size(); ++j) {
                VectorField br = bracket(frame_rinv[i], frame_rinv[j]);
                a.structure[i].push_back(tools.restrict(a, br));
            }
        }
        return a;
    }

    // restriction helper usable before the LinkedGroupoid is fully built
    struct LinkedTools {
        const GroupoidPresentation& gp;
        std::vector<GroupoidPresentation::FiberCoordinate> fibers;
        AlgebroidSection restrict(const AlgebroidPresentation& a, const VectorField& v) const
        {
            AlgebroidSection s = a.zero_section();
            for (std::size_t k = 0; k < fibers.size(); ++k) {
                const auto& fc = fibers[k];
                s.coeffs[k] = fc.circular ? gp.unit.pullback(v.angular_coeff(fc.index))
                                          : gp.unit.pullback(v.affine_coeff(fc.index));
            }
            return s;
        }
    };

    Groupoid groupoid_;
    AlgebroidPresentation algebroid_;
    std::vector<VectorField> frame_rinv_;
};

// Graded element of the function complex: degree 0 and 1 parts.
struct GradedFunElement {
    ChartFunction f;
    ArrowFunction F;
};

// Graded element of the multiplicative-field dgla: degree -1 and 0 parts.
struct GradedVFElement {
    AlgebroidSection alpha;
    MultVectorField X;
};

inline GradedFunElement zero_fun_element(const LinkedGroupoid& lg)
{
    return {ChartFunction::zero(lg.base()), zero_arrow_function(lg.groupoid())};
}
inline GradedVFElement zero_vf_element(const LinkedGroupoid& lg)
{
    return {lg.algebroid().zero_section(), zero_mult_field(lg.groupoid())};
}

// mu(x, y) = (alpha • F + X • f, X • F)
inline GradedFunElement mu(const LinkedGroupoid& lg, const GradedVFElement& x,
                           const GradedFunElement& y)
{
    GradedFunElement r;
    r.f = lg.bullet_aF(x.alpha, y.F) + lg.bullet_Xf(x.X, y.f);
    r.F = lg.bullet_XF(x.X, y.F);
    return r;
}

// Full graded bracket on the multiplicative dgla; the degree -2 component
// of [alpha, beta] is identically zero and is dropped.
inline GradedVFElement bracket2(const LinkedGroupoid& lg, const GradedVFElement& x1,
                                const GradedVFElement& x2)
{
    GradedVFElement r;
    r.X = lg.field_bracket(x1.X, x2.X);
    r.alpha = lg.mixed_bracket(x1.X, x2.alpha);
    r.alpha += -lg.mixed_bracket(x2.X, x1.alpha);
    return r;
}

// The invariant-function action f ⊗ (alpha, X) -> (f alpha, (t^* f) X).
inline GradedVFElement cm0_action(const LinkedGroupoid& lg, const ChartFunction& f,
                                  const GradedVFElement& x)
{
    ArrowFunction df = lg.delta(f);
    if (!df.is_zero())
        throw std::invalid_argument("cm0_action: function is not invariant: delta f = " +
                                    df.str());
    GradedVFElement r;
    r.alpha = f * x.alpha;
    if (const auto* gp = lg.chart_presentation()) {
        r.X.arrows.push_back(gp->tgt.pullback(f) * x.X.arrows[0]);
    } else {
        const auto& ag = *lg.action_presentation();
        for (std::size_t i = 0; i < ag.size(); ++i)
            r.X.arrows.push_back(ag.action[i].pullback(f) * x.X.arrows[i]);
    }
    r.X.base = f * x.X.base;
    return r;
}

// H-level product [y] · [x]: preconditions checked exactly, result
// re-verified to be multiplicative.
struct HCdotResult {
    GradedVFElement value;
    Certificate precondition;
    Certificate membership;
};

inline HCdotResult h_cdot(const LinkedGroupoid& lg, const GradedFunElement& y,
                          const GradedVFElement& x)
{
    HCdotResult res;
    res.value = zero_vf_element(lg);
    ArrowFunction df = lg.delta(y.f);
    if (!df.is_zero()) {
        res.precondition = Certificate::fail("f not invariant", df.str());
        return res;
    }
    if (auto c = is_multiplicative_function(lg.groupoid(), y.F); !c) {
        res.precondition = Certificate::fail("F not multiplicative", c.str());
        return res;
    }
    MultVectorField pa = lg.partial(x.alpha);
    if (!pa.is_zero()) {
        res.precondition = Certificate::fail("alpha not in ker ∂", pa.str());
        return res;
    }
    if (auto c = is_multiplicative_vector_field(lg.groupoid(), x.X); !c) {
        res.precondition = Certificate::fail("X not multiplicative", c.str());
        return res;
    }
    res.precondition = Certificate::pass();

    // value = (f alpha, (t^*f) X + F alpha^r); [F]·[X] = 0 by definition
    res.value = cm0_action(lg, y.f, x);
    if (lg.algebroid().rank() > 0 && !x.alpha.is_zero()) {
        const auto* gp = lg.chart_presentation();
        res.value.X.arrows[0] += y.F.comps[0] * lg.alpha_r(x.alpha);
        (void)gp;
    }
    res.membership = is_multiplicative_vector_field(lg.groupoid(), res.value.X);
    if (res.membership) {
        MultVectorField pfa = lg.partial(res.value.alpha);
        if (!pfa.is_zero())
            res.membership = Certificate::fail("∂(f alpha) != 0", pfa.str());
    }
    return res;
}

}  // namespace stackcalc
