/*
 * algebroid.hpp
 * -------------
 * Lie algebroid presentations over a chart: a finite frame of section
 * symbols, an anchor field per frame element, and bracket structure
 * functions.  Sections, frame-dual cocycles and algebroid derivations are
 * stored by their frame data; values on general sections follow from
 * Leibniz.
 */
#pragma once

#include "stackcalc/groupoid.hpp"

namespace stackcalc {

struct AlgebroidSection {
    std::vector<ChartFunction> coeffs;  // over the frame

    bool is_zero() const
    {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    AlgebroidSection operator-() const
    {
        AlgebroidSection r;
        for (const auto& c : coeffs) r.coeffs.push_back(-c);
        return r;
    }
    AlgebroidSection& operator+=(const AlgebroidSection& o)
    {
        if (coeffs.size() != o.coeffs.size())
            throw std::invalid_argument("AlgebroidSection: frame mismatch");
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    friend AlgebroidSection operator+(AlgebroidSection a, const AlgebroidSection& b)
    {
        a += b;
        return a;
    }
    friend AlgebroidSection operator-(AlgebroidSection a, const AlgebroidSection& b)
    {
        a += -b;
        return a;
    }
    friend AlgebroidSection operator*(const ChartFunction& f, const AlgebroidSection& s)
    {
        AlgebroidSection r;
        for (const auto& c : s.coeffs) r.coeffs.push_back(f * c);
        return r;
    }
    friend AlgebroidSection operator*(const Scalar& c, const AlgebroidSection& s)
    {
        AlgebroidSection r;
        for (const auto& x : s.coeffs) r.coeffs.push_back(c * x);
        return r;
    }
    bool operator==(const AlgebroidSection& o) const { return coeffs == o.coeffs; }
    bool operator!=(const AlgebroidSection& o) const { return !(*this == o); }
    std::string str(const std::vector<std::string>& frame) const
    {
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeffs[i].str() + ")*" + frame[i];
        }
        return s.empty() ? "0" : s;
    }
};

// Frame-dual assignment omega(e_k); a 1-cochain on the algebroid.
struct IMFunction {
    std::vector<ChartFunction> values;

    bool is_zero() const
    {
        for (const auto& v : values)
            if (!v.is_zero()) return false;
        return true;
    }
    IMFunction operator-() const
    {
        IMFunction r;
        for (const auto& v : values) r.values.push_back(-v);
        return r;
    }
    IMFunction& operator+=(const IMFunction& o)
    {
        if (values.size() != o.values.size())
            throw std::invalid_argument("IMFunction: frame mismatch");
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
        return *this;
    }
    friend IMFunction operator+(IMFunction a, const IMFunction& b) { a += b; return a; }
    friend IMFunction operator-(IMFunction a, const IMFunction& b) { a += -b; return a; }
    friend IMFunction operator*(const ChartFunction& f, const IMFunction& w)
    {
        IMFunction r;
        for (const auto& v : w.values) r.values.push_back(f * v);
        return r;
    }
    bool operator==(const IMFunction& o) const { return values == o.values; }
    bool operator!=(const IMFunction& o) const { return !(*this == o); }
};

// A Lie algebroid derivation (D, sigma(D)) stored by its frame action.
struct AlgebroidDerivation {
    VectorField symbol;
    std::vector<AlgebroidSection> frame_action;  // D(e_k)

    bool is_zero() const
    {
        for (const auto& s : frame_action)
            if (!s.is_zero()) return false;
        return symbol.is_zero();
    }
    AlgebroidDerivation operator-() const
    {
        AlgebroidDerivation r;
        r.symbol = -symbol;
        for (const auto& s : frame_action) r.frame_action.push_back(-s);
        return r;
    }
    AlgebroidDerivation& operator+=(const AlgebroidDerivation& o)
    {
        if (frame_action.size() != o.frame_action.size())
            throw std::invalid_argument("AlgebroidDerivation: frame mismatch");
        symbol += o.symbol;
        for (std::size_t i = 0; i < frame_action.size(); ++i)
            frame_action[i] += o.frame_action[i];
        return *this;
    }
    friend AlgebroidDerivation operator+(AlgebroidDerivation a, const AlgebroidDerivation& b)
    {
        a += b;
        return a;
    }
    friend AlgebroidDerivation operator-(AlgebroidDerivation a, const AlgebroidDerivation& b)
    {
        a += -b;
        return a;
    }
    bool operator==(const AlgebroidDerivation& o) const
    {
        return symbol == o.symbol && frame_action == o.frame_action;
    }
    bool operator!=(const AlgebroidDerivation& o) const { return !(*this == o); }
};

struct AlgebroidPresentation {
    std::string name;
    std::vector<std::string> parameters;

    ChartPtr base;
    std::vector<std::string> frame;
    std::vector<VectorField> anchor_frame;  // a(e_k)
    // structure[i][j] = [e_i, e_j] as a section
    std::vector<std::vector<AlgebroidSection>> structure;

    std::size_t rank() const { return frame.size(); }

    AlgebroidSection zero_section() const
    {
        AlgebroidSection s;
        s.coeffs.assign(frame.size(), ChartFunction::zero(base));
        return s;
    }
    AlgebroidSection frame_section(std::size_t k) const
    {
        AlgebroidSection s = zero_section();
        s.coeffs[k] = ChartFunction::one(base);
        return s;
    }

    VectorField anchor(const AlgebroidSection& s) const
    {
        VectorField v = VectorField::zero(base);
        for (std::size_t k = 0; k < frame.size(); ++k)
            v += s.coeffs[k] * anchor_frame[k];
        return v;
    }

    // [a, b] extended from the frame by the Leibniz rule.
    AlgebroidSection section_bracket(const AlgebroidSection& a, const AlgebroidSection& b) const
    {
        AlgebroidSection r = zero_section();
        for (std::size_t i = 0; i < frame.size(); ++i) {
            if (a.coeffs[i].is_zero()) continue;
            for (std::size_t j = 0; j < frame.size(); ++j) {
                if (!b.coeffs[j].is_zero())
                    r += (a.coeffs[i] * b.coeffs[j]) * structure[i][j];
            }
        }
        for (std::size_t j = 0; j < frame.size(); ++j) {
            AlgebroidSection term = zero_section();
            for (std::size_t i = 0; i < frame.size(); ++i) {
                if (a.coeffs[i].is_zero()) continue;
                term.coeffs[j] += a.coeffs[i] * anchor_frame[i].apply(b.coeffs[j]);
            }
            r += term;
        }
        for (std::size_t i = 0; i < frame.size(); ++i) {
            AlgebroidSection term = zero_section();
            for (std::size_t j = 0; j < frame.size(); ++j) {
                if (b.coeffs[j].is_zero()) continue;
                term.coeffs[i] -= b.coeffs[j] * anchor_frame[j].apply(a.coeffs[i]);
            }
            r += term;
        }
        return r;
    }

    // D extended from frame data by the Leibniz rule.
    AlgebroidSection apply_derivation(const AlgebroidDerivation& d,
                                      const AlgebroidSection& s) const
    {
        AlgebroidSection r = zero_section();
        for (std::size_t k = 0; k < frame.size(); ++k) {
            r.coeffs[k] += d.symbol.apply(s.coeffs[k]);
            if (!s.coeffs[k].is_zero()) r += s.coeffs[k] * d.frame_action[k];
        }
        return r;
    }

    ValidationReport validate() const
    {
        ValidationReport report;
        auto note = [&](const std::string& axiom, const AlgebroidSection& defect) {
            if (defect.is_zero())
                report.checks.push_back({axiom, true, ""});
            else
                report.checks.push_back({axiom, false, defect.str(frame)});
        };
        for (std::size_t i = 0; i < frame.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                note("antisymmetry [" + frame[i] + "," + frame[j] + "]",
                     structure[i][j] + structure[j][i]);
        for (std::size_t i = 0; i < frame.size(); ++i)
            for (std::size_t j = 0; j < frame.size(); ++j)
                for (std::size_t k = 0; k < frame.size(); ++k) {
                    AlgebroidSection jac =
                        section_bracket(frame_section(i), section_bracket(frame_section(j),
                                                                          frame_section(k))) +
                        section_bracket(frame_section(j), section_bracket(frame_section(k),
                                                                          frame_section(i))) +
                        section_bracket(frame_section(k), section_bracket(frame_section(i),
                                                                          frame_section(j)));
                    note("Jacobi (" + frame[i] + "," + frame[j] + "," + frame[k] + ")", jac);
                }
        for (std::size_t i = 0; i < frame.size(); ++i)
            for (std::size_t j = 0; j < frame.size(); ++j) {
                VectorField defect =
                    anchor(structure[i][j]) - bracket(anchor_frame[i], anchor_frame[j]);
                report.checks.push_back(
                    {"anchor compatibility a([" + frame[i] + "," + frame[j] + "])",
                     defect.is_zero(), defect.is_zero() ? "" : defect.str()});
            }
        return report;
    }

    // Checks the cocycle identity on frame pairs.
    Certificate cocycle_defect(const IMFunction& w) const
    {
        if (w.values.size() != frame.size())
            throw std::invalid_argument("cocycle_defect: frame mismatch");
        for (std::size_t i = 0; i < frame.size(); ++i)
            for (std::size_t j = 0; j < frame.size(); ++j) {
                ChartFunction d = anchor_frame[i].apply(w.values[j]) -
                                  anchor_frame[j].apply(w.values[i]) -
                                  evaluate(w, structure[i][j]);
                if (!d.is_zero())
                    return Certificate::fail(
                        "cocycle identity at (" + frame[i] + "," + frame[j] + ")", d.str());
            }
        return Certificate::pass();
    }

    ChartFunction evaluate(const IMFunction& w, const AlgebroidSection& s) const
    {
        ChartFunction r = ChartFunction::zero(base);
        for (std::size_t k = 0; k < frame.size(); ++k) r += s.coeffs[k] * w.values[k];
        return r;
    }

    // Membership test for Der(A): Leibniz holds by construction; checks the
    // anchor compatibility and the Lie-derivation property on frame pairs.
    Certificate derivation_defect(const AlgebroidDerivation& d) const
    {
        if (d.frame_action.size() != frame.size())
            throw std::invalid_argument("derivation_defect: frame mismatch");
        for (std::size_t k = 0; k < frame.size(); ++k) {
            VectorField defect =
                anchor(d.frame_action[k]) - bracket(d.symbol, anchor_frame[k]);
            if (!defect.is_zero())
                return Certificate::fail("anchor compatibility a(D " + frame[k] + ")",
                                         defect.str());
        }
        for (std::size_t i = 0; i < frame.size(); ++i)
            for (std::size_t j = 0; j < frame.size(); ++j) {
                AlgebroidSection defect =
                    apply_derivation(d, structure[i][j]) -
                    section_bracket(d.frame_action[i], frame_section(j)) -
                    section_bracket(frame_section(i), d.frame_action[j]);
                if (!defect.is_zero())
                    return Certificate::fail(
                        "derivation property on [" + frame[i] + "," + frame[j] + "]",
                        defect.str(frame));
            }
        return Certificate::pass();
    }
};

// d_A f : e_k -> L_{a(e_k)} f.
inline IMFunction dA(const AlgebroidPresentation& a, const ChartFunction& f)
{
    if (!same_chart(f.chart(), a.base))
        throw std::invalid_argument("dA: chart mismatch");
    IMFunction w;
    for (const auto& v : a.anchor_frame) w.values.push_back(v.apply(f));
    return w;
}

// ad : alpha -> ([alpha, -], a(alpha)), the differential of the 2-term dgla.
inline AlgebroidDerivation ad(const AlgebroidPresentation& a, const AlgebroidSection& s)
{
    AlgebroidDerivation d;
    d.symbol = a.anchor(s);
    for (std::size_t k = 0; k < a.rank(); ++k)
        d.frame_action.push_back(a.section_bracket(s, a.frame_section(k)));
    return d;
}

// Degree-0 bracket: commutator of derivations, symbol bracket on symbols.
inline AlgebroidDerivation derivation_bracket(const AlgebroidPresentation& a,
                                              const AlgebroidDerivation& d1,
                                              const AlgebroidDerivation& d2)
{
    AlgebroidDerivation r;
    r.symbol = bracket(d1.symbol, d2.symbol);
    for (std::size_t k = 0; k < a.rank(); ++k)
        r.frame_action.push_back(a.apply_derivation(d1, d2.frame_action[k]) -
                                 a.apply_derivation(d2, d1.frame_action[k]));
    return r;
}

// The module operation cases of the infinitesimal action.
inline ChartFunction obullet_Df(const AlgebroidDerivation& d, const ChartFunction& f)
{
    return d.symbol.apply(f);
}
inline IMFunction obullet_Dw(const AlgebroidPresentation& a, const AlgebroidDerivation& d,
                             const IMFunction& w)
{
    IMFunction r;
    for (std::size_t k = 0; k < a.rank(); ++k)
        r.values.push_back(d.symbol.apply(w.values[k]) - a.evaluate(w, d.frame_action[k]));
    return r;
}
inline ChartFunction obullet_aw(const AlgebroidPresentation& a, const AlgebroidSection& s,
                                const IMFunction& w)
{
    return a.evaluate(w, s);
}
// alpha obullet f = 0 by definition.

// Graded element of the infinitesimal complex: degree 0 and 1 parts.
struct GradedIMElement {
    ChartFunction f;
    IMFunction w;
};

// Graded element of the derivation dgla: degree -1 and 0 parts.
struct GradedDerElement {
    AlgebroidSection alpha;
    AlgebroidDerivation d;
};

// mu-bar, assembled from the obullet cases.
inline GradedIMElement mu_bar(const AlgebroidPresentation& a, const GradedDerElement& x,
                              const GradedIMElement& y)
{
    GradedIMElement r;
    r.f = obullet_aw(a, x.alpha, y.w) + obullet_Df(x.d, y.f);
    r.w = obullet_Dw(a, x.d, y.w);
    return r;
}

// Full graded bracket of the derivation dgla.
inline GradedDerElement dgla_A_bracket(const AlgebroidPresentation& a,
                                       const GradedDerElement& x1, const GradedDerElement& x2)
{
    GradedDerElement r;
    r.d = derivation_bracket(a, x1.d, x2.d);
    // [D, alpha] = D(alpha), [alpha, D] = -D(alpha); degree -2 part drops
    AlgebroidSection s = a.apply_derivation(x1.d, x2.alpha);
    s += -a.apply_derivation(x2.d, x1.alpha);
    r.alpha = s;
    return r;
}

// The H-level action [omega] . [alpha] = [omega alpha] etc., with the
// preconditions checked exactly and the result re-verified.
struct HOcdotResult {
    GradedDerElement value;
    Certificate precondition;
    Certificate membership;  // omega*alpha is a derivation with zero symbol
};

inline HOcdotResult h_ocdot(const AlgebroidPresentation& a, const GradedIMElement& y,
                            const GradedDerElement& x)
{
    HOcdotResult res;
    res.value.alpha = a.zero_section();
    res.value.d.symbol = VectorField::zero(a.base);
    res.value.d.frame_action.assign(a.rank(), a.zero_section());
    // preconditions: f in ker dA, omega a cocycle, alpha in ker ad
    IMFunction df = dA(a, y.f);
    if (!df.is_zero()) {
        res.precondition = Certificate::fail("f not in ker dA", "dA f != 0");
        return res;
    }
    if (auto c = a.cocycle_defect(y.w); !c) {
        res.precondition = c;
        return res;
    }
    AlgebroidDerivation ad_alpha = ad(a, x.alpha);
    if (!ad_alpha.is_zero()) {
        res.precondition = Certificate::fail("alpha not in ker ad", "ad(alpha) != 0");
        return res;
    }
    res.precondition = Certificate::pass();

    // [f].[alpha] = [f alpha]; [f].[D] = [fD]; [omega].[alpha] = [omega alpha];
    // [omega].[D] = 0
    res.value.alpha = y.f * x.alpha;
    GradedDerElement& v = res.value;
    v.d.symbol = y.f * x.d.symbol;
    for (std::size_t k = 0; k < a.rank(); ++k) {
        v.d.frame_action[k] = y.f * x.d.frame_action[k];
        // omega alpha : beta -> omega(beta) alpha
        v.d.frame_action[k] += y.w.values[k] * x.alpha;
    }
    res.membership = a.derivation_defect(v.d);
    return res;
}

}  // namespace stackcalc
