/*
 * vector_field.hpp
 * ----------------
 * Derivations of a chart's function ring.  A vector field is stored as one
 * coefficient per generator derivation: d/dx for each affine coordinate and
 * the angular derivation d_theta (c -> -s, s -> c) for each circular one.
 * These frame derivations commute, so the commutator has the usual
 * coefficient formula.
 */
#pragma once

#include "stackcalc/smooth_map.hpp"

namespace stackcalc {

class VectorField {
public:
    VectorField() = default;

    explicit VectorField(ChartPtr chart)
        : chart_(std::move(chart)),
          affine_coeffs_(chart_->n_affine(), ChartFunction::zero(chart_)),
          angular_coeffs_(chart_->n_circular(), ChartFunction::zero(chart_))
    {
    }

    VectorField(ChartPtr chart, std::vector<ChartFunction> affine_coeffs,
                std::vector<ChartFunction> angular_coeffs)
        : chart_(std::move(chart)),
          affine_coeffs_(std::move(affine_coeffs)),
          angular_coeffs_(std::move(angular_coeffs))
    {
        if (affine_coeffs_.size() != chart_->n_affine() ||
            angular_coeffs_.size() != chart_->n_circular())
            throw std::invalid_argument("VectorField: wrong number of coefficients");
        for (const auto& f : affine_coeffs_)
            if (!same_chart(f.chart(), chart_))
                throw std::invalid_argument("VectorField: coefficient chart mismatch");
        for (const auto& f : angular_coeffs_)
            if (!same_chart(f.chart(), chart_))
                throw std::invalid_argument("VectorField: coefficient chart mismatch");
    }

    static VectorField zero(const ChartPtr& chart) { return VectorField(chart); }

    // d/dx for affine coordinate `name`.
    static VectorField coordinate(const ChartPtr& chart, const std::string& name)
    {
        VectorField v(chart);
        auto pa = chart->affine_position(name);
        if (pa) {
            v.affine_coeffs_[*pa] = ChartFunction::one(chart);
            return v;
        }
        auto pc = chart->circular_position(name);
        if (pc) {
            v.angular_coeffs_[*pc] = ChartFunction::one(chart);
            return v;
        }
        throw std::invalid_argument("VectorField: unknown coordinate " + name);
    }

    const ChartPtr& chart() const { return chart_; }
    const ChartFunction& affine_coeff(std::size_t j) const { return affine_coeffs_[j]; }
    const ChartFunction& angular_coeff(std::size_t i) const { return angular_coeffs_[i]; }
    std::vector<ChartFunction>& affine_coeffs() { return affine_coeffs_; }
    std::vector<ChartFunction>& angular_coeffs() { return angular_coeffs_; }

    bool is_zero() const
    {
        for (const auto& f : affine_coeffs_)
            if (!f.is_zero()) return false;
        for (const auto& f : angular_coeffs_)
            if (!f.is_zero()) return false;
        return true;
    }

    // Lie derivative of f along this field.
    ChartFunction apply(const ChartFunction& f) const
    {
        if (!same_chart(f.chart(), chart_))
            throw std::invalid_argument("VectorField::apply: chart mismatch");
        ChartFunction r = ChartFunction::zero(chart_);
        for (std::size_t j = 0; j < affine_coeffs_.size(); ++j)
            if (!affine_coeffs_[j].is_zero()) r += affine_coeffs_[j] * f.d_affine(j);
        for (std::size_t i = 0; i < angular_coeffs_.size(); ++i)
            if (!angular_coeffs_[i].is_zero()) r += angular_coeffs_[i] * f.d_angular(i);
        return r;
    }

    VectorField operator-() const
    {
        VectorField r(chart_);
        for (std::size_t j = 0; j < affine_coeffs_.size(); ++j)
            r.affine_coeffs_[j] = -affine_coeffs_[j];
        for (std::size_t i = 0; i < angular_coeffs_.size(); ++i)
            r.angular_coeffs_[i] = -angular_coeffs_[i];
        return r;
    }

    VectorField& operator+=(const VectorField& o)
    {
        require_same_chart(o);
        for (std::size_t j = 0; j < affine_coeffs_.size(); ++j)
            affine_coeffs_[j] += o.affine_coeffs_[j];
        for (std::size_t i = 0; i < angular_coeffs_.size(); ++i)
            angular_coeffs_[i] += o.angular_coeffs_[i];
        return *this;
    }
    VectorField& operator-=(const VectorField& o) { return *this += -o; }
    friend VectorField operator+(VectorField a, const VectorField& b) { a += b; return a; }
    friend VectorField operator-(VectorField a, const VectorField& b) { a -= b; return a; }

    friend VectorField operator*(const ChartFunction& f, const VectorField& v)
    {
        if (!same_chart(f.chart(), v.chart_))
            throw std::invalid_argument("VectorField scaling: chart mismatch");
        VectorField r(v.chart_);
        for (std::size_t j = 0; j < v.affine_coeffs_.size(); ++j)
            r.affine_coeffs_[j] = f * v.affine_coeffs_[j];
        for (std::size_t i = 0; i < v.angular_coeffs_.size(); ++i)
            r.angular_coeffs_[i] = f * v.angular_coeffs_[i];
        return r;
    }
    friend VectorField operator*(const Scalar& c, const VectorField& v)
    {
        return ChartFunction::constant(v.chart_, c) * v;
    }

    bool operator==(const VectorField& o) const
    {
        return same_chart(chart_, o.chart_) && affine_coeffs_ == o.affine_coeffs_ &&
               angular_coeffs_ == o.angular_coeffs_;
    }
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    std::string str() const
    {
        std::string s;
        auto emit = [&](const ChartFunction& f, const std::string& d) {
            if (f.is_zero()) return;
            if (!s.empty()) s += " + ";
            if (f.is_constant() && f.constant_value().is_one())
                s += d;
            else
                s += "(" + f.str() + ")*" + d;
        };
        for (std::size_t j = 0; j < affine_coeffs_.size(); ++j)
            emit(affine_coeffs_[j], "d/d" + chart_->affine()[j]);
        for (std::size_t i = 0; i < angular_coeffs_.size(); ++i)
            emit(angular_coeffs_[i], "d/d" + chart_->circular()[i]);
        return s.empty() ? "0" : s;
    }

private:
    void require_same_chart(const VectorField& o) const
    {
        if (!same_chart(chart_, o.chart_))
            throw std::invalid_argument("VectorField: chart mismatch");
    }

    ChartPtr chart_;
    std::vector<ChartFunction> affine_coeffs_;
    std::vector<ChartFunction> angular_coeffs_;
};

// Commutator [X, Y].  The generator derivations commute pairwise, so the
// coefficients are X(b_k) - Y(a_k).
inline VectorField bracket(const VectorField& x, const VectorField& y)
{
    if (!same_chart(x.chart(), y.chart()))
        throw std::invalid_argument("bracket: chart mismatch");
    const ChartPtr& chart = x.chart();
    std::vector<ChartFunction> aff, ang;
    for (std::size_t j = 0; j < chart->n_affine(); ++j)
        aff.push_back(x.apply(y.affine_coeff(j)) - y.apply(x.affine_coeff(j)));
    for (std::size_t i = 0; i < chart->n_circular(); ++i)
        ang.push_back(x.apply(y.angular_coeff(i)) - y.apply(x.angular_coeff(i)));
    return VectorField(chart, std::move(aff), std::move(ang));
}

// Pushforward of X along a diffeomorphism phi with supplied inverse.
// Defined by L_{phi_* X} f = inverse^* ( L_X ( phi^* f ) ).
inline VectorField pushforward(const SmoothMap& phi, const SmoothMap& inverse,
                               const VectorField& x)
{
    if (!same_chart(x.chart(), phi.source()))
        throw std::invalid_argument("pushforward: field not on the map's source");
    if (!same_chart(inverse.source(), phi.target()) ||
        !same_chart(inverse.target(), phi.source()))
        throw std::invalid_argument("pushforward: inverse charts mismatch");
    // verify the declared inverse on generators
    if (phi.after(inverse) != SmoothMap::identity(phi.target()) ||
        inverse.after(phi) != SmoothMap::identity(phi.source()))
        throw std::invalid_argument("pushforward: supplied map is not the inverse");

    const ChartPtr& n = phi.target();
    std::vector<ChartFunction> aff, ang;
    for (std::size_t j = 0; j < n->n_affine(); ++j)
        aff.push_back(inverse.pullback(x.apply(phi.affine_image(j))));
    for (std::size_t i = 0; i < n->n_circular(); ++i) {
        const auto& [p, q] = phi.circular_image(i);
        ChartFunction dc = inverse.pullback(x.apply(p));
        ChartFunction ds = inverse.pullback(x.apply(q));
        ChartFunction c = ChartFunction::generator(n, n->cos_index(i));
        ChartFunction s = ChartFunction::generator(n, n->sin_index(i));
        ang.push_back(c * ds - s * dc);
    }
    return VectorField(n, std::move(aff), std::move(ang));
}

// Relatedness certificate: X ~_phi Y iff X(phi^* f) = phi^*(Y f) for every
// generator f of phi's target.  Returns the first violating generator and
// the nonzero difference.
inline std::optional<std::pair<std::string, ChartFunction>>
relatedness_defect(const SmoothMap& phi, const VectorField& x, const VectorField& y)
{
    if (!same_chart(x.chart(), phi.source()) || !same_chart(y.chart(), phi.target()))
        throw std::invalid_argument("relatedness_defect: chart mismatch");
    for (std::size_t g = 0; g < phi.target()->n_generators(); ++g) {
        ChartFunction gen = ChartFunction::generator(phi.target(), g);
        ChartFunction d = x.apply(phi.pullback(gen)) - phi.pullback(y.apply(gen));
        if (!d.is_zero()) return std::make_pair(phi.target()->generator_name(g), d);
    }
    return std::nullopt;
}

}  // namespace stackcalc
