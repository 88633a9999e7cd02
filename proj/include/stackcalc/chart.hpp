/*
 * chart.hpp
 * ---------
 * Charts and their function rings.
 *
 * A chart has affine coordinates (each contributing one polynomial
 * generator) and circular coordinates (each contributing a cosine/sine
 * generator pair (c, s) subject to c^2 + s^2 = 1).
 *
 * ChartFunction keeps a unique normal form: the relation is oriented as
 * the rewrite s^2 -> 1 - c^2, so every sine exponent is 0 or 1 and two
 * functions are equal iff their term maps coincide.
 */
#pragma once

#include <memory>
#include <numeric>
#include <optional>

#include "stackcalc/scalar.hpp"

namespace stackcalc {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

class Chart {
public:
    Chart(std::vector<std::string> affine, std::vector<std::string> circular)
        : affine_(std::move(affine)), circular_(std::move(circular))
    {
        std::vector<std::string> all = affine_;
        all.insert(all.end(), circular_.begin(), circular_.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("Chart: duplicate coordinate name");
    }

    static ChartPtr make(std::vector<std::string> affine,
                         std::vector<std::string> circular = {})
    {
        return std::make_shared<Chart>(std::move(affine), std::move(circular));
    }
    static ChartPtr point() { return make({}, {}); }

    const std::vector<std::string>& affine() const { return affine_; }
    const std::vector<std::string>& circular() const { return circular_; }
    std::size_t n_affine() const { return affine_.size(); }
    std::size_t n_circular() const { return circular_.size(); }

    // Generators are laid out as [affine...][c_0, s_0, c_1, s_1, ...].
    std::size_t n_generators() const { return affine_.size() + 2 * circular_.size(); }
    std::size_t cos_index(std::size_t i) const { return affine_.size() + 2 * i; }
    std::size_t sin_index(std::size_t i) const { return affine_.size() + 2 * i + 1; }

    std::string generator_name(std::size_t g) const
    {
        if (g < affine_.size()) return affine_[g];
        std::size_t i = (g - affine_.size()) / 2;
        return ((g - affine_.size()) % 2 == 0 ? "cos_" : "sin_") + circular_[i];
    }

    std::optional<std::size_t> affine_position(const std::string& name) const
    {
        auto it = std::find(affine_.begin(), affine_.end(), name);
        if (it == affine_.end()) return std::nullopt;
        return std::size_t(it - affine_.begin());
    }
    std::optional<std::size_t> circular_position(const std::string& name) const
    {
        auto it = std::find(circular_.begin(), circular_.end(), name);
        if (it == circular_.end()) return std::nullopt;
        return std::size_t(it - circular_.begin());
    }

    bool operator==(const Chart& o) const
    {
        return affine_ == o.affine_ && circular_ == o.circular_;
    }
    bool operator!=(const Chart& o) const { return !(*this == o); }

    std::string str() const
    {
        std::string s = "(";
        bool first = true;
        for (const auto& a : affine_) {
            if (!first) s += ",";
            s += a;
            first = false;
        }
        for (const auto& c : circular_) {
            if (!first) s += ",";
            s += c + "°";
            first = false;
        }
        return s + ")";
    }

private:
    std::vector<std::string> affine_;
    std::vector<std::string> circular_;
};

inline bool same_chart(const ChartPtr& a, const ChartPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// Exponent vector over a chart's generators.
using ChartMonomial = std::vector<int>;

inline int monomial_degree(const ChartMonomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0);
}

struct ChartMonomialLess {
    bool operator()(const ChartMonomial& a, const ChartMonomial& b) const
    {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class ChartFunction {
public:
    using TermMap = std::map<ChartMonomial, Scalar, ChartMonomialLess>;

    ChartFunction() = default;
    explicit ChartFunction(ChartPtr chart) : chart_(std::move(chart)) {}

    static ChartFunction constant(ChartPtr chart, Scalar c)
    {
        ChartFunction f(std::move(chart));
        if (!c.is_zero())
            f.terms_[ChartMonomial(f.chart_->n_generators(), 0)] = std::move(c);
        return f;
    }
    static ChartFunction zero(ChartPtr chart) { return ChartFunction(std::move(chart)); }
    static ChartFunction one(ChartPtr chart) { return constant(std::move(chart), Scalar(1)); }

    static ChartFunction generator(ChartPtr chart, std::size_t g)
    {
        ChartFunction f(chart);
        if (g >= chart->n_generators())
            throw std::out_of_range("ChartFunction: generator index");
        ChartMonomial m(chart->n_generators(), 0);
        m[g] = 1;
        f.terms_[m] = Scalar(1);
        return f;
    }
    static ChartFunction affine_coord(const ChartPtr& chart, const std::string& name)
    {
        auto p = chart->affine_position(name);
        if (!p) throw std::invalid_argument("ChartFunction: unknown affine coordinate " + name);
        return generator(chart, *p);
    }
    static ChartFunction cosine(const ChartPtr& chart, const std::string& name)
    {
        auto p = chart->circular_position(name);
        if (!p) throw std::invalid_argument("ChartFunction: unknown circular coordinate " + name);
        return generator(chart, chart->cos_index(*p));
    }
    static ChartFunction sine(const ChartPtr& chart, const std::string& name)
    {
        auto p = chart->circular_position(name);
        if (!p) throw std::invalid_argument("ChartFunction: unknown circular coordinate " + name);
        return generator(chart, chart->sin_index(*p));
    }

    // Adds coeff * monomial (arbitrary exponents) and restores normal form.
    void add_term(const ChartMonomial& mono, const Scalar& coeff)
    {
        if (mono.size() != chart_->n_generators())
            throw std::invalid_argument("ChartFunction: monomial arity mismatch");
        add_reduced(mono, coeff);
    }

    const ChartPtr& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0;
    }
    Scalar constant_value() const
    {
        if (terms_.empty()) return Scalar(0);
        if (!is_constant()) throw std::logic_error("ChartFunction: not a constant");
        return terms_.begin()->second;
    }

    // Total degree, with cosine and sine generators each counting 1.
    // Returns -1 for the zero function.
    int degree() const
    {
        return terms_.empty() ? -1 : monomial_degree(terms_.rbegin()->first);
    }

    ChartFunction operator-() const
    {
        ChartFunction r(chart_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    ChartFunction& operator+=(const ChartFunction& o)
    {
        require_same_chart(o);
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    ChartFunction& operator-=(const ChartFunction& o) { return *this += -o; }

    friend ChartFunction operator+(ChartFunction a, const ChartFunction& b) { a += b; return a; }
    friend ChartFunction operator-(ChartFunction a, const ChartFunction& b) { a -= b; return a; }

    friend ChartFunction operator*(const ChartFunction& a, const ChartFunction& b)
    {
        a.require_same_chart(b);
        ChartFunction r(a.chart_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                ChartMonomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_reduced(m, ca * cb);
            }
        return r;
    }
    ChartFunction& operator*=(const ChartFunction& o) { *this = *this * o; return *this; }

    friend ChartFunction operator*(const Scalar& c, const ChartFunction& f)
    {
        ChartFunction r(f.chart_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : f.terms_) {
            Scalar cv = c * v;
            if (!cv.is_zero()) r.terms_[m] = std::move(cv);
        }
        return r;
    }

    ChartFunction pow(int n) const
    {
        if (n < 0) throw std::invalid_argument("ChartFunction: negative power");
        ChartFunction r = one(chart_);
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    bool operator==(const ChartFunction& o) const
    {
        return same_chart(chart_, o.chart_) && terms_ == o.terms_;
    }
    bool operator!=(const ChartFunction& o) const { return !(*this == o); }

    // Partial derivative along an affine coordinate.
    ChartFunction d_affine(std::size_t j) const
    {
        if (j >= chart_->n_affine()) throw std::out_of_range("d_affine index");
        ChartFunction r(chart_);
        for (const auto& [m, c] : terms_) {
            if (m[j] == 0) continue;
            ChartMonomial mm = m;
            mm[j] -= 1;
            r.add_reduced(mm, Scalar(m[j]) * c);
        }
        return r;
    }

    // Angular derivative for circular coordinate i: c -> -s, s -> c.
    ChartFunction d_angular(std::size_t i) const
    {
        if (i >= chart_->n_circular()) throw std::out_of_range("d_angular index");
        std::size_t ci = chart_->cos_index(i), si = chart_->sin_index(i);
        ChartFunction r(chart_);
        for (const auto& [m, c] : terms_) {
            if (m[ci] > 0) {
                ChartMonomial mm = m;
                mm[ci] -= 1;
                mm[si] += 1;
                r.add_reduced(mm, Scalar(-m[ci]) * c);
            }
            if (m[si] > 0) {
                ChartMonomial mm = m;
                mm[si] -= 1;
                mm[ci] += 1;
                r.add_reduced(mm, Scalar(m[si]) * c);
            }
        }
        return r;
    }

    // Substitutes images[g] for generator g.  The images must all live on
    // one common chart; used by SmoothMap::pullback.
    ChartFunction substitute(const ChartPtr& into,
                             const std::vector<ChartFunction>& images) const
    {
        if (images.size() != chart_->n_generators())
            throw std::invalid_argument("ChartFunction: substitution arity mismatch");
        ChartFunction r = zero(into);
        // power cache per generator
        std::vector<std::vector<ChartFunction>> powers(images.size());
        auto power = [&](std::size_t g, int e) -> const ChartFunction& {
            auto& cache = powers[g];
            if (cache.empty()) cache.push_back(one(into));
            while ((int)cache.size() <= e) cache.push_back(cache.back() * images[g]);
            return cache[e];
        };
        for (const auto& [m, c] : terms_) {
            ChartFunction t = constant(into, c);
            for (std::size_t g = 0; g < m.size(); ++g)
                if (m[g] > 0) t = t * power(g, m[g]);
            r += t;
        }
        return r;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = c.str();
            bool negated = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                cs.find(" - ") == std::string::npos && cs.find('/') == std::string::npos) {
                negated = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (negated) os << "-";
            } else {
                os << (negated ? " - " : " + ");
            }
            first = false;
            bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            bool unit = (cs == "1");
            bool any_gen = monomial_degree(m) > 0;
            if (!unit || !any_gen) os << (needs_parens ? "(" + cs + ")" : cs);
            bool printed = !unit || !any_gen;
            for (std::size_t g = 0; g < m.size(); ++g) {
                if (m[g] == 0) continue;
                if (printed) os << "*";
                os << chart_->generator_name(g);
                if (m[g] > 1) os << "^" << m[g];
                printed = true;
            }
        }
        return os.str();
    }

private:
    void require_same_chart(const ChartFunction& o) const
    {
        if (!same_chart(chart_, o.chart_))
            throw std::invalid_argument("ChartFunction: chart mismatch");
    }

    // Inserts coeff * mono, rewriting s^2 -> 1 - c^2 until every sine
    // exponent is 0 or 1.
    void add_reduced(const ChartMonomial& mono, const Scalar& coeff)
    {
        if (coeff.is_zero()) return;
        for (std::size_t i = 0; i < chart_->n_circular(); ++i) {
            std::size_t si = chart_->sin_index(i), ci = chart_->cos_index(i);
            if (mono[si] >= 2) {
                ChartMonomial m1 = mono;
                m1[si] -= 2;
                add_reduced(m1, coeff);
                ChartMonomial m2 = m1;
                m2[ci] += 2;
                add_reduced(m2, -coeff);
                return;
            }
        }
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ChartPtr chart_;
    TermMap terms_;
};

// All normal-form monomials of total degree <= d, in increasing
// ChartMonomialLess order (sine exponents are capped at 1).
inline std::vector<ChartMonomial> enumerate_monomials(const ChartPtr& chart, int d)
{
    std::vector<ChartMonomial> out;
    ChartMonomial m(chart->n_generators(), 0);
    auto is_sin = [&](std::size_t g) {
        return g >= chart->n_affine() && ((g - chart->n_affine()) % 2 == 1);
    };
    auto rec = [&](auto&& self, std::size_t g, int left) -> void {
        if (g == m.size()) {
            out.push_back(m);
            return;
        }
        int cap = is_sin(g) ? std::min(left, 1) : left;
        for (int e = 0; e <= cap; ++e) {
            m[g] = e;
            self(self, g + 1, left - e);
        }
        m[g] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), ChartMonomialLess{});
    return out;
}

}  // namespace stackcalc
