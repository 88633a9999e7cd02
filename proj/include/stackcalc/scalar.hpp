/*
 * scalar.hpp
 * ----------
 * The exact coefficient field: ratios of integer-coefficient multivariate
 * polynomials in a set of formal parameter symbols (e.g. l0, l1).
 *
 * Every Scalar is kept in a unique canonical form (gcd(num, den) = 1,
 * leading coefficient of den positive under graded-lex order), so equality
 * is plain structural comparison.
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>
#include <stdexcept>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace stackcalc {

using Integer = boost::multiprecision::cpp_int;

// Monomial in the formal parameters: name -> exponent (> 0).
using ParamMonomial = std::map<std::string, int>;

inline int total_degree(const ParamMonomial& m)
{
    int d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

// Graded lexicographic order on parameter monomials: total degree first,
// ties broken by lex with alphabetically-earlier parameters taking
// precedence.  This is a genuine monomial order (compatible with
// multiplication), which the exact-division routine relies on.
struct ParamMonomialLess {
    bool operator()(const ParamMonomial& a, const ParamMonomial& b) const
    {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() || ib != b.end()) {
            if (ia == a.end()) return true;   // b has the earlier variable
            if (ib == b.end()) return false;  // a has the earlier variable
            if (ia->first < ib->first) return false;
            if (ib->first < ia->first) return true;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return false;
    }
};

// Integer-coefficient polynomial in the formal parameters.
class ParamPoly {
public:
    using TermMap = std::map<ParamMonomial, Integer, ParamMonomialLess>;

    ParamPoly() = default;
    explicit ParamPoly(Integer c)
    {
        if (c != 0) terms_[ParamMonomial{}] = std::move(c);
    }
    explicit ParamPoly(long c) : ParamPoly(Integer(c)) {}

    static ParamPoly parameter(const std::string& name)
    {
        ParamPoly p;
        p.terms_[ParamMonomial{{name, 1}}] = 1;
        return p;
    }

    static ParamPoly from_terms(TermMap t)
    {
        ParamPoly p;
        for (auto& [m, c] : t)
            if (c != 0) p.terms_.emplace(m, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Integer constant_value() const
    {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::logic_error("ParamPoly: not a constant");
        return terms_.begin()->second;
    }

    int degree() const
    {
        if (terms_.empty()) return -1;
        return total_degree(terms_.rbegin()->first);
    }

    // Leading term under graded-lex order.
    const std::pair<const ParamMonomial, Integer>& leading() const
    {
        if (terms_.empty()) throw std::logic_error("ParamPoly: leading of zero");
        return *terms_.rbegin();
    }

    ParamPoly operator-() const
    {
        ParamPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& o)
    {
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) { return *this += -o; }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { a += b; return a; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { a -= b; return a; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b)
    {
        ParamPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                ParamMonomial m = ma;
                for (const auto& [n, e] : mb) m[n] += e;
                Integer c = ca * cb;
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    if (c != 0) r.terms_.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // All parameter names that occur.
    std::vector<std::string> variables() const
    {
        std::vector<std::string> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [n, e] : m)
                if (std::find(vs.begin(), vs.end(), n) == vs.end()) vs.push_back(n);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    int degree_in(const std::string& v) const
    {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it != m.end() && it->second > d) d = it->second;
        }
        return d;
    }

    // Coefficient of v^k, a polynomial in the remaining parameters.
    ParamPoly coefficient_of(const std::string& v, int k) const
    {
        ParamPoly r;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            int e = (it == m.end()) ? 0 : it->second;
            if (e != k) continue;
            ParamMonomial rest = m;
            rest.erase(v);
            r.terms_[rest] = c;
        }
        return r;
    }

    friend ParamPoly operator*(const ParamPoly& a, const Integer& c)
    {
        return a * ParamPoly(c);
    }

    ParamPoly times_power(const std::string& v, int k) const
    {
        if (k == 0) return *this;
        ParamPoly r;
        for (const auto& [m, c] : terms_) {
            ParamMonomial mm = m;
            mm[v] += k;
            r.terms_[mm] = c;
        }
        return r;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // highest term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Integer ac = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool printed = false;
            if (ac != 1 || m.empty()) {
                os << ac.str();
                printed = true;
            }
            for (const auto& [n, e] : m) {
                if (printed) os << "*";
                os << n;
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

namespace detail {

inline Integer int_gcd(Integer a, Integer b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline Integer integer_content(const ParamPoly& p)
{
    Integer g = 0;
    for (const auto& [m, c] : p.terms()) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

// Exact division; throws if the division leaves a remainder.
inline ParamPoly exact_divide(const ParamPoly& a, const ParamPoly& b)
{
    if (b.is_zero()) throw std::invalid_argument("ParamPoly: division by zero");
    ParamPoly rem = a, quot;
    const auto& blead = b.leading();
    while (!rem.is_zero()) {
        const auto& rlead = rem.leading();
        // divide leading terms
        ParamMonomial qm = rlead.first;
        for (const auto& [n, e] : blead.first) {
            auto it = qm.find(n);
            if (it == qm.end() || it->second < e)
                throw std::invalid_argument("ParamPoly: inexact division");
            it->second -= e;
            if (it->second == 0) qm.erase(it);
        }
        if (rlead.second % blead.second != 0)
            throw std::invalid_argument("ParamPoly: inexact division");
        Integer qc = rlead.second / blead.second;
        ParamPoly::TermMap t;
        t[qm] = qc;
        ParamPoly q1 = ParamPoly::from_terms(std::move(t));
        quot += q1;
        rem -= q1 * b;
    }
    return quot;
}

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

// gcd of the coefficients of p viewed as univariate in v.
inline ParamPoly content_in(const ParamPoly& p, const std::string& v)
{
    ParamPoly g;
    for (int k = 0; k <= p.degree_in(v); ++k) {
        ParamPoly c = p.coefficient_of(v, k);
        if (!c.is_zero()) g = poly_gcd(g, c);
    }
    return g;
}

// Pseudo-remainder of f by g with respect to v (up to a nonzero factor).
inline ParamPoly pseudo_remainder(ParamPoly f, const ParamPoly& g, const std::string& v)
{
    int dg = g.degree_in(v);
    ParamPoly lg = g.coefficient_of(v, dg);
    while (!f.is_zero() && f.degree_in(v) >= dg) {
        int df = f.degree_in(v);
        ParamPoly lf = f.coefficient_of(v, df);
        f = lg * f - (lf * g).times_power(v, df - dg);
        if (!f.is_zero() && f.degree_in(v) == df) {
            // leading terms did not cancel exactly; must not happen
            throw std::logic_error("ParamPoly: pseudo-division failed to reduce degree");
        }
    }
    return f;
}

inline ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b)
{
    if (a.is_zero() && b.is_zero()) return ParamPoly();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) {
        Integer g = int_gcd(integer_content(a), integer_content(b));
        return ParamPoly(g);
    }
    // pick the smallest parameter name occurring in either as main variable
    std::string v;
    {
        auto va = a.variables(), vb = b.variables();
        va.insert(va.end(), vb.begin(), vb.end());
        std::sort(va.begin(), va.end());
        v = va.front();
    }
    ParamPoly ca = content_in(a, v), cb = content_in(b, v);
    ParamPoly c = poly_gcd(ca, cb);
    ParamPoly f = exact_divide(a, ca), g = exact_divide(b, cb);
    while (!g.is_zero()) {
        ParamPoly r = pseudo_remainder(f, g, v);
        f = g;
        if (r.is_zero()) {
            g = ParamPoly();
        } else {
            g = exact_divide(r, content_in(r, v));
        }
    }
    ParamPoly result = c * exact_divide(f, content_in(f, v));
    if (result.leading().second < 0) result = -result;
    return result;
}

}  // namespace detail

// An element of the scalar field: num/den in canonical form.
class Scalar {
public:
    Scalar() : num_(), den_(Integer(1)) {}
    Scalar(long v) : num_(Integer(v)), den_(Integer(1)) {}  // NOLINT: implicit by design
    explicit Scalar(Integer v) : num_(std::move(v)), den_(Integer(1)) {}
    Scalar(ParamPoly n, ParamPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    explicit Scalar(ParamPoly n) : num_(std::move(n)), den_(Integer(1)) {}

    static Scalar parameter(const std::string& name)
    {
        return Scalar(ParamPoly::parameter(name));
    }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const
    {
        return num_.is_constant() && den_.is_constant() &&
               !num_.is_zero() && num_.constant_value() == den_.constant_value();
    }
    bool is_integer() const { return den_.is_constant() && den_.constant_value() == 1 && num_.is_constant(); }

    Scalar operator-() const
    {
        Scalar r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b)
    {
        if (b.is_zero()) throw std::invalid_argument("Scalar: division by zero");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar inverse() const
    {
        if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
        return Scalar(den_, num_);
    }

    // Canonical form makes equality structural.
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const
    {
        if (num_.terms() != o.num_.terms())
            return std::lexicographical_compare(
                num_.terms().begin(), num_.terms().end(),
                o.num_.terms().begin(), o.num_.terms().end());
        return std::lexicographical_compare(
            den_.terms().begin(), den_.terms().end(),
            o.den_.terms().begin(), o.den_.terms().end());
    }

    std::string str() const
    {
        if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
        auto wrap = [](const std::string& s) {
            return (s.find(' ') != std::string::npos || s.find('*') != std::string::npos)
                       ? "(" + s + ")"
                       : s;
        };
        return wrap(num_.str()) + "/" + wrap(den_.str());
    }

private:
    void reduce()
    {
        if (den_.is_zero()) throw std::invalid_argument("Scalar: zero denominator");
        if (num_.is_zero()) {
            den_ = ParamPoly(Integer(1));
            return;
        }
        ParamPoly g = detail::poly_gcd(num_, den_);
        num_ = detail::exact_divide(num_, g);
        den_ = detail::exact_divide(den_, g);
        if (den_.leading().second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    ParamPoly num_, den_;
};

}  // namespace stackcalc
