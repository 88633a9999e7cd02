/*
 * expr.hpp
 * --------
 * The small prefix expression grammar used in presentation files:
 *
 *   expr := INTEGER | SYMBOL | '(' op expr+ ')'      op in {+, *, -}
 *
 * '(- a)' is negation, '(- a b c)' is a - b - c.  Symbols resolve to
 * affine coordinates, cos_NAME / sin_NAME generators of circular
 * coordinates, or declared formal parameters.  Printing emits the same
 * grammar, so parse -> print -> parse is the identity on normal forms.
 */
#pragma once

#include <cctype>
#include <set>

#include "stackcalc/chart.hpp"

namespace stackcalc {

namespace detail {

inline std::vector<std::string> tokenize_expr(const std::string& text)
{
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == '(' || ch == ')') {
            if (!cur.empty()) tokens.push_back(cur), cur.clear();
            tokens.emplace_back(1, ch);
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) tokens.push_back(cur), cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

inline bool is_integer_token(const std::string& t)
{
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

}  // namespace detail

class ExprParser {
public:
    ExprParser(ChartPtr chart, std::vector<std::string> parameters)
        : chart_(std::move(chart)), parameters_(parameters.begin(), parameters.end())
    {
    }

    ChartFunction parse(const std::string& text) const
    {
        auto tokens = detail::tokenize_expr(text);
        std::size_t pos = 0;
        ChartFunction f = parse_expr(tokens, pos);
        if (pos != tokens.size())
            throw std::invalid_argument("expression: trailing tokens after " +
                                        std::to_string(pos));
        return f;
    }

private:
    ChartFunction parse_expr(const std::vector<std::string>& tokens, std::size_t& pos) const
    {
        if (pos >= tokens.size())
            throw std::invalid_argument("expression: unexpected end of input");
        const std::string& t = tokens[pos];
        if (t == "(") {
            ++pos;
            if (pos >= tokens.size())
                throw std::invalid_argument("expression: unexpected end after '('");
            std::string op = tokens[pos++];
            if (op != "+" && op != "*" && op != "-")
                throw std::invalid_argument("expression: unknown operator '" + op + "'");
            std::vector<ChartFunction> args;
            while (pos < tokens.size() && tokens[pos] != ")")
                args.push_back(parse_expr(tokens, pos));
            if (pos >= tokens.size())
                throw std::invalid_argument("expression: missing ')'");
            ++pos;  // consume ')'
            if (args.empty())
                throw std::invalid_argument("expression: operator '" + op + "' needs arguments");
            if (op == "+") {
                ChartFunction r = args[0];
                for (std::size_t i = 1; i < args.size(); ++i) r += args[i];
                return r;
            }
            if (op == "*") {
                ChartFunction r = args[0];
                for (std::size_t i = 1; i < args.size(); ++i) r *= args[i];
                return r;
            }
            // '-'
            if (args.size() == 1) return -args[0];
            ChartFunction r = args[0];
            for (std::size_t i = 1; i < args.size(); ++i) r -= args[i];
            return r;
        }
        if (t == ")") throw std::invalid_argument("expression: unexpected ')'");
        ++pos;
        if (detail::is_integer_token(t))
            return ChartFunction::constant(chart_, Scalar(Integer(t)));
        return resolve_symbol(t);
    }

    ChartFunction resolve_symbol(const std::string& name) const
    {
        if (chart_->affine_position(name))
            return ChartFunction::affine_coord(chart_, name);
        if (name.rfind("cos_", 0) == 0 && chart_->circular_position(name.substr(4)))
            return ChartFunction::cosine(chart_, name.substr(4));
        if (name.rfind("sin_", 0) == 0 && chart_->circular_position(name.substr(4)))
            return ChartFunction::sine(chart_, name.substr(4));
        if (parameters_.count(name))
            return ChartFunction::constant(chart_, Scalar::parameter(name));
        throw std::invalid_argument("expression: unknown symbol '" + name + "'");
    }

    ChartPtr chart_;
    std::set<std::string> parameters_;
};

// Prints a ChartFunction in the prefix grammar.  Only defined for
// functions whose coefficients are parameter polynomials (denominator 1),
// which covers everything the grammar can produce.
inline std::string print_expression(const ChartFunction& f)
{
    if (f.is_zero()) return "0";
    std::vector<std::string> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [mono, coeff] = *it;
        if (!(coeff.den().is_constant() && coeff.den().constant_value() == 1))
            throw std::invalid_argument(
                "print_expression: coefficient not representable in the grammar: " +
                coeff.str());
        // one printed term per parameter-monomial of the coefficient
        for (auto pit = coeff.num().terms().rbegin(); pit != coeff.num().terms().rend(); ++pit) {
            const auto& [pmono, pint] = *pit;
            std::vector<std::string> factors;
            bool negative = pint < 0;
            Integer a = negative ? Integer(-pint) : pint;
            std::size_t gens = 0;
            for (const auto& [pname, pe] : pmono) gens += pe;
            for (std::size_t g = 0; g < mono.size(); ++g) gens += mono[g];
            if (a != 1 || gens == 0) factors.push_back((negative ? "-" : "") + a.str());
            for (const auto& [pname, pe] : pmono)
                for (int k = 0; k < pe; ++k) factors.push_back(pname);
            for (std::size_t g = 0; g < mono.size(); ++g)
                for (int k = 0; k < mono[g]; ++k)
                    factors.push_back(f.chart()->generator_name(g));
            std::string term;
            if (factors.size() == 1) {
                term = factors[0];
            } else {
                term = "(*";
                for (const auto& s : factors) term += " " + s;
                term += ")";
            }
            if (negative && a == 1 && gens > 0) {
                // coefficient -1 with generators: wrap in negation
                term = "(- " + term + ")";
            } else if (negative && factors.size() > 1 && a != 1) {
                // sign already folded into the integer factor
            }
            terms.push_back(term);
        }
    }
    if (terms.size() == 1) return terms[0];
    std::string out = "(+";
    for (const auto& t : terms) out += " " + t;
    return out + ")";
}

}  // namespace stackcalc
