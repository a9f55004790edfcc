/*
   Copyright 2026 The ratmap Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file expr.hpp
 * @brief Text grammar for polynomials and rational-map pairs.
 *
 *     expr   := term (('+'|'-') term)*
 *     term   := factor ('*' factor)*
 *     factor := atom ('^' nat)? | '-' factor
 *     atom   := integer | variable | '(' expr ')' | '(' ['-'] integer '/' integer ')'
 *
 * Variables are X, T, T0 and T1. Multiplication is always explicit. The
 * parenthesised fraction is only accepted over Q and prime fields, and it is
 * how the printer writes non-integral coefficients. A map "f/g" is split at
 * the single '/' outside all parentheses.
 *
 * Printing is canonical: descending exponents (lexicographic exponent
 * vectors for MPoly), so parse(print(p)) == p.
 */

#ifndef RATMAP_EXPR_HPP
#define RATMAP_EXPR_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mpoly.hpp"
#include "poly.hpp"

namespace ratmap {

inline constexpr unsigned max_parsed_exponent = 1024;

namespace detail {

enum class Tok { integer, ident, plus, minus, star, caret, lparen, rparen, slash, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::integer, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case '/': k = Tok::slash; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({k, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

/// Recursive-descent parser that evaluates directly into a ring type through a builder.
/// The builder provides integer(), rational() and variable() leaves; arithmetic is the ring's own.
template <class Builder>
class Parser {
   public:
    using value_type = typename Builder::value_type;

    Parser(std::string_view text, const Builder& builder) : toks_(tokenize(text)), b_(builder) {}

    value_type parse_all() {
        value_type v = expr();
        if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return v;
    }

   private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
    const Token& take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

    value_type expr() {
        value_type acc = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool plus = take().kind == Tok::plus;
            value_type rhs = term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    value_type term() {
        value_type acc = factor();
        while (peek().kind == Tok::star) {
            take();
            acc = acc * factor();
        }
        // Juxtaposition is rejected explicitly to give a precise message.
        Tok k = peek().kind;
        if (k == Tok::integer || k == Tok::ident || k == Tok::lparen)
            throw ParseError("implicit multiplication is not allowed; use '*'", peek().pos);
        return acc;
    }

    value_type factor() {
        if (peek().kind == Tok::minus) {
            take();
            return -factor();
        }
        value_type base = atom();
        if (peek().kind == Tok::caret) {
            take();
            const Token& e = peek();
            if (e.kind != Tok::integer) throw ParseError("expected a natural-number exponent", e.pos);
            take();
            if (e.text.size() > 4 || std::stoul(e.text) > max_parsed_exponent)
                throw ParseError("exponent too large", e.pos);
            unsigned k = static_cast<unsigned>(std::stoul(e.text));
            value_type r = b_.integer(1);
            for (unsigned j = 0; j < k; ++j) r = r * base;
            return r;
        }
        return base;
    }

    value_type atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer:
                take();
                return b_.integer(Integer(t.text));
            case Tok::ident:
                take();
                return b_.variable(t.text, t.pos);
            case Tok::lparen: {
                if (auto frac = try_fraction()) return *frac;
                take();
                value_type v = expr();
                if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
                take();
                return v;
            }
            case Tok::end:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::optional<value_type> try_fraction() {
        std::size_t j = 1;
        bool negative = false;
        if (peek(j).kind == Tok::minus) {
            negative = true;
            ++j;
        }
        if (peek(j).kind != Tok::integer || peek(j + 1).kind != Tok::slash) return std::nullopt;
        const Token& num = peek(j);
        const Token& slash = peek(j + 1);
        const Token& den = peek(j + 2);
        if (den.kind != Tok::integer) throw ParseError("expected an integer denominator", den.pos);
        if (peek(j + 3).kind != Tok::rparen) throw ParseError("expected ')'", peek(j + 3).pos);
        Integer n(num.text), d(den.text);
        if (negative) n = -n;
        if (d == 0) throw ParseError("zero denominator", den.pos);
        i_ += j + 4;
        return b_.rational(n, d, slash.pos);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    const Builder& b_;
};

struct UPolyBuilder {
    using value_type = UPoly;
    UPoly::context ring;

    UPoly integer(const Integer& v) const { return UPoly::constant(ring, Scalar(ring.coeff, v)); }
    UPoly rational(const Integer& n, const Integer& d, std::size_t pos) const {
        if (ring.coeff.kind() == RingKind::integers) throw ParseError("fraction literal outside Q or a prime field", pos);
        try {
            return UPoly::constant(ring, Scalar::fraction(ring.coeff, n, d));
        } catch (const Error& e) {
            throw ParseError(e.what(), pos);
        }
    }
    UPoly variable(const std::string& name, std::size_t pos) const {
        if (name != ring.var) throw ParseError("undeclared variable '" + name + "'", pos);
        return UPoly::variable(ring);
    }
};

struct HomotopyBuilder {
    using value_type = HomotopyPoly;
    HomotopyPoly::context ring;

    HomotopyPoly integer(const Integer& v) const {
        return HomotopyPoly::constant(ring, UPoly::constant(ring.coeff, Scalar(ring.coeff.coeff, v)));
    }
    HomotopyPoly rational(const Integer& n, const Integer& d, std::size_t pos) const {
        UPolyBuilder inner{ring.coeff};
        return HomotopyPoly::constant(ring, inner.rational(n, d, pos));
    }
    HomotopyPoly variable(const std::string& name, std::size_t pos) const {
        if (name == ring.var) return HomotopyPoly::variable(ring);
        if (name == ring.coeff.var) return HomotopyPoly::constant(ring, UPoly::variable(ring.coeff));
        throw ParseError("undeclared variable '" + name + "'", pos);
    }
};

struct MPolyBuilder {
    using value_type = MPoly;
    std::vector<std::string> vars;

    MPoly integer(const Integer& v) const { return MPoly::constant(vars, v); }
    MPoly rational(const Integer&, const Integer&, std::size_t pos) const {
        throw ParseError("fraction literal in an integer multivariate polynomial", pos);
    }
    MPoly variable(const std::string& name, std::size_t pos) const {
        if (std::find(vars.begin(), vars.end(), name) == vars.end())
            throw ParseError("undeclared variable '" + name + "'", pos);
        return MPoly::variable(vars, name);
    }
};

/// Trimmed result so that canonical comparisons do not see parser-internal padding.
template <class P>
P trim_if_poly(P p) {
    if constexpr (requires { p.trimmed(); })
        return p.trimmed();
    else
        return p;
}

struct Monomial {
    std::vector<std::pair<std::string, unsigned>> factors;
};

/// Appends one signed term. `magnitude` is the absolute coefficient text ("1", "3", "(3/4)").
inline void append_term(std::string& out, bool negative, const std::string& magnitude, const Monomial& m) {
    std::string body;
    for (const auto& [v, e] : m.factors) {
        if (e == 0) continue;
        if (!body.empty()) body += "*";
        body += v;
        if (e > 1) body += "^" + std::to_string(e);
    }
    std::string term;
    if (body.empty())
        term = magnitude;
    else if (magnitude == "1")
        term = body;
    else
        term = magnitude + "*" + body;
    if (out.empty())
        out = negative ? "-" + term : term;
    else
        out += (negative ? " - " : " + ") + term;
}

inline std::pair<bool, std::string> split_sign(const Scalar& c) {
    bool negative = c.sign() < 0;
    Integer n = negative ? Integer(-c.numerator()) : c.numerator();
    if (c.denominator() == 1) return {negative, n.str()};
    return {negative, "(" + n.str() + "/" + c.denominator().str() + ")"};
}

}  // namespace detail

/// Parse a univariate polynomial in `var` over `ring`.
inline UPoly parse_upoly(std::string_view text, const RingTag& ring, const std::string& var = "X") {
    detail::UPolyBuilder b{upoly_ring(ring, var)};
    return detail::Parser<detail::UPolyBuilder>(text, b).parse_all().trimmed();
}

/// Parse a polynomial in X with coefficients in ring[T].
inline HomotopyPoly parse_homotopy_poly(std::string_view text, const RingTag& ring) {
    detail::HomotopyBuilder b{homotopy_ring(ring)};
    HomotopyPoly p = detail::Parser<detail::HomotopyBuilder>(text, b).parse_all();
    std::vector<UPoly> cs;
    for (const auto& c : p.coeffs()) cs.push_back(c.trimmed());
    return HomotopyPoly(p.ring(), std::move(cs)).trimmed();
}

/// Parse an integer polynomial in the declared variables.
inline MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& vars) {
    detail::MPolyBuilder b{vars};
    return detail::Parser<detail::MPolyBuilder>(text, b).parse_all();
}

/// Split "f/g" at the one '/' outside parentheses. Returns both halves and the offset of g.
inline std::pair<std::string, std::pair<std::string, std::size_t>> split_fraction(std::string_view text) {
    int depth = 0;
    std::size_t where = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) {
            if (where != std::string_view::npos) throw ParseError("more than one top-level '/'", i);
            where = i;
        }
    }
    if (where == std::string_view::npos) throw ParseError("expected a pair of the form f/g", text.size());
    return {std::string(text.substr(0, where)), {std::string(text.substr(where + 1)), where + 1}};
}

/// Parse both halves of "f/g" with a per-half parser; positions are reported relative to the whole text.
template <class ParseHalf>
auto parse_fraction_with(std::string_view text, ParseHalf&& parse_half) {
    auto [num, rest] = split_fraction(text);
    auto [den, offset] = rest;
    auto f = parse_half(num);
    try {
        auto g = parse_half(den);
        return std::make_pair(std::move(f), std::move(g));
    } catch (const ParseError& e) {
        throw ParseError(e.bare_message(), e.position() + offset);
    }
}

inline std::pair<UPoly, UPoly> parse_upoly_pair(std::string_view text, const RingTag& ring) {
    return parse_fraction_with(text, [&](const std::string& s) { return parse_upoly(s, ring); });
}

inline std::pair<HomotopyPoly, HomotopyPoly> parse_homotopy_pair(std::string_view text, const RingTag& ring) {
    return parse_fraction_with(text, [&](const std::string& s) { return parse_homotopy_poly(s, ring); });
}

inline std::string print_poly(const UPoly& p) {
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Scalar& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        auto [neg, mag] = detail::split_sign(c);
        detail::append_term(out, neg, mag, {{{p.var(), static_cast<unsigned>(k)}}});
    }
    return out.empty() ? "0" : out;
}

/// Terms ordered by X-degree, then T-degree, both descending; each monomial is written T^a*X^b.
inline std::string print_poly(const HomotopyPoly& p) {
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const UPoly& c = p.coeffs()[k];
        for (std::size_t j = c.coeffs().size(); j-- > 0;) {
            const Scalar& s = c.coeffs()[j];
            if (s.is_zero()) continue;
            auto [neg, mag] = detail::split_sign(s);
            detail::append_term(out, neg, mag, {{{c.var(), static_cast<unsigned>(j)}, {p.var(), static_cast<unsigned>(k)}}});
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string print_poly(const MPoly& p) {
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        detail::Monomial m;
        for (std::size_t i = 0; i < e.size(); ++i) m.factors.emplace_back(p.vars()[i], e[i]);
        bool neg = c < 0;
        detail::append_term(out, neg, (neg ? Integer(-c) : c).str(), m);
    }
    return out.empty() ? "0" : out;
}

/// Parenthesised unless the text is a single unsigned token run (e.g. "X^2", "1", "2*X").
inline std::string wrap_for_fraction(const std::string& s) {
    bool simple = s.find_first_of(" +-/()") == std::string::npos;
    return simple ? s : "(" + s + ")";
}

template <class P>
std::string print_fraction(const P& f, const P& g) {
    return wrap_for_fraction(print_poly(f)) + "/" + wrap_for_fraction(print_poly(g));
}

}  // namespace ratmap

#endif
