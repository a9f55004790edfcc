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
 * @file poly.hpp
 * @brief Dense univariate polynomials with an explicit formal degree.
 *
 * Poly<C> stores c0..cd. The formal degree d is part of the value: leading
 * coefficients may be zero, and Sylvester matrices are sized from it. The
 * distinguished ZERO polynomial has no coefficients and no formal degree.
 *
 * Arithmetic results carry the tight formal-degree bound (max for +, sum
 * for *). operator== compares polynomials as ring elements; use identical()
 * when the formal degree matters.
 *
 * The coefficient type C is either Scalar or another Poly, which gives
 * R[T][X] for homotopy certificates.
 */

#ifndef RATMAP_POLY_HPP
#define RATMAP_POLY_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace ratmap {

/// Ring context of an element type: enough runtime data to build 0 and 1.
template <class E>
struct element_traits;

template <>
struct element_traits<Scalar> {
    using context = RingTag;
    static context context_of(const Scalar& s) { return s.ring(); }
    static Scalar zero(const context& r) { return Scalar(r, 0); }
    static Scalar one(const context& r) { return Scalar(r, 1); }
    static Scalar from_integer(const context& r, const Integer& v) { return Scalar(r, v); }
};

/// Commutative ring elements usable by the generic algorithms (Bareiss, Sylvester, ...).
template <class E>
concept RingElement = requires(const E& a, const E& b) {
    typename element_traits<E>::context;
    { a + b } -> std::convertible_to<E>;
    { a - b } -> std::convertible_to<E>;
    { a * b } -> std::convertible_to<E>;
    { -a } -> std::convertible_to<E>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { is_unit(a) } -> std::convertible_to<bool>;
    { exact_div(a, b) } -> std::convertible_to<E>;
};

template <class C>
struct PolyRing {
    typename element_traits<C>::context coeff;
    std::string var;
    friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

template <class C>
class Poly {
   public:
    using coeff_type = C;
    using coeff_context = typename element_traits<C>::context;
    using context = PolyRing<C>;

    /// ZERO over a default-constructed ring; only useful as a placeholder before assignment.
    Poly() = default;
    /// The ZERO polynomial.
    explicit Poly(context ring) : ring_(std::move(ring)) {}
    Poly(coeff_context coeff, std::string var) : ring_{std::move(coeff), std::move(var)} {}

    /// Coefficients c0..cd; formal degree is coeffs.size() - 1. An empty list gives ZERO.
    Poly(context ring, std::vector<C> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

    static Poly constant(const context& ring, C c) { return Poly(ring, std::vector<C>{std::move(c)}); }
    static Poly monomial(const context& ring, C c, std::size_t k) {
        std::vector<C> cs(k + 1, element_traits<C>::zero(ring.coeff));
        cs[k] = std::move(c);
        return Poly(ring, std::move(cs));
    }
    static Poly variable(const context& ring) { return monomial(ring, element_traits<C>::one(ring.coeff), 1); }
    static Poly from_integers(const context& ring, const std::vector<long long>& cs) {
        std::vector<C> out;
        for (long long c : cs) out.push_back(element_traits<C>::from_integer(ring.coeff, Integer(c)));
        return Poly(ring, std::move(out));
    }

    const context& ring() const noexcept { return ring_; }
    const std::string& var() const noexcept { return ring_.var; }
    const std::vector<C>& coeffs() const noexcept { return coeffs_; }

    bool is_zero_value() const { return coeffs_.empty(); }
    std::optional<std::size_t> formal_degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    /// Largest index with a nonzero coefficient; nullopt stands for -infinity.
    std::optional<std::size_t> degree() const {
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            if (!is_zero(coeffs_[k])) return k;
        return std::nullopt;
    }

    C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : element_traits<C>::zero(ring_.coeff); }
    C leading() const {
        auto d = degree();
        return d ? coeffs_[*d] : element_traits<C>::zero(ring_.coeff);
    }
    C zero_coeff() const { return element_traits<C>::zero(ring_.coeff); }
    C one_coeff() const { return element_traits<C>::one(ring_.coeff); }

    /// Same polynomial at its actual degree (ZERO if every coefficient vanishes).
    Poly trimmed() const {
        auto d = degree();
        if (!d) return Poly(ring_);
        return Poly(ring_, std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(*d + 1)));
    }

    /// pad_to: raise the formal degree to d. Throws DomainError when d is below the actual degree.
    Poly padded(std::size_t d) const {
        auto actual = degree();
        if (actual && *actual > d)
            throw DomainError("cannot pad to formal degree " + std::to_string(d) + " below actual degree " +
                              std::to_string(*actual));
        std::vector<C> cs(d + 1, zero_coeff());
        for (std::size_t k = 0; k < coeffs_.size() && k <= d; ++k) cs[k] = coeffs_[k];
        return Poly(ring_, std::move(cs));
    }

    /// Horner evaluation in the coefficient ring.
    C evaluate(const C& x) const {
        C acc = zero_coeff();
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    /// P(value) for a polynomial value in the same ring; the formal degree is deg P * deg value.
    Poly compose(const Poly& value) const {
        check_same(*this, value);
        Poly acc(ring_);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * value + constant(ring_, coeffs_[k]);
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (a.coeffs_.empty()) return b;
        if (b.coeffs_.empty()) return a;
        std::vector<C> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_coeff());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (k < a.coeffs_.size() && k < b.coeffs_.size())
                cs[k] = a.coeffs_[k] + b.coeffs_[k];
            else
                cs[k] = k < a.coeffs_.size() ? a.coeffs_[k] : b.coeffs_[k];
        }
        return Poly(a.ring_, std::move(cs));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (a.coeffs_.empty() || b.coeffs_.empty()) return Poly(a.ring_);
        std::vector<C> cs(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_coeff());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(a.ring_, std::move(cs));
    }
    friend Poly operator*(const C& c, const Poly& p) {
        Poly r = p;
        for (auto& x : r.coeffs_) x = c * x;
        return r;
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly pow(unsigned k) const {
        Poly result = constant(ring_, one_coeff());
        for (unsigned i = 0; i < k; ++i) result *= *this;
        return result;
    }

    /// Equality as ring elements: trailing zero padding is ignored.
    friend bool operator==(const Poly& a, const Poly& b) {
        if (!(a.ring_ == b.ring_)) return false;
        std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        for (std::size_t k = 0; k < n; ++k)
            if (!(a.coeff(k) == b.coeff(k))) return false;
        return true;
    }

    /// Structural equality including the formal degree.
    friend bool identical(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

   private:
    static void check_same(const Poly& a, const Poly& b) {
        if (!(a.ring_ == b.ring_)) throw RingMismatch("polynomial ring mismatch (variables " + a.var() + ", " + b.var() + ")");
    }

    context ring_;
    std::vector<C> coeffs_;
};

template <class C>
struct element_traits<Poly<C>> {
    using context = PolyRing<C>;
    static context context_of(const Poly<C>& p) { return p.ring(); }
    static Poly<C> zero(const context& r) { return Poly<C>(r); }
    static Poly<C> one(const context& r) { return Poly<C>::constant(r, element_traits<C>::one(r.coeff)); }
    static Poly<C> from_integer(const context& r, const Integer& v) {
        return Poly<C>::constant(r, element_traits<C>::from_integer(r.coeff, v));
    }
};

template <class C>
bool is_zero(const Poly<C>& p) {
    return !p.degree().has_value();
}

/// Units of R[T] for a domain R: the constant units of R.
template <class C>
bool is_unit(const Poly<C>& p) {
    auto d = p.degree();
    return d && *d == 0 && is_unit(p.coeffs()[0]);
}

/// a / b in R[var]; the result has its natural degree. Throws InexactDivision on a remainder.
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("polynomial ring mismatch in division");
    auto db = b.degree();
    if (!db) throw InexactDivision("polynomial division by zero");
    auto da = a.degree();
    if (!da) return Poly<C>(a.ring());
    if (*da < *db) throw InexactDivision("polynomial division leaves a remainder");
    std::vector<C> rem(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(*da + 1));
    std::vector<C> quot(*da - *db + 1, a.zero_coeff());
    const C& lead = b.coeffs()[*db];
    for (std::size_t k = quot.size(); k-- > 0;) {
        const C& top = rem[k + *db];
        if (is_zero(top)) continue;
        C q = exact_div(top, lead);
        for (std::size_t j = 0; j <= *db; ++j) rem[k + j] = rem[k + j] - q * b.coeffs()[j];
        quot[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (!is_zero(r)) throw InexactDivision("polynomial division leaves a remainder");
    return Poly<C>(a.ring(), std::move(quot)).trimmed();
}

/// Univariate polynomial over a base ring.
using UPoly = Poly<Scalar>;
/// Polynomial in X whose coefficients are polynomials in T.
using HomotopyPoly = Poly<UPoly>;

inline UPoly::context upoly_ring(const RingTag& r, std::string var = "X") { return {r, std::move(var)}; }
inline HomotopyPoly::context homotopy_ring(const RingTag& r) { return {upoly_ring(r, "T"), "X"}; }

/// Substitute T := t in every coefficient of an R[T][X] polynomial (formal X-degree kept).
inline UPoly specialize(const HomotopyPoly& p, const Scalar& t) {
    std::vector<Scalar> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(c.evaluate(t));
    return UPoly(upoly_ring(p.ring().coeff.coeff, p.var()), std::move(cs));
}

/// Substitute T := value (a polynomial in T) in every coefficient.
inline HomotopyPoly substitute_inner(const HomotopyPoly& p, const UPoly& value) {
    std::vector<UPoly> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(c.compose(value).trimmed());
    return HomotopyPoly(p.ring(), std::move(cs));
}

/// Embed an R[X] polynomial as a T-constant R[T][X] polynomial.
inline HomotopyPoly lift_constant_in_t(const UPoly& p) {
    auto ring = homotopy_ring(p.ring().coeff);
    std::vector<UPoly> cs;
    for (const auto& c : p.coeffs()) cs.push_back(UPoly::constant(ring.coeff, c).trimmed());
    return HomotopyPoly(ring, std::move(cs));
}

}  // namespace ratmap

#endif
