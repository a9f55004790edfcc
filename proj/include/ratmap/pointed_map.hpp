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
 * @file pointed_map.hpp
 * @brief Pointed endomorphisms f/g of the projective line and their monoid sum.
 *
 * A map of degree n is f/g with f monic of degree n, deg g < n and
 * res_{n,n}(f, g) a unit. It carries the matrix [[f, -q], [g, p]] of
 * determinant 1, where p*f + q*g = 1 with deg p < n-1 and deg q < n. The sum
 * of two maps is read off the product of their matrices. 1/0 is the neutral
 * element, with p = 1 and q = 0.
 */

#ifndef RATMAP_POINTED_MAP_HPP
#define RATMAP_POINTED_MAP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "expr.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "resultant.hpp"

namespace ratmap {

enum class MapFailure { none, ring_mismatch, not_monic, degree_too_high, resultant_not_unit };

inline std::string to_string(MapFailure f) {
    switch (f) {
        case MapFailure::none: return "ok";
        case MapFailure::ring_mismatch: return "RingMismatch";
        case MapFailure::not_monic: return "NotMonic";
        case MapFailure::degree_too_high: return "DegreeTooHigh";
        case MapFailure::resultant_not_unit: return "ResultantNotUnit";
    }
    return "?";
}

/// Outcome of checking a candidate pair. `resultant` is set whenever it could be computed.
struct MapCheck {
    MapFailure failure = MapFailure::none;
    std::optional<Scalar> resultant;
    std::string message;

    bool ok() const { return failure == MapFailure::none; }
};

class MapValidationError : public Error {
   public:
    explicit MapValidationError(MapCheck check) : Error(check.message), check_(std::move(check)) {}
    const MapCheck& check() const noexcept { return check_; }
    MapFailure failure() const noexcept { return check_.failure; }
    const std::optional<Scalar>& resultant() const noexcept { return check_.resultant; }

   private:
    MapCheck check_;
};

/// Checks every invariant of a pointed map without throwing.
inline MapCheck check_map(const UPoly& f, const UPoly& g) {
    MapCheck out;
    if (!(f.ring() == g.ring())) {
        out.failure = MapFailure::ring_mismatch;
        out.message = "numerator and denominator live in different rings";
        return out;
    }
    auto df = f.degree();
    if (!df || !f.coeffs()[*df].is_one()) {
        out.failure = MapFailure::not_monic;
        out.message = "NotMonic: numerator " + print_poly(f) + " is not monic";
        return out;
    }
    const std::size_t n = *df;
    auto dg = g.degree();
    if (dg && *dg >= n) {
        out.failure = MapFailure::degree_too_high;
        out.message = "DegreeTooHigh: deg g = " + std::to_string(*dg) + " is not below n = " + std::to_string(n);
        return out;
    }
    out.resultant = resultant(f, n, g, n);
    if (!out.resultant->is_unit()) {
        out.failure = MapFailure::resultant_not_unit;
        out.message = "ResultantNotUnit(" + out.resultant->to_string() + ")";
    }
    return out;
}

class PointedMap {
   public:
    /// Throws MapValidationError naming the failing invariant.
    static PointedMap validate(const UPoly& f, const UPoly& g) {
        MapCheck c = check_map(f, g);
        if (!c.ok()) throw MapValidationError(std::move(c));
        return PointedMap(f.trimmed(), g.trimmed(), *f.degree(), *c.resultant);
    }

    static PointedMap parse(std::string_view text, const RingTag& ring) {
        auto [f, g] = parse_upoly_pair(text, ring);
        return validate(f, g);
    }

    const RingTag& ring() const noexcept { return f_.ring().coeff; }
    std::size_t n() const noexcept { return n_; }
    const UPoly& f() const noexcept { return f_; }
    /// Natural degree (ZERO for the neutral element); pad to n() for resultants.
    const UPoly& g() const noexcept { return g_; }
    const Scalar& res() const noexcept { return res_; }

    std::string to_string() const { return print_fraction(f_, g_); }

    friend bool operator==(const PointedMap& a, const PointedMap& b) { return a.f_ == b.f_ && a.g_ == b.g_; }

   private:
    PointedMap(UPoly f, UPoly g, std::size_t n, Scalar res)
        : f_(std::move(f)), g_(std::move(g)), n_(n), res_(std::move(res)) {}

    UPoly f_, g_;
    std::size_t n_;
    Scalar res_;
};

/// The matrix witness [[f, -q], [g, p]] of a pointed map.
struct SL2Witness {
    PointedMap map;
    UPoly p, q;

    Mat2<UPoly> matrix() const { return {map.f(), -q, map.g(), p}; }
};

/// The unique Bezout pair: res_bezout divided by the unit resultant. 1/0 gets p = 1, q = 0.
inline SL2Witness bezout_pair(const PointedMap& u) {
    auto ring = u.f().ring();
    if (u.n() == 0) return {u, UPoly::constant(ring, Scalar(u.ring(), 1)), UPoly(ring)};
    auto [p, q] = res_bezout(u.f(), u.n(), u.g(), u.n());
    Scalar inv = u.res().inverse();
    return {u, (inv * p).trimmed(), (inv * q).trimmed()};
}

/// Monoid sum: f3 = f1 f2 - q1 g2, g3 = g1 f2 + p1 g2.
inline PointedMap oplus(const PointedMap& u, const PointedMap& v) {
    if (!(u.ring() == v.ring()))
        throw RingMismatch("cannot add maps over " + u.ring().to_string() + " and " + v.ring().to_string());
    SL2Witness wu = bezout_pair(u);
    UPoly f3 = u.f() * v.f() - wu.q * v.g();
    UPoly g3 = u.g() * v.f() + wu.p * v.g();
    return PointedMap::validate(f3.trimmed(), g3.trimmed());
}

enum class NamedMap { identity, zero, squaring, minus_epsilon };

inline NamedMap parse_named_map(std::string_view name) {
    if (name == "identity") return NamedMap::identity;
    if (name == "zero") return NamedMap::zero;
    if (name == "squaring") return NamedMap::squaring;
    if (name == "minus_epsilon") return NamedMap::minus_epsilon;
    throw DomainError("unknown named map '" + std::string(name) + "' (identity, zero, squaring, minus_epsilon)");
}

inline PointedMap named(NamedMap which, const RingTag& ring = RingTag::integers()) {
    switch (which) {
        case NamedMap::identity: return PointedMap::parse("X/1", ring);
        case NamedMap::zero: return PointedMap::parse("1/0", ring);
        case NamedMap::squaring: return PointedMap::parse("X^2/1", ring);
        case NamedMap::minus_epsilon: return PointedMap::parse("(X-1)/(-1)", ring);
    }
    throw DomainError("unknown named map");
}

inline const std::vector<std::string>& projective_vars() {
    static const std::vector<std::string> vars{"T0", "T1"};
    return vars;
}

/// F0 = T1^n f(T0/T1), F1 = T1^n g(T0/T1). Integer maps only.
inline std::pair<MPoly, MPoly> homogenize(const PointedMap& u) {
    if (u.ring().kind() != RingKind::integers) throw DomainError("homogenize is defined for maps over Z");
    const auto& vars = projective_vars();
    auto lift = [&](const UPoly& p) {
        MPoly out(vars);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k)
            out.add_term({static_cast<unsigned>(k), static_cast<unsigned>(u.n() - k)}, p.coeffs()[k].numerator());
        return out;
    };
    return {lift(u.f()), lift(u.g())};
}

/// Inverse of homogenize. F0 and F1 must be homogeneous of one degree n in T0, T1, with
/// T0^n appearing in F0 with coefficient 1 and not at all in F1.
inline PointedMap dehomogenize(const MPoly& F0_in, const MPoly& F1_in) {
    const auto& vars = projective_vars();
    MPoly F0 = F0_in.with_variables(vars), F1 = F1_in.with_variables(vars);
    int d = F0.total_degree();
    if (d < 0) throw DomainError("dehomogenize: F0 is zero");
    const unsigned n = static_cast<unsigned>(d);
    if (!F0.is_homogeneous_in(vars, n) || !F1.is_homogeneous_in(vars, n))
        throw DomainError("dehomogenize: F0 and F1 must be homogeneous of common degree " + std::to_string(n));
    if (F0.coeff({n, 0}) != 1 || F1.coeff({n, 0}) != 0)
        throw DomainError("dehomogenize: need coefficient 1 on T0^n in F0 and 0 in F1");
    auto ring = upoly_ring(RingTag::integers());
    auto drop = [&](const MPoly& F) {
        std::vector<Scalar> cs(n + 1, Scalar(ring.coeff, 0));
        for (const auto& [e, c] : F.terms()) cs[e[0]] = Scalar(ring.coeff, c);
        return UPoly(ring, std::move(cs)).trimmed();
    };
    return PointedMap::validate(drop(F0), drop(F1));
}

}  // namespace ratmap

#endif
