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
 * @file homotopy.hpp
 * @brief Homotopy certificates F/G over R[T] and verification of chains of them.
 *
 * A certificate is a pointed map whose coefficients are polynomials in T:
 * F monic in X of degree n, deg_X G < n, and res_{n,n}(F, G) a unit of R[T].
 * Its endpoints are the specialisations T = 0 and T = 1. A chain lists
 * certificates with an explicit orientation each; consecutive endpoints must
 * agree exactly.
 */

#ifndef RATMAP_HOMOTOPY_HPP
#define RATMAP_HOMOTOPY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chain_common.hpp"
#include "pointed_map.hpp"

namespace ratmap {

enum class CertFailure { none, ring_mismatch, not_monic_in_x, x_degree_too_high, resultant_not_unit };

inline std::string to_string(CertFailure f) {
    switch (f) {
        case CertFailure::none: return "ok";
        case CertFailure::ring_mismatch: return "RingMismatch";
        case CertFailure::not_monic_in_x: return "NotMonicInX";
        case CertFailure::x_degree_too_high: return "XDegreeTooHigh";
        case CertFailure::resultant_not_unit: return "ResultantNotUnit";
    }
    return "?";
}

struct CertCheck {
    CertFailure failure = CertFailure::none;
    std::optional<UPoly> resultant;
    std::string message;

    bool ok() const { return failure == CertFailure::none; }
};

class CertValidationError : public Error {
   public:
    explicit CertValidationError(CertCheck check) : Error(check.message), check_(std::move(check)) {}
    const CertCheck& check() const noexcept { return check_; }
    CertFailure failure() const noexcept { return check_.failure; }

   private:
    CertCheck check_;
};

inline CertCheck check_cert(const HomotopyPoly& F, const HomotopyPoly& G) {
    CertCheck out;
    if (!(F.ring() == G.ring())) {
        out.failure = CertFailure::ring_mismatch;
        out.message = "F and G live in different rings";
        return out;
    }
    auto dF = F.degree();
    if (!dF || !(F.coeffs()[*dF] == element_traits<UPoly>::one(F.ring().coeff))) {
        out.failure = CertFailure::not_monic_in_x;
        out.message = "NotMonicInX: " + print_poly(F);
        return out;
    }
    const std::size_t n = *dF;
    auto dG = G.degree();
    if (dG && *dG >= n) {
        out.failure = CertFailure::x_degree_too_high;
        out.message = "XDegreeTooHigh: deg_X G = " + std::to_string(*dG) + " is not below n = " + std::to_string(n);
        return out;
    }
    out.resultant = resultant(F, n, G, n).trimmed();
    if (!is_unit(*out.resultant)) {
        out.failure = CertFailure::resultant_not_unit;
        out.message = "ResultantNotUnit(" + print_poly(*out.resultant) + ")";
    }
    return out;
}

using MapPair = std::pair<UPoly, UPoly>;

inline std::string print_pair(const MapPair& m) { return print_fraction(m.first, m.second); }

/// (F, G) at T = t, both trimmed. Does not validate.
inline MapPair specialize_pair(const HomotopyPoly& F, const HomotopyPoly& G, const Scalar& t) {
    return {specialize(F, t).trimmed(), specialize(G, t).trimmed()};
}

/// (F, G) with T replaced by 1 - T.
inline std::pair<HomotopyPoly, HomotopyPoly> reverse_pair(const HomotopyPoly& F, const HomotopyPoly& G) {
    const auto& tring = F.ring().coeff;
    UPoly one_minus_t = UPoly::constant(tring, Scalar(tring.coeff, 1)) - UPoly::variable(tring);
    return {substitute_inner(F, one_minus_t).trimmed(), substitute_inner(G, one_minus_t).trimmed()};
}

class HomotopyCert {
   public:
    static HomotopyCert validate(const HomotopyPoly& F, const HomotopyPoly& G) {
        CertCheck c = check_cert(F, G);
        if (!c.ok()) throw CertValidationError(std::move(c));
        return HomotopyCert(F.trimmed(), G.trimmed(), *F.degree(), std::move(*c.resultant));
    }

    static HomotopyCert parse(std::string_view text, const RingTag& ring) {
        auto [F, G] = parse_homotopy_pair(text, ring);
        return validate(F, G);
    }

    const RingTag& ring() const noexcept { return F_.ring().coeff.coeff; }
    std::size_t n() const noexcept { return n_; }
    const HomotopyPoly& F() const noexcept { return F_; }
    const HomotopyPoly& G() const noexcept { return G_; }
    /// res_{n,n}(F, G) as a polynomial in T.
    const UPoly& res() const noexcept { return res_; }

    std::string to_string() const { return print_fraction(F_, G_); }

    friend bool operator==(const HomotopyCert& a, const HomotopyCert& b) { return a.F_ == b.F_ && a.G_ == b.G_; }

   private:
    HomotopyCert(HomotopyPoly F, HomotopyPoly G, std::size_t n, UPoly res)
        : F_(std::move(F)), G_(std::move(G)), n_(n), res_(std::move(res)) {}

    HomotopyPoly F_, G_;
    std::size_t n_;
    UPoly res_;
};

/// Specialisation at T = t; a unit resultant stays a unit, so this always validates.
inline PointedMap endpoint(const HomotopyCert& c, int t) {
    auto [f, g] = specialize_pair(c.F(), c.G(), Scalar(c.ring(), t));
    return PointedMap::validate(f, g);
}

inline HomotopyCert reverse(const HomotopyCert& c) {
    auto [F, G] = reverse_pair(c.F(), c.G());
    return HomotopyCert::validate(F, G);
}

/// Link of a chain. The pair is kept raw so that invalid input is reported, not rejected.
struct CertLink {
    HomotopyPoly F, G;
    Orientation orientation = Orientation::forward;
};

struct Chain {
    RingTag ring;
    std::vector<CertLink> links;
    MapPair from, to;
};

struct LinkReport {
    std::size_t index = 0;  // 1-based
    Orientation orientation = Orientation::forward;
    bool valid = false;
    std::string failure;
    std::optional<UPoly> resultant;
    /// Cofactor-expansion resultant, when the Sylvester matrix is small enough.
    std::optional<UPoly> oracle_resultant;
    MapPair start, end;
};

struct JunctionReport {
    std::string label;
    bool ok = false;
    MapPair left, right;
};

struct ChainReport {
    bool pass = false;
    bool from_valid = false, to_valid = false;
    std::vector<LinkReport> links;
    std::vector<JunctionReport> junctions;
    /// Every failure in chain order; the first entry is the first failing check.
    std::vector<std::string> failures;

    std::string first_failure() const { return failures.empty() ? std::string() : failures.front(); }
};

inline ChainReport verify_chain(const Chain& chain) {
    ChainReport rep;
    auto note_map = [&](const MapPair& m, const char* which, bool& flag) {
        MapCheck c = check_map(m.first, m.second);
        flag = c.ok();
        if (!flag) rep.failures.push_back(std::string(which) + ": " + c.message);
    };
    auto junction = [&](std::size_t i, const MapPair& left, const MapPair& right) {
        JunctionReport j{junction_label(i, chain.links.size()), left.first == right.first && left.second == right.second,
                         left, right};
        if (!j.ok) rep.failures.push_back("junction " + j.label + ": " + print_pair(left) + " != " + print_pair(right));
        rep.junctions.push_back(std::move(j));
    };

    note_map(chain.from, "from", rep.from_valid);
    MapPair previous = chain.from;
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        const CertLink& link = chain.links[i];
        LinkReport lr;
        lr.index = i + 1;
        lr.orientation = link.orientation;
        auto [t0, t1] = traversal(link.orientation);
        lr.start = specialize_pair(link.F, link.G, Scalar(chain.ring, t0));
        lr.end = specialize_pair(link.F, link.G, Scalar(chain.ring, t1));
        junction(i, previous, lr.start);

        CertCheck c = check_cert(link.F, link.G);
        lr.valid = c.ok();
        lr.resultant = c.resultant;
        if (c.resultant) {
            std::size_t n = *link.F.degree();
            if (2 * n <= cofactor_size_cap) {
                lr.oracle_resultant = resultant_oracle(link.F, n, link.G, n).trimmed();
                if (!(*lr.oracle_resultant == *lr.resultant)) {
                    lr.valid = false;
                    c.message = "elimination and cofactor resultants disagree";
                }
            }
        }
        if (!lr.valid) {
            lr.failure = c.message;
            rep.failures.push_back("link " + std::to_string(lr.index) + ": " + c.message);
        }
        previous = lr.end;
        rep.links.push_back(std::move(lr));
    }
    junction(chain.links.size(), previous, chain.to);
    note_map(chain.to, "to", rep.to_valid);
    rep.pass = rep.failures.empty();
    return rep;
}

inline std::vector<std::string> builtin_chain_names() { return {"prop_3_4_3", "square-to-sum"}; }

/// Four certificates joining X^2/1 to (X^2 - X + 1)/(X - 1), the third one traversed backwards.
inline Chain builtin_chain(std::string_view name) {
    if (name != "prop_3_4_3" && name != "square-to-sum")
        throw DomainError("unknown built-in chain '" + std::string(name) + "'");
    const RingTag Z = RingTag::integers();
    auto link = [&](const char* text, Orientation o) {
        auto [F, G] = parse_homotopy_pair(text, Z);
        return CertLink{F, G, o};
    };
    Chain c;
    c.ring = Z;
    c.links = {link("X^2/(T*X + 1)", Orientation::forward), link("(X^2 + 2*T*X + 2*T)/(X + 1)", Orientation::forward),
               link("(X^2 + 2*T*X + 2*T)/(X + 2*T - 1)", Orientation::reversed),
               link("(X^2 - T*X + T)/(X - 1)", Orientation::forward)};
    c.from = parse_upoly_pair("X^2/1", Z);
    c.to = parse_upoly_pair("(X^2 - X + 1)/(X - 1)", Z);
    return c;
}

}  // namespace ratmap

#endif
