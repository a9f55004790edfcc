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
 * @file proj_linear.hpp
 * @brief Families of projective-linear maps [T0:T1] -> [a T0 + b T1 : c T0 + d T1] over R[T].
 *
 * A family is well defined on the whole line when its determinant is a unit
 * of R[T]. Endpoints are compared up to a unit scalar because projective
 * coordinates are.
 */

#ifndef RATMAP_PROJ_LINEAR_HPP
#define RATMAP_PROJ_LINEAR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chain_common.hpp"
#include "expr.hpp"
#include "matrix.hpp"

namespace ratmap {

using MatrixFamily = Mat2<UPoly>;
using ScalarMatrix = Mat2<Scalar>;

inline UPoly::context family_ring(const RingTag& r = RingTag::integers()) { return upoly_ring(r, "T"); }

/// Parse four entries written in T.
inline MatrixFamily parse_family(std::string_view a, std::string_view b, std::string_view c, std::string_view d,
                                 const RingTag& r = RingTag::integers()) {
    return {parse_upoly(a, r, "T"), parse_upoly(b, r, "T"), parse_upoly(c, r, "T"), parse_upoly(d, r, "T")};
}

inline ScalarMatrix scalar_matrix(const RingTag& r, long long a, long long b, long long c, long long d) {
    return {Scalar(r, a), Scalar(r, b), Scalar(r, c), Scalar(r, d)};
}

inline UPoly det_family(const MatrixFamily& m) { return m.det().trimmed(); }
inline bool is_valid_family(const MatrixFamily& m) { return is_unit(det_family(m)); }

inline ScalarMatrix endpoint_matrix(const MatrixFamily& m, int t) {
    Scalar tv(m.a.ring().coeff, t);
    return m.map([&](const UPoly& p) { return p.evaluate(tv); });
}

/// T -> 1 - T in every entry.
inline MatrixFamily reverse_family(const MatrixFamily& m) {
    const auto& ring = m.a.ring();
    UPoly one_minus_t = UPoly::constant(ring, Scalar(ring.coeff, 1)) - UPoly::variable(ring);
    return m.map([&](const UPoly& p) { return p.compose(one_minus_t).trimmed(); });
}

/// M = u N for a unit u. Over Z the units are +-1; over a field any nonzero ratio works.
template <class E>
bool projectively_equal(const Mat2<E>& m, const Mat2<E>& n) {
    const E* mv[] = {&m.a, &m.b, &m.c, &m.d};
    const E* nv[] = {&n.a, &n.b, &n.c, &n.d};
    // Find the ratio from the first entry that is nonzero in either matrix.
    for (int i = 0; i < 4; ++i) {
        bool mz = is_zero(*mv[i]), nz = is_zero(*nv[i]);
        if (mz && nz) continue;
        if (mz || nz) return false;
        E u = *mv[i];
        try {
            u = exact_div(*mv[i], *nv[i]);
        } catch (const InexactDivision&) {
            return false;
        }
        if (!is_unit(u)) return false;
        for (int j = 0; j < 4; ++j)
            if (!(*mv[j] == u * *nv[j])) return false;
        return true;
    }
    return true;  // both zero
}

/// The point at infinity [1:0] goes to [a:c]; it lies in the open set T1 != 0 exactly when c is a unit.
inline bool image_of_infinity_in_open(const MatrixFamily& m) { return is_unit(m.c.trimmed()); }
inline bool fixes_infinity(const MatrixFamily& m) { return is_zero(m.c) && is_unit(m.a.trimmed()); }

enum class JunctionMode { projective, exact };

inline std::string to_string(JunctionMode m) { return m == JunctionMode::projective ? "projective" : "exact"; }
inline JunctionMode parse_junction_mode(std::string_view s) {
    if (s == "projective") return JunctionMode::projective;
    if (s == "exact") return JunctionMode::exact;
    throw SchemaError("junction must be \"projective\" or \"exact\", got \"" + std::string(s) + "\"");
}

struct MatrixLink {
    MatrixFamily family;
    Orientation orientation = Orientation::forward;
};

struct MatrixChain {
    std::vector<MatrixLink> links;
    ScalarMatrix from, to;
    JunctionMode junction = JunctionMode::projective;
};

struct MatrixLinkReport {
    std::size_t index = 0;
    Orientation orientation = Orientation::forward;
    UPoly det;
    bool det_unit = false;
    bool infinity_in_open = false;
    ScalarMatrix start, end;
};

struct MatrixJunctionReport {
    std::string label;
    bool ok = false;
    bool exact = false;  // equal without a sign change
    ScalarMatrix left, right;
};

struct MatrixChainReport {
    bool pass = false;
    std::vector<MatrixLinkReport> links;
    std::vector<MatrixJunctionReport> junctions;
    std::vector<std::string> failures;

    std::string first_failure() const { return failures.empty() ? std::string() : failures.front(); }
};

inline std::string print_matrix(const ScalarMatrix& m) {
    return "[[" + m.a.to_string() + ", " + m.b.to_string() + "], [" + m.c.to_string() + ", " + m.d.to_string() + "]]";
}

inline MatrixChainReport verify_matrix_chain(const MatrixChain& chain) {
    MatrixChainReport rep;
    auto junction = [&](std::size_t i, const ScalarMatrix& left, const ScalarMatrix& right) {
        MatrixJunctionReport j;
        j.label = junction_label(i, chain.links.size());
        j.exact = left == right;
        j.ok = chain.junction == JunctionMode::exact ? j.exact : projectively_equal(left, right);
        j.left = left;
        j.right = right;
        if (!j.ok)
            rep.failures.push_back("junction " + j.label + ": " + print_matrix(left) + " and " + print_matrix(right) +
                                   (chain.junction == JunctionMode::exact ? " differ" : " are not projectively equal"));
        rep.junctions.push_back(std::move(j));
    };
    ScalarMatrix previous = chain.from;
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        const auto& link = chain.links[i];
        MatrixLinkReport lr;
        lr.index = i + 1;
        lr.orientation = link.orientation;
        lr.det = det_family(link.family);
        lr.det_unit = is_unit(lr.det);
        lr.infinity_in_open = image_of_infinity_in_open(link.family);
        auto [t0, t1] = traversal(link.orientation);
        lr.start = endpoint_matrix(link.family, t0);
        lr.end = endpoint_matrix(link.family, t1);
        junction(i, previous, lr.start);
        if (!lr.det_unit) rep.failures.push_back("link " + std::to_string(lr.index) + ": determinant " + print_poly(lr.det) + " is not a unit");
        if (!lr.infinity_in_open)
            rep.failures.push_back("link " + std::to_string(lr.index) + ": image of infinity leaves the open set T1 != 0");
        previous = lr.end;
        rep.links.push_back(std::move(lr));
    }
    junction(chain.links.size(), previous, chain.to);
    rep.pass = rep.failures.empty();
    return rep;
}

inline std::vector<std::string> builtin_matrix_chain_names() { return {"prop_3_4_2", "swap-commutator"}; }

/// [[T, -1], [1, 0]] traversed backwards, then [[0, 1], [-1, T]]: from [[1, -1], [1, 0]] to [[0, 1], [-1, 1]].
/// The middle junction holds only up to the sign -1.
inline MatrixChain builtin_matrix_chain(std::string_view name) {
    if (name != "prop_3_4_2" && name != "swap-commutator")
        throw DomainError("unknown built-in matrix chain '" + std::string(name) + "'");
    const RingTag Z = RingTag::integers();
    MatrixChain c;
    c.links = {{parse_family("T", "-1", "1", "0"), Orientation::reversed},
               {parse_family("0", "1", "-1", "T"), Orientation::forward}};
    c.from = scalar_matrix(Z, 1, -1, 1, 0);
    c.to = scalar_matrix(Z, 0, 1, -1, 1);
    c.junction = JunctionMode::projective;
    return c;
}

}  // namespace ratmap

#endif
