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
 * @file serialize.hpp
 * @brief JSON documents for every public value type and verification report.
 *
 * Schemas (polynomials are strings in the text grammar):
 *
 *     scalar       "-3/4"
 *     polynomial   {"ring": "Q", "var": "X", "degree": 2, "coeffs": ["1", "0", "-3/4"]}   degree null for ZERO
 *     map          {"ring": "Z", "n": 2, "f": "X^2", "g": "1"}
 *     certificate  same as map, with f and g in X and T
 *     chain        {"links": [{"cert": certificate, "orientation": "forward"}], "from": map, "to": map}
 *     family       {"a": "T", "b": "-1", "c": "1", "d": "0"}
 *     matrix chain {"links": [{"family": family, "orientation": ...}], "from": [[1,-1],[1,0]], "to": ...,
 *                   "junction": "projective" | "exact"}
 *     plane family {"F0": "...", "F1": "..."}
 *     membership   {"N": 2, "combos": [{"A": "...", "B": "..."}]}
 *     plane chain  {"links": [{"family": plane family, "orientation": ..., "certificate": membership?}],
 *                   "from": {"F0", "F1"}, "to": {"F0", "F1"}}
 *
 * from_json throws SchemaError on structural problems; polynomial text
 * errors surface as ParseError.
 */

#ifndef RATMAP_SERIALIZE_HPP
#define RATMAP_SERIALIZE_HPP

#include <json.hpp>
#include <string>
#include <string_view>
#include <type_traits>

#include "homotopy.hpp"
#include "pointed_map.hpp"
#include "proj_linear.hpp"
#include "punctured_plane.hpp"

namespace ratmap {

using json = nlohmann::json;

inline json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw SchemaError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw SchemaError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

inline long long int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
    return v.get<long long>();
}

inline const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
    return v;
}

inline RingTag ring_field(const json& j) {
    try {
        return RingTag::parse(string_field(j, "ring"));
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
}

inline Orientation orientation_field(const json& j) {
    if (!j.contains("orientation")) return Orientation::forward;
    return parse_orientation(string_field(j, "orientation"));
}

}  // namespace detail

/// "7" or "-3/4" in the given ring.
inline Scalar parse_scalar(std::string_view text, const RingTag& ring) {
    try {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Scalar(ring, parse_integer(text));
        return Scalar::fraction(ring, parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError("bad scalar \"" + std::string(text) + "\": " + e.what());
    }
}

inline json to_json(const Scalar& s) { return s.to_string(); }

inline json to_json(const UPoly& p) {
    json cs = json::array();
    for (const auto& c : p.coeffs()) cs.push_back(c.to_string());
    json d = p.formal_degree() ? json(*p.formal_degree()) : json(nullptr);
    return {{"ring", p.ring().coeff.to_string()}, {"var", p.var()}, {"degree", d}, {"coeffs", cs}};
}

inline json to_json(const PointedMap& u) {
    return {{"ring", u.ring().to_string()}, {"n", u.n()}, {"f", print_poly(u.f())}, {"g", print_poly(u.g())}};
}

inline json to_json(const HomotopyCert& c) {
    return {{"ring", c.ring().to_string()}, {"n", c.n()}, {"f", print_poly(c.F())}, {"g", print_poly(c.G())}};
}

/// Map-shaped document for a pair that may not validate.
inline json pair_to_json(const RingTag& ring, const MapPair& m) {
    auto d = m.first.degree();
    return {{"ring", ring.to_string()}, {"n", d ? json(*d) : json(nullptr)}, {"f", print_poly(m.first)}, {"g", print_poly(m.second)}};
}

inline json cert_pair_to_json(const RingTag& ring, const HomotopyPoly& F, const HomotopyPoly& G) {
    auto d = F.degree();
    return {{"ring", ring.to_string()}, {"n", d ? json(*d) : json(nullptr)}, {"f", print_poly(F)}, {"g", print_poly(G)}};
}

inline json to_json(const Chain& c) {
    json links = json::array();
    for (const auto& l : c.links)
        links.push_back({{"cert", cert_pair_to_json(c.ring, l.F, l.G)}, {"orientation", to_string(l.orientation)}});
    return {{"links", links}, {"from", pair_to_json(c.ring, c.from)}, {"to", pair_to_json(c.ring, c.to)}};
}

inline json to_json(const MatrixFamily& m) {
    return {{"a", print_poly(m.a)}, {"b", print_poly(m.b)}, {"c", print_poly(m.c)}, {"d", print_poly(m.d)}};
}

inline json to_json(const ScalarMatrix& m) {
    auto s = [](const Scalar& x) { return json(x.numerator().str()); };
    // Integer entries are written as JSON numbers when they fit, strings otherwise.
    auto num = [&](const Scalar& x) -> json {
        if (x.is_integral() && x.numerator() >= -(Integer(1) << 62) && x.numerator() <= (Integer(1) << 62))
            return static_cast<long long>(x.numerator());
        return s(x);
    };
    return json::array({json::array({num(m.a), num(m.b)}), json::array({num(m.c), num(m.d)})});
}

inline json to_json(const MatrixChain& c) {
    json links = json::array();
    for (const auto& l : c.links) links.push_back({{"family", to_json(l.family)}, {"orientation", to_string(l.orientation)}});
    return {{"links", links}, {"from", to_json(c.from)}, {"to", to_json(c.to)}, {"junction", to_string(c.junction)}};
}

inline json to_json(const PlaneFamily& f) { return {{"F0", print_poly(f.F0)}, {"F1", print_poly(f.F1)}}; }
inline json to_json(const PlanePair& p) { return {{"F0", print_poly(p.first)}, {"F1", print_poly(p.second)}}; }

inline json to_json(const MembershipCertificate& c) {
    json combos = json::array();
    for (const auto& [a, b] : c.combos) combos.push_back({{"A", print_poly(a)}, {"B", print_poly(b)}});
    return {{"N", c.N}, {"combos", combos}};
}

inline json to_json(const PlaneChain& c) {
    json links = json::array();
    for (const auto& l : c.links) {
        json link = {{"family", to_json(l.family)}, {"orientation", to_string(l.orientation)}};
        if (l.certificate) link["certificate"] = to_json(*l.certificate);
        links.push_back(std::move(link));
    }
    return {{"links", links}, {"from", to_json(c.from)}, {"to", to_json(c.to)}};
}

template <class T>
T from_json(const json& j);

template <>
inline UPoly from_json<UPoly>(const json& j) {
    RingTag ring = detail::ring_field(j);
    std::string var = detail::string_field(j, "var");
    const json& cs = detail::array_field(j, "coeffs");
    const json& deg = detail::field(j, "degree");
    std::vector<Scalar> out;
    for (const auto& c : cs) {
        if (!c.is_string()) throw SchemaError("coefficients must be strings");
        out.push_back(parse_scalar(c.get<std::string>(), ring));
    }
    if (deg.is_null() ? !out.empty() : (!deg.is_number_unsigned() || deg.get<std::size_t>() + 1 != out.size()))
        throw SchemaError("\"degree\" must equal the number of coefficients minus one (null for zero)");
    return UPoly(upoly_ring(ring, var), std::move(out));
}

namespace detail {

inline MapPair map_pair_field(const json& j, const RingTag* expected = nullptr) {
    RingTag ring = ring_field(j);
    if (expected && !(ring == *expected)) throw SchemaError("ring " + ring.to_string() + " differs from " + expected->to_string());
    auto f = parse_upoly(string_field(j, "f"), ring), g = parse_upoly(string_field(j, "g"), ring);
    const json& n = field(j, "n");
    auto d = f.degree();
    if (!n.is_number_unsigned() || !d || n.get<std::size_t>() != *d)
        throw SchemaError("\"n\" must be the degree of f");
    return {f, g};
}

inline ScalarMatrix scalar_matrix_field(const json& j, const char* key) {
    const json& m = array_field(j, key);
    auto entry = [&](std::size_t r, std::size_t c) {
        if (m.size() != 2 || !m[r].is_array() || m[r].size() != 2)
            throw SchemaError(std::string("\"") + key + "\" must be a 2x2 array");
        const json& v = m[r][c];
        if (v.is_number_integer()) return Scalar(RingTag::integers(), v.get<long long>());
        if (v.is_string()) return parse_scalar(v.get<std::string>(), RingTag::integers());
        throw SchemaError(std::string("\"") + key + "\" entries must be integers");
    };
    return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
}

inline MPoly plane_poly_field(const json& j, const char* key, const std::vector<std::string>& vars) {
    return parse_mpoly(string_field(j, key), vars);
}

}  // namespace detail

template <>
inline PointedMap from_json<PointedMap>(const json& j) {
    auto [f, g] = detail::map_pair_field(j);
    return PointedMap::validate(f, g);
}

template <>
inline HomotopyCert from_json<HomotopyCert>(const json& j) {
    RingTag ring = detail::ring_field(j);
    auto F = parse_homotopy_poly(detail::string_field(j, "f"), ring);
    auto G = parse_homotopy_poly(detail::string_field(j, "g"), ring);
    auto cert = HomotopyCert::validate(F, G);
    if (detail::int_field(j, "n") != static_cast<long long>(cert.n())) throw SchemaError("\"n\" must be the X-degree of f");
    return cert;
}

template <>
inline Chain from_json<Chain>(const json& j) {
    Chain c;
    const json& links = detail::array_field(j, "links");
    c.from = detail::map_pair_field(detail::field(j, "from"));
    c.ring = c.from.first.ring().coeff;
    c.to = detail::map_pair_field(detail::field(j, "to"), &c.ring);
    for (const auto& l : links) {
        const json& cert = detail::field(l, "cert");
        if (!(detail::ring_field(cert) == c.ring)) throw SchemaError("every certificate must use the chain's ring");
        CertLink link{parse_homotopy_poly(detail::string_field(cert, "f"), c.ring),
                      parse_homotopy_poly(detail::string_field(cert, "g"), c.ring), detail::orientation_field(l)};
        c.links.push_back(std::move(link));
    }
    return c;
}

template <>
inline MatrixFamily from_json<MatrixFamily>(const json& j) {
    return parse_family(detail::string_field(j, "a"), detail::string_field(j, "b"), detail::string_field(j, "c"),
                        detail::string_field(j, "d"));
}

template <>
inline MatrixChain from_json<MatrixChain>(const json& j) {
    MatrixChain c;
    for (const auto& l : detail::array_field(j, "links"))
        c.links.push_back({from_json<MatrixFamily>(detail::field(l, "family")), detail::orientation_field(l)});
    c.from = detail::scalar_matrix_field(j, "from");
    c.to = detail::scalar_matrix_field(j, "to");
    c.junction = j.contains("junction") ? parse_junction_mode(detail::string_field(j, "junction")) : JunctionMode::projective;
    return c;
}

template <>
inline PlaneFamily from_json<PlaneFamily>(const json& j) {
    return {detail::plane_poly_field(j, "F0", plane_vars()), detail::plane_poly_field(j, "F1", plane_vars())};
}

template <>
inline PlanePair from_json<PlanePair>(const json& j) {
    return {detail::plane_poly_field(j, "F0", plane_point_vars()), detail::plane_poly_field(j, "F1", plane_point_vars())};
}

template <>
inline MembershipCertificate from_json<MembershipCertificate>(const json& j) {
    MembershipCertificate c;
    long long N = detail::int_field(j, "N");
    if (N < 1) throw SchemaError("\"N\" must be at least 1");
    c.N = static_cast<unsigned>(N);
    for (const auto& combo : detail::array_field(j, "combos"))
        c.combos.emplace_back(detail::plane_poly_field(combo, "A", plane_vars()),
                              detail::plane_poly_field(combo, "B", plane_vars()));
    if (c.combos.size() != c.N + 1) throw SchemaError("\"combos\" must have N + 1 entries");
    return c;
}

template <>
inline PlaneChain from_json<PlaneChain>(const json& j) {
    PlaneChain c;
    for (const auto& l : detail::array_field(j, "links")) {
        PlaneLink link{from_json<PlaneFamily>(detail::field(l, "family")), detail::orientation_field(l), {}};
        if (l.contains("certificate")) link.certificate = from_json<MembershipCertificate>(l["certificate"]);
        c.links.push_back(std::move(link));
    }
    c.from = from_json<PlanePair>(detail::field(j, "from"));
    c.to = from_json<PlanePair>(detail::field(j, "to"));
    return c;
}

// Reports are output-only.

inline json to_json(const ChainReport& r, const RingTag& ring) {
    json links = json::array(), junctions = json::array();
    for (const auto& l : r.links) {
        json o = {{"index", l.index},
                  {"orientation", to_string(l.orientation)},
                  {"valid", l.valid},
                  {"start", pair_to_json(ring, l.start)},
                  {"end", pair_to_json(ring, l.end)}};
        o["resultant"] = l.resultant ? json(print_poly(*l.resultant)) : json(nullptr);
        o["oracle_resultant"] = l.oracle_resultant ? json(print_poly(*l.oracle_resultant)) : json(nullptr);
        if (!l.valid) o["failure"] = l.failure;
        links.push_back(std::move(o));
    }
    for (const auto& jr : r.junctions)
        junctions.push_back({{"label", jr.label}, {"ok", jr.ok}, {"left", pair_to_json(ring, jr.left)}, {"right", pair_to_json(ring, jr.right)}});
    return {{"verdict", r.pass ? "PASS" : "FAIL"}, {"links", links}, {"junctions", junctions}, {"failures", r.failures}};
}

inline json to_json(const MatrixChainReport& r) {
    json links = json::array(), junctions = json::array();
    for (const auto& l : r.links)
        links.push_back({{"index", l.index},
                         {"orientation", to_string(l.orientation)},
                         {"det", print_poly(l.det)},
                         {"det_unit", l.det_unit},
                         {"infinity_in_open", l.infinity_in_open},
                         {"start", to_json(l.start)},
                         {"end", to_json(l.end)}});
    for (const auto& jr : r.junctions)
        junctions.push_back({{"label", jr.label}, {"ok", jr.ok}, {"exact", jr.exact}, {"left", to_json(jr.left)}, {"right", to_json(jr.right)}});
    return {{"verdict", r.pass ? "PASS" : "FAIL"}, {"links", links}, {"junctions", junctions}, {"failures", r.failures}};
}

inline json to_json(const PlaneChainReport& r) {
    json links = json::array(), junctions = json::array();
    for (const auto& l : r.links) {
        json o = {{"index", l.index},
                  {"orientation", to_string(l.orientation)},
                  {"certified", l.certified},
                  {"supplied", l.supplied},
                  {"start", to_json(l.start)},
                  {"end", to_json(l.end)}};
        o["certificate"] = l.certificate ? to_json(*l.certificate) : json(nullptr);
        if (!l.certified) o["failure"] = l.failure;
        links.push_back(std::move(o));
    }
    for (const auto& jr : r.junctions)
        junctions.push_back({{"label", jr.label}, {"ok", jr.ok}, {"left", to_json(jr.left)}, {"right", to_json(jr.right)}});
    json out = {{"verdict", r.pass ? "PASS" : "FAIL"}, {"nmax", r.nmax}, {"links", links}, {"junctions", junctions}, {"failures", r.failures}};
    out["dmax"] = r.dmax ? json(*r.dmax) : json(nullptr);
    return out;
}

}  // namespace ratmap

#endif
