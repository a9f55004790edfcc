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
 * @file oracle.hpp
 * @brief Seeded random inputs and the named algebraic-law checks built on them.
 *
 * Each property compares an engine against something that does not share its
 * code path: Bareiss against cofactor expansion, Sylvester determinants
 * against the root-product formula, the Cramer Bezout pair against a
 * Gauss-Jordan solve over the fraction field. A failing trial stops the run
 * and is returned as a JSON counterexample together with the seed.
 */

#ifndef RATMAP_ORACLE_HPP
#define RATMAP_ORACLE_HPP

#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace ratmap {

using Rng = std::mt19937_64;

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Mostly Z, sometimes Q or a small prime field.
inline RingTag random_ring(Rng& rng) {
    static const std::uint64_t primes[] = {2, 3, 5, 7, 101, 65521};
    long long pick = uniform_int(rng, 0, 9);
    if (pick < 6) return RingTag::integers();
    if (pick < 8) return RingTag::rationals();
    return RingTag::prime_field(primes[uniform_int(rng, 0, 5)]);
}

inline Scalar random_scalar(Rng& rng, const RingTag& ring, long long bound) {
    if (ring.kind() == RingKind::rationals && uniform_int(rng, 0, 2) == 0)
        return Scalar::fraction(ring, uniform_int(rng, -bound, bound), uniform_int(rng, 1, bound));
    return Scalar(ring, uniform_int(rng, -bound, bound));
}

inline Scalar random_nonzero_scalar(Rng& rng, const RingTag& ring, long long bound) {
    for (;;) {
        Scalar s = random_scalar(rng, ring, bound);
        if (!s.is_zero()) return s;
    }
}

/// Random coefficients at the given formal degree; the leading ones may vanish.
inline UPoly random_poly(Rng& rng, const RingTag& ring, std::size_t formal_degree, long long bound, std::string var = "X") {
    std::vector<Scalar> cs;
    for (std::size_t k = 0; k <= formal_degree; ++k) cs.push_back(random_scalar(rng, ring, bound));
    return UPoly(upoly_ring(ring, std::move(var)), std::move(cs));
}

struct RandomMapSpec {
    RingTag ring = RingTag::integers();
    std::size_t min_degree = 0, max_degree = 3;
    long long coeff_bound = 3;
    std::uint64_t seed = 1;
    std::size_t attempt_budget = 10000;
};

/// Random valid map. Over Z it multiplies elementary matrices [[X + c, -u], [u, 0]] with u = +-1,
/// so the resultant is a unit by construction; elsewhere it rejection-samples monic f and g.
inline PointedMap gen_valid_map(Rng& rng, const RingTag& ring, std::size_t min_degree, std::size_t max_degree,
                                long long bound, std::size_t budget = 10000) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, static_cast<long long>(min_degree), static_cast<long long>(max_degree)));
    auto pr = upoly_ring(ring);
    if (n == 0) return PointedMap::validate(UPoly::constant(pr, Scalar(ring, 1)), UPoly(pr));
    if (ring.kind() == RingKind::integers) {
        Mat2<UPoly> m{UPoly::constant(pr, Scalar(ring, 1)), UPoly(pr), UPoly(pr), UPoly::constant(pr, Scalar(ring, 1))};
        for (std::size_t k = 0; k < n; ++k) {
            Scalar u(ring, uniform_int(rng, 0, 1) ? 1 : -1);
            UPoly xc(pr, {Scalar(ring, uniform_int(rng, -bound, bound)), Scalar(ring, 1)});
            m = m * Mat2<UPoly>{xc, UPoly::constant(pr, -u), UPoly::constant(pr, u), UPoly(pr)};
        }
        return PointedMap::validate(m.a.trimmed(), m.c.trimmed());
    }
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        UPoly f = random_poly(rng, ring, n, bound);
        std::vector<Scalar> cs = f.coeffs();
        cs[n] = Scalar(ring, 1);
        f = UPoly(pr, std::move(cs));
        UPoly g = random_poly(rng, ring, n - 1, bound).trimmed();
        if (check_map(f, g).ok()) return PointedMap::validate(f, g);
    }
    throw SamplingBudgetExceeded("no valid map of degree " + std::to_string(n) + " over " + ring.to_string() +
                                 " within " + std::to_string(budget) + " attempts");
}

inline PointedMap gen_valid_map(const RandomMapSpec& spec) {
    Rng rng(spec.seed);
    return gen_valid_map(rng, spec.ring, spec.min_degree, spec.max_degree, spec.coeff_bound, spec.attempt_budget);
}

inline HomotopyPoly random_homotopy_poly(Rng& rng, const RingTag& ring, std::size_t x_degree, std::size_t t_degree, long long bound) {
    auto hr = homotopy_ring(ring);
    std::vector<UPoly> cs;
    for (std::size_t k = 0; k <= x_degree; ++k) cs.push_back(random_poly(rng, ring, t_degree, bound, "T").trimmed());
    return HomotopyPoly(hr, std::move(cs)).trimmed();
}

inline MPoly random_mpoly(Rng& rng, const std::vector<std::string>& vars, unsigned max_exp, std::size_t terms, long long bound) {
    MPoly p(vars);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e;
        for (std::size_t i = 0; i < vars.size(); ++i) e.push_back(static_cast<unsigned>(uniform_int(rng, 0, max_exp)));
        p.add_term(std::move(e), uniform_int(rng, -bound, bound));
    }
    return p;
}

/// Invertible matrix over Z[T]: a product of elementary matrices with entries in T.
inline MatrixFamily random_valid_family(Rng& rng, long long bound) {
    auto tr = family_ring();
    auto c = [&](long long v) { return UPoly::constant(tr, Scalar(tr.coeff, v)); };
    MatrixFamily m{c(1), c(0), c(0), c(1)};
    for (int k = 0, steps = static_cast<int>(uniform_int(rng, 1, 3)); k < steps; ++k) {
        UPoly e = random_poly(rng, tr.coeff, 1, bound, "T").trimmed();
        if (uniform_int(rng, 0, 1))
            m = m * MatrixFamily{c(1), e, c(0), c(1)};
        else
            m = m * MatrixFamily{c(1), c(0), e, c(1)};
        if (uniform_int(rng, 0, 1)) m = m * MatrixFamily{c(0), c(1), c(-1), c(0)};
    }
    return m;
}

struct PropertyVerdict {
    std::string name;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    std::string message;
    json counterexample;

    json to_json() const {
        json j = {{"property", name}, {"trials", trials}, {"seed", seed}, {"verdict", pass ? "PASS" : "FAIL"}};
        if (!pass) {
            j["message"] = message;
            j["counterexample"] = counterexample;
        }
        return j;
    }
};

namespace detail {

/// One trial: returns nullopt on success or a counterexample document on failure.
using Trial = std::function<std::optional<json>(Rng&)>;

inline json poly_case(const UPoly& f, std::size_t n, const UPoly& g, std::size_t m) {
    return {{"ring", f.ring().coeff.to_string()}, {"n", n}, {"m", m}, {"f", to_json(f)}, {"g", to_json(g)}};
}

inline std::pair<std::size_t, std::size_t> random_sizes(Rng& rng, std::size_t max_total) {
    std::size_t total = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(max_total)));
    std::size_t n = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(total)));
    return {n, total - n};
}

inline Scalar sign_power(const RingTag& ring, std::size_t e) { return Scalar(ring, e % 2 == 0 ? 1 : -1); }

inline json map_case(std::initializer_list<const PointedMap*> maps) {
    json a = json::array();
    for (auto m : maps) a.push_back(ratmap::to_json(*m));
    return a;
}

/// Field in which to cross-check Bezout pairs: Q for Z and Q, the prime field itself otherwise.
inline RingTag fraction_field(const RingTag& r) { return r.kind() == RingKind::integers ? RingTag::rationals() : r; }

inline Scalar to_field(const Scalar& s, const RingTag& field) {
    return Scalar::fraction(field, s.numerator(), s.denominator());
}

/// Gauss-Jordan on a square system; pivots are scanned from the left (forward) or from the right.
/// Returns nullopt when singular.
inline std::optional<std::vector<Scalar>> gauss_jordan(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b, bool reverse_order) {
    const std::size_t n = b.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = reverse_order ? n - 1 - i : i;
    std::vector<std::size_t> pivot_row_of(n);
    std::vector<bool> used(n, false);
    for (std::size_t col : order) {
        std::optional<std::size_t> piv;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t r = reverse_order ? n - 1 - k : k;
            if (!used[r] && !a[r][col].is_zero()) {
                piv = r;
                break;
            }
        }
        if (!piv) return std::nullopt;
        used[*piv] = true;
        pivot_row_of[col] = *piv;
        Scalar inv = a[*piv][col].inverse();
        for (auto& v : a[*piv]) v *= inv;
        b[*piv] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == *piv || a[r][col].is_zero()) continue;
            Scalar factor = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= factor * a[*piv][c];
            b[r] -= factor * b[*piv];
        }
    }
    std::vector<Scalar> x;
    for (std::size_t col = 0; col < n; ++col) x.push_back(b[pivot_row_of[col]]);
    return x;
}

inline std::map<std::string, Trial> property_table() {
    std::map<std::string, Trial> t;
    const long long B = 4;

    t["oracle_agreement"] = [B](Rng& rng) -> std::optional<json> {
        RingTag r = random_ring(rng);
        auto [n, m] = random_sizes(rng, cofactor_size_cap);
        UPoly f = random_poly(rng, r, n, B), g = random_poly(rng, r, m, B);
        if (resultant(f, n, g, m) == resultant_oracle(f, n, g, m)) return std::nullopt;
        return poly_case(f, n, g, m);
    };
    t["swap_law"] = [B](Rng& rng) -> std::optional<json> {
        RingTag r = random_ring(rng);
        auto [n, m] = random_sizes(rng, cofactor_size_cap);
        UPoly f = random_poly(rng, r, n, B), g = random_poly(rng, r, m, B);
        if (resultant(f, n, g, m) == sign_power(r, n * m) * resultant_oracle(g, m, f, n)) return std::nullopt;
        return poly_case(f, n, g, m);
    };
    t["scaling_law"] = [B](Rng& rng) -> std::optional<json> {
        RingTag r = random_ring(rng);
        auto [n, m] = random_sizes(rng, cofactor_size_cap);
        UPoly f = random_poly(rng, r, n, B), g = random_poly(rng, r, m, B);
        Scalar a = random_scalar(rng, r, B), b = random_scalar(rng, r, B);
        Scalar lhs = resultant(a * f, n, b * g, m);
        Scalar rhs = a.pow(static_cast<unsigned>(m)) * b.pow(static_cast<unsigned>(n)) * resultant_oracle(f, n, g, m);
        if (lhs == rhs) return std::nullopt;
        json c = poly_case(f, n, g, m);
        c["a"] = a.to_string();
        c["b"] = b.to_string();
        return c;
    };
    t["bezout_law"] = [B](Rng& rng) -> std::optional<json> {
        RingTag r = random_ring(rng);
        auto [n, m] = random_sizes(rng, cofactor_size_cap);
        if (n + m == 0) n = 1;
        UPoly f = random_poly(rng, r, n, B), g = random_poly(rng, r, m, B);
        auto [p, q] = res_bezout(f, n, g, m);
        Scalar res = resultant_oracle(f, n, g, m);
        bool bounds = (!p.degree() || *p.degree() < m) && (!q.degree() || *q.degree() < n);
        if (bounds && p * f + q * g == UPoly::constant(f.ring(), res)) return std::nullopt;
        json c = poly_case(f, n, g, m);
        c["p"] = to_json(p);
        c["q"] = to_json(q);
        return c;
    };
    t["product_law"] = [B](Rng& rng) -> std::optional<json> {
        RingTag r = random_ring(rng);
        auto [n, m] = random_sizes(rng, cofactor_size_cap);
        std::vector<Scalar> rf, rg;
        for (std::size_t i = 0; i < n; ++i) rf.push_back(random_scalar(rng, r, B));
        for (std::size_t i = 0; i < m; ++i) rg.push_back(random_scalar(rng, r, B));
        bool monic = uniform_int(rng, 0, 1) == 0;
        Scalar a = monic ? Scalar(r, 1) : random_nonzero_scalar(rng, r, B);
        Scalar b = monic ? Scalar(r, 1) : random_nonzero_scalar(rng, r, B);
        UPoly f = split_poly(a, rf), g = split_poly(b, rg);
        if (resultant(f, n, g, m) == resultant_product_oracle(rf, rg, a, b)) return std::nullopt;
        json c = poly_case(f, n, g, m);
        json jr = json::array(), js = json::array();
        for (auto& x : rf) jr.push_back(x.to_string());
        for (auto& x : rg) js.push_back(x.to_string());
        c["roots_f"] = jr;
        c["roots_g"] = js;
        return c;
    };
    t["reciprocal_law"] = [B](Rng& rng) -> std::optional<json> {
        RingTag r = random_ring(rng);
        auto [n, m] = random_sizes(rng, cofactor_size_cap);
        UPoly f = random_poly(rng, r, n, B), g = random_poly(rng, r, m, B);
        if (resultant(reciprocal(f, n), n, reciprocal(g, m), m) == sign_power(r, n * m) * resultant_oracle(f, n, g, m))
            return std::nullopt;
        return poly_case(f, n, g, m);
    };

    auto three_maps = [](Rng& rng) {
        RingTag r = random_ring(rng);
        return std::array<PointedMap, 3>{gen_valid_map(rng, r, 0, 3, 3), gen_valid_map(rng, r, 0, 3, 3),
                                         gen_valid_map(rng, r, 0, 3, 3)};
    };
    t["oplus_assoc"] = [three_maps](Rng& rng) -> std::optional<json> {
        auto [u, v, w] = three_maps(rng);
        if (oplus(oplus(u, v), w) == oplus(u, oplus(v, w))) return std::nullopt;
        return map_case({&u, &v, &w});
    };
    t["oplus_identity"] = [three_maps](Rng& rng) -> std::optional<json> {
        auto maps = three_maps(rng);
        const PointedMap& u = maps[0];
        PointedMap zero = named(NamedMap::zero, u.ring());
        if (oplus(u, zero) == u && oplus(zero, u) == u) return std::nullopt;
        return map_case({&u});
    };
    t["degree_additivity"] = [three_maps](Rng& rng) -> std::optional<json> {
        auto [u, v, w] = three_maps(rng);
        PointedMap s = oplus(u, v);
        if (s.n() == u.n() + v.n() && check_map(s.f(), s.g()).ok()) return std::nullopt;
        return map_case({&u, &v});
    };
    t["matrix_law"] = [three_maps](Rng& rng) -> std::optional<json> {
        auto [u, v, w] = three_maps(rng);
        if (bezout_pair(oplus(u, v)).matrix() == bezout_pair(u).matrix() * bezout_pair(v).matrix()) return std::nullopt;
        return map_case({&u, &v});
    };
    t["det_witness"] = [three_maps](Rng& rng) -> std::optional<json> {
        auto maps = three_maps(rng);
        const PointedMap& u = maps[0];
        SL2Witness w = bezout_pair(u);
        UPoly one = UPoly::constant(u.f().ring(), Scalar(u.ring(), 1));
        if (w.matrix().det() == one && w.p * u.f() + w.q * u.g() == one) return std::nullopt;
        return map_case({&u});
    };
    t["bezout_uniqueness"] = [three_maps](Rng& rng) -> std::optional<json> {
        auto maps = three_maps(rng);
        const PointedMap& u = maps[0];
        const std::size_t n = u.n();
        if (n == 0) return std::nullopt;
        // Unknowns: p_0..p_{n-2}, q_0..q_{n-1}; equations: coefficients of X^0..X^{2n-2} in p f + q g = 1.
        RingTag field = fraction_field(u.ring());
        const std::size_t size = 2 * n - 1;
        std::vector<std::vector<Scalar>> a(size, std::vector<Scalar>(size, Scalar(field, 0)));
        std::vector<Scalar> b(size, Scalar(field, 0));
        b[0] = Scalar(field, 1);
        for (std::size_t j = 0; j + 1 < n; ++j)
            for (std::size_t k = 0; k <= n; ++k) a[j + k][j] = to_field(u.f().coeff(k), field);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) a[j + k][n - 1 + j] = to_field(u.g().coeff(k), field);
        auto x1 = gauss_jordan(a, b, false), x2 = gauss_jordan(a, b, true);
        SL2Witness w = bezout_pair(u);
        bool ok = x1 && x2 && *x1 == *x2;
        for (std::size_t j = 0; ok && j < size; ++j) {
            Scalar expected = j + 1 < n ? w.p.coeff(j) : w.q.coeff(j - (n - 1));
            ok = (*x1)[j] == to_field(expected, field);
        }
        if (ok && (!w.p.degree() || *w.p.degree() + 1 < n) && (!w.q.degree() || *w.q.degree() < n)) return std::nullopt;
        return map_case({&u});
    };

    t["io_roundtrip"] = [](Rng& rng) -> std::optional<json> {
        RingTag r = random_ring(rng);
        UPoly p = random_poly(rng, r, static_cast<std::size_t>(uniform_int(rng, 0, 6)), 20);
        if (uniform_int(rng, 0, 4) == 0) p = UPoly(p.ring());
        HomotopyPoly h = random_homotopy_poly(rng, r, static_cast<std::size_t>(uniform_int(rng, 0, 3)),
                                              static_cast<std::size_t>(uniform_int(rng, 0, 3)), 9);
        MPoly mp = random_mpoly(rng, plane_vars(), 3, static_cast<std::size_t>(uniform_int(rng, 0, 5)), 9);
        PointedMap u = gen_valid_map(rng, r, 0, 3, 3);
        bool ok = identical(parse_upoly(print_poly(p), r), p.trimmed()) && identical(from_json<UPoly>(to_json(p)), p) &&
                  identical(parse_homotopy_poly(print_poly(h), r), h) && parse_mpoly(print_poly(mp), plane_vars()) == mp &&
                  from_json<PointedMap>(parse_json_text(to_json(u).dump())) == u;
        if (ok) return std::nullopt;
        return json{{"poly", to_json(p)}, {"homotopy", print_poly(h)}, {"mpoly", print_poly(mp)}, {"map", to_json(u)}};
    };
    t["parser_fuzz"] = [](Rng& rng) -> std::optional<json> {
        // Delete one token from a printed polynomial: the parser must either accept the result or
        // throw a ParseError whose position lies inside the text. Nothing else may escape.
        RingTag r = random_ring(rng);
        HomotopyPoly h = random_homotopy_poly(rng, r, 2, 2, 9);
        std::string text = print_fraction(h, random_homotopy_poly(rng, r, 1, 2, 9));
        std::vector<std::pair<std::size_t, std::size_t>> spans;
        for (std::size_t i = 0; i < text.size();) {
            if (text[i] == ' ') {
                ++i;
                continue;
            }
            std::size_t j = i + 1;
            if (std::isalnum(static_cast<unsigned char>(text[i])))
                while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            spans.emplace_back(i, j - i);
            i = j;
        }
        if (spans.empty()) return std::nullopt;
        auto [at, len] = spans[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(spans.size()) - 1))];
        std::string mutated = text.substr(0, at) + text.substr(at + len);
        try {
            parse_homotopy_pair(mutated, r);
            return std::nullopt;
        } catch (const ParseError& e) {
            if (e.position() <= mutated.size()) return std::nullopt;
            return json{{"input", mutated}, {"error", e.what()}};
        } catch (const std::exception& e) {
            return json{{"input", mutated}, {"unexpected", e.what()}};
        }
    };
    return t;
}

}  // namespace detail

inline std::vector<std::string> property_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : detail::property_table()) out.push_back(k);
    return out;
}

/// Run a named property. Throws DomainError for an unknown name.
inline PropertyVerdict run_property(const std::string& name, std::size_t trials, std::uint64_t seed) {
    auto table = detail::property_table();
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown property '" + name + "'");
    PropertyVerdict v{name, trials, seed, true, "", nullptr};
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        std::optional<json> bad;
        try {
            bad = it->second(rng);
        } catch (const std::exception& e) {
            bad = json{{"exception", e.what()}};
        }
        if (bad) {
            v.pass = false;
            v.message = "trial " + std::to_string(i) + " failed";
            v.counterexample = std::move(*bad);
            return v;
        }
    }
    return v;
}

}  // namespace ratmap

#endif
