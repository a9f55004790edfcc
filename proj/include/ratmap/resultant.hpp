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
 * @file resultant.hpp
 * @brief Sylvester resultants at explicit formal degrees, Bezout certificates and reciprocals.
 *
 * Layout of the (n+m)x(n+m) Sylvester matrix: row r holds the coefficient of
 * X^(n+m-1-r). The first m columns are X^(m-1-j)*f for j = 0..m-1, the last
 * n columns are X^(n-1-j)*g. With this layout
 *
 *     res_{n,m}(f, g)   = (-1)^(nm) res_{m,n}(g, f)
 *     res_{n,m}(af, bg) = a^m b^n res_{n,m}(f, g)
 *     res_{n,m}(f*, g*) = (-1)^(nm) res_{n,m}(f, g)
 *
 * Everything is generic over the coefficient domain, so the same code runs
 * over Z, Q, F_p and R[T].
 */

#ifndef RATMAP_RESULTANT_HPP
#define RATMAP_RESULTANT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace ratmap {

/// Sylvester matrix of f at formal degree n and g at formal degree m.
template <class C>
Matrix<C> sylvester_matrix(const Poly<C>& f, std::size_t n, const Poly<C>& g, std::size_t m) {
    if (!(f.ring() == g.ring())) throw RingMismatch("sylvester matrix of polynomials from different rings");
    const Poly<C> fp = f.padded(n), gp = g.padded(m);
    const std::size_t size = n + m;
    Matrix<C> s(f.ring().coeff, size, size);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k <= n; ++k) s(j + n - k, j) = fp.coeffs()[k];
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k <= m; ++k) s(j + m - k, m + j) = gp.coeffs()[k];
    return s;
}

template <class C>
C resultant(const Poly<C>& f, std::size_t n, const Poly<C>& g, std::size_t m) {
    return bareiss_determinant(sylvester_matrix(f, n, g, m));
}

/// Independent resultant: entries come from a closed formula and feed a cofactor expansion.
/// Limited to n + m <= cofactor_size_cap.
template <class C>
C resultant_oracle(const Poly<C>& f, std::size_t n, const Poly<C>& g, std::size_t m) {
    if (!(f.ring() == g.ring())) throw RingMismatch("resultant of polynomials from different rings");
    if (n + m > cofactor_size_cap) throw SizeCapExceeded("resultant oracle is capped at n + m <= 8");
    if (f.degree() && *f.degree() > n) throw DomainError("f exceeds its formal degree");
    if (g.degree() && *g.degree() > m) throw DomainError("g exceeds its formal degree");
    const std::size_t size = n + m;
    Matrix<C> s(f.ring().coeff, size, size);
    for (std::size_t r = 0; r < size; ++r) {
        // Entry (r, c) is the coefficient of X^(size-1-r) in the column's shifted polynomial.
        const long long power = static_cast<long long>(size) - 1 - static_cast<long long>(r);
        for (std::size_t c = 0; c < size; ++c) {
            const bool in_f = c < m;
            const long long shift = in_f ? static_cast<long long>(m - 1 - c) : static_cast<long long>(size - 1 - c);
            const long long k = power - shift;
            if (k >= 0) s(r, c) = in_f ? f.coeff(static_cast<std::size_t>(k)) : g.coeff(static_cast<std::size_t>(k));
        }
    }
    return cofactor_determinant(s);
}

/// Polynomials p (deg < m) and q (deg < n) with p*f + q*g = res_{n,m}(f, g), by Cramer's rule
/// on the Sylvester system. p and q are returned at formal degrees m-1 and n-1 (ZERO when that is negative).
template <class C>
std::pair<Poly<C>, Poly<C>> res_bezout(const Poly<C>& f, std::size_t n, const Poly<C>& g, std::size_t m) {
    if (n + m == 0) throw DomainError("res_bezout needs n + m >= 1");
    const Matrix<C> s = sylvester_matrix(f, n, g, m);
    const std::size_t size = n + m;
    // x_k = cofactor of entry (size-1, k): the solution of S x = res * e_last.
    std::vector<C> x;
    x.reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
        C minor = bareiss_determinant(s.minor(size - 1, k));
        x.push_back(((size - 1 + k) % 2 == 0) ? minor : C(-minor));
    }
    std::vector<C> pc(m, f.zero_coeff()), qc(n, f.zero_coeff());
    for (std::size_t j = 0; j < m; ++j) pc[m - 1 - j] = x[j];
    for (std::size_t j = 0; j < n; ++j) qc[n - 1 - j] = x[m + j];
    return {Poly<C>(f.ring(), std::move(pc)), Poly<C>(f.ring(), std::move(qc))};
}

/// X^n f(1/X): coefficients of f at formal degree n, reversed.
template <class C>
Poly<C> reciprocal(const Poly<C>& f, std::size_t n) {
    std::vector<C> cs = f.padded(n).coeffs();
    std::reverse(cs.begin(), cs.end());
    return Poly<C>(f.ring(), std::move(cs));
}

/// lead * prod (X - root).
inline UPoly split_poly(const Scalar& lead, const std::vector<Scalar>& roots, const std::string& var = "X") {
    auto ring = upoly_ring(lead.ring(), var);
    UPoly p = UPoly::constant(ring, lead);
    for (const auto& r : roots) p *= UPoly(ring, {-r, Scalar(lead.ring(), 1)});
    return p;
}

/// a^m b^n prod_{i,j} (alpha_i - beta_j) with n = #rootsF and m = #rootsG.
inline Scalar resultant_product_oracle(const std::vector<Scalar>& roots_f, const std::vector<Scalar>& roots_g,
                                       const Scalar& lead_f, const Scalar& lead_g) {
    Scalar acc = lead_f.pow(static_cast<unsigned>(roots_g.size())) * lead_g.pow(static_cast<unsigned>(roots_f.size()));
    for (const auto& a : roots_f)
        for (const auto& b : roots_g) acc *= a - b;
    return acc;
}

}  // namespace ratmap

#endif
