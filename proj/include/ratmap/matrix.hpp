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
 * @file matrix.hpp
 * @brief Dense square matrices over an integral domain and two determinant algorithms.
 *
 * bareiss_determinant is the production path. cofactor_determinant is an
 * exponential Laplace expansion kept as an independent check; it refuses
 * matrices larger than cofactor_size_cap.
 */

#ifndef RATMAP_MATRIX_HPP
#define RATMAP_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace ratmap {

template <class E>
class Matrix {
   public:
    using context = typename element_traits<E>::context;

    Matrix(context ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, element_traits<E>::zero(ctx_)) {}

    const context& ring() const noexcept { return ctx_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    /// Copy without row `r` and column `c`.
    Matrix minor(std::size_t r, std::size_t c) const {
        Matrix out(ctx_, rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
                if (j == c) continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    context ctx_;
    std::size_t rows_, cols_;
    std::vector<E> data_;
};

/// Fraction-free Gaussian elimination. Every division is exact in a domain.
/// Row swaps flip the sign; a column with no usable pivot means the determinant is 0.
template <class E>
E bareiss_determinant(Matrix<E> a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    E one = element_traits<E>::one(a.ring());
    if (n == 0) return one;
    bool negate = false;
    E prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(a(p, k))) ++p;
            if (p == n) return element_traits<E>::zero(a.ring());
            a.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            a(i, k) = element_traits<E>::zero(a.ring());
        }
        prev = a(k, k);
    }
    E det = a(n - 1, n - 1);
    return negate ? E(-det) : det;
}

/// 2x2 matrix [[a, b], [c, d]].
template <class E>
struct Mat2 {
    E a, b, c, d;

    E det() const { return a * d - b * c; }
    Mat2 negated() const { return {-a, -b, -c, -d}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }

    template <class F>
    auto map(F&& fn) const -> Mat2<decltype(fn(a))> {
        return {fn(a), fn(b), fn(c), fn(d)};
    }
};

inline constexpr std::size_t cofactor_size_cap = 8;

/// Laplace expansion down the columns, memoised on the set of rows already used.
/// Throws SizeCapExceeded above cofactor_size_cap.
template <class E>
E cofactor_determinant(const Matrix<E>& a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n > cofactor_size_cap)
        throw SizeCapExceeded("cofactor expansion is capped at " + std::to_string(cofactor_size_cap) + "x" +
                              std::to_string(cofactor_size_cap) + ", got " + std::to_string(n));
    std::unordered_map<std::uint32_t, E> memo;
    // expand(used) = determinant of the submatrix on columns popcount(used).. and the unused rows.
    auto expand = [&](auto& self, std::uint32_t used, std::size_t col) -> E {
        if (col == n) return element_traits<E>::one(a.ring());
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        E acc = element_traits<E>::zero(a.ring());
        std::size_t position = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (used & (1u << r)) continue;
            if (!is_zero(a(r, col))) {
                E term = a(r, col) * self(self, used | (1u << r), col + 1);
                acc = (position % 2 == 0) ? acc + term : acc - term;
            }
            ++position;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return expand(expand, 0u, 0);
}

}  // namespace ratmap

#endif
