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
 * @file int_linear.hpp
 * @brief Exact integer solutions of A x = b.
 *
 * HermiteSolver brings A to column Hermite form H = A U with U unimodular,
 * then solves H y = b by forward substitution. A solution exists over Z iff
 * every step divides exactly and the residual vanishes, so a negative answer
 * is a proof that no integer solution exists.
 *
 * feasible_mod_p is a cheap necessary condition used to skip hopeless
 * systems: no solution mod p means no rational, hence no integer, solution.
 */

#ifndef RATMAP_INT_LINEAR_HPP
#define RATMAP_INT_LINEAR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace ratmap {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Integer> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Integer& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::vector<Integer> apply(const std::vector<Integer>& x) const {
        std::vector<Integer> out(rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if ((*this)(r, c) != 0 && x[c] != 0) out[r] += (*this)(r, c) * x[c];
        return out;
    }
};

class HermiteSolver {
   public:
    explicit HermiteSolver(IntMatrix a) : h_(std::move(a)), u_(h_.cols, h_.cols) {
        for (std::size_t i = 0; i < h_.cols; ++i) u_(i, i) = 1;
        reduce();
    }

    /// Some integer x with A x = b, or nullopt when none exists.
    std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const {
        if (b.size() != h_.rows) throw DomainError("right-hand side has the wrong length");
        std::vector<Integer> residual = b, y(h_.cols);
        for (auto [row, col] : pivots_) {
            const Integer& piv = h_(row, col);
            if (residual[row] % piv != 0) return std::nullopt;
            y[col] = residual[row] / piv;
            if (y[col] == 0) continue;
            for (std::size_t r = row; r < h_.rows; ++r)
                if (h_(r, col) != 0) residual[r] -= y[col] * h_(r, col);
        }
        for (const auto& v : residual)
            if (v != 0) return std::nullopt;
        return u_.apply(y);
    }

    std::size_t rank() const { return pivots_.size(); }

   private:
    void column_combine(std::size_t k, std::size_t j, const Integer& s, const Integer& t, const Integer& x,
                        const Integer& y) {
        // (col_k, col_j) <- (s col_k + t col_j, x col_k + y col_j); unimodular when s y - t x = +-1.
        auto mix = [&](IntMatrix& m, std::size_t from_row) {
            for (std::size_t r = from_row; r < m.rows; ++r) {
                Integer ck = m(r, k), cj = m(r, j);
                if (ck == 0 && cj == 0) continue;
                m(r, k) = s * ck + t * cj;
                m(r, j) = x * ck + y * cj;
            }
        };
        mix(h_, current_row_);
        mix(u_, 0);
    }

    void swap_columns(std::size_t k, std::size_t j) {
        for (std::size_t r = 0; r < h_.rows; ++r) std::swap(h_(r, k), h_(r, j));
        for (std::size_t r = 0; r < u_.rows; ++r) std::swap(u_(r, k), u_(r, j));
    }

    void negate_column(std::size_t k) {
        for (std::size_t r = 0; r < h_.rows; ++r) h_(r, k) = -h_(r, k);
        for (std::size_t r = 0; r < u_.rows; ++r) u_(r, k) = -u_(r, k);
    }

    void reduce() {
        std::size_t k = 0;
        for (current_row_ = 0; current_row_ < h_.rows && k < h_.cols; ++current_row_) {
            const std::size_t i = current_row_;
            for (std::size_t j = k + 1; j < h_.cols; ++j) {
                if (h_(i, j) == 0) continue;
                if (h_(i, k) == 0) {
                    swap_columns(k, j);
                    continue;
                }
                auto [g, s, t] = extended_gcd(h_(i, k), h_(i, j));
                Integer a = h_(i, k) / g, b = h_(i, j) / g;
                column_combine(k, j, s, t, Integer(-b), a);
            }
            if (h_(i, k) == 0) continue;
            if (h_(i, k) < 0) negate_column(k);
            // Keep entries left of the pivot small.
            for (std::size_t j = 0; j < k; ++j) {
                Integer q = h_(i, j) / h_(i, k);
                if (h_(i, j) - q * h_(i, k) < 0) q -= 1;
                if (q != 0) column_combine(j, k, 1, -q, 0, 1);
            }
            pivots_.emplace_back(i, k);
            ++k;
        }
    }

    IntMatrix h_, u_;
    std::vector<std::pair<std::size_t, std::size_t>> pivots_;
    std::size_t current_row_ = 0;
};

inline constexpr std::uint64_t default_filter_prime = 2147483647ULL;

/// True when A x = b has a solution modulo the prime p.
inline bool feasible_mod_p(const IntMatrix& a, const std::vector<Integer>& b, std::uint64_t p = default_filter_prime) {
    const std::size_t rows = a.rows, cols = a.cols + 1;
    std::vector<std::uint64_t> m(rows * cols);
    const Integer P(p);
    auto residue = [&](const Integer& v) {
        Integer r = v % P;
        if (r < 0) r += P;
        return static_cast<std::uint64_t>(r);
    };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) m[r * cols + c] = residue(a(r, c));
        m[r * cols + a.cols] = residue(b[r]);
    }
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>((unsigned __int128)x * y % p); };
    auto inv = [&](std::uint64_t x) {
        std::uint64_t result = 1, e = p - 2;
        for (; e; e >>= 1, x = mulmod(x, x))
            if (e & 1) result = mulmod(result, x);
        return result;
    };
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[row * cols + j]);
        std::uint64_t iv = inv(m[row * cols + c]);
        for (std::size_t j = c; j < cols; ++j) m[row * cols + j] = mulmod(m[row * cols + j], iv);
        for (std::size_t r = row + 1; r < rows; ++r) {
            std::uint64_t f = m[r * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                m[r * cols + j] = (m[r * cols + j] + p - mulmod(f, m[row * cols + j])) % p;
        }
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (m[r * cols + a.cols] != 0) return false;
    return true;
}

}  // namespace ratmap

#endif
