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

#ifndef RATMAP_MPOLY_HPP
#define RATMAP_MPOLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace ratmap {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial over Z in an ordered list of variables.
/// Terms are kept in descending lexicographic order of exponent vectors and never hold a zero coefficient.
class MPoly {
   public:
    using term_map = std::map<Exponents, Integer, std::greater<>>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Integer& c) {
        MPoly p(std::move(vars));
        p.add_term(Exponents(p.vars_.size(), 0), c);
        return p;
    }
    static MPoly variable(std::vector<std::string> vars, const std::string& name) {
        MPoly p(std::move(vars));
        Exponents e(p.vars_.size(), 0);
        e[p.index_of(name)] = 1;
        p.add_term(std::move(e), 1);
        return p;
    }

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - vars_.begin());
    }
    bool has_var(const std::string& name) const { return std::find(vars_.begin(), vars_.end(), name) != vars_.end(); }

    void add_term(Exponents e, const Integer& c) {
        if (e.size() != vars_.size()) throw DomainError("exponent vector length does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Integer coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
        return d;
    }
    int degree_in(const std::string& name) const {
        std::size_t i = index_of(name);
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[i]));
        return d;
    }

    /// Every term has total degree d in the listed variables.
    bool is_homogeneous_in(const std::vector<std::string>& names, unsigned d) const {
        std::vector<std::size_t> idx;
        for (const auto& n : names) idx.push_back(index_of(n));
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (auto i : idx) s += e[i];
            if (s != d) return false;
        }
        return true;
    }

    /// Re-express over another variable list; every variable in use must be present.
    MPoly with_variables(const std::vector<std::string>& new_vars) const {
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            where[i] = it == new_vars.end() ? new_vars.size() : static_cast<std::size_t>(it - new_vars.begin());
        }
        MPoly out(new_vars);
        for (const auto& [e, c] : terms_) {
            Exponents ne(new_vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (where[i] == new_vars.size()) throw DomainError("variable '" + vars_[i] + "' is not in the target list");
                ne[where[i]] = e[i];
            }
            out.add_term(std::move(ne), c);
        }
        return out;
    }

    /// Substitute var := value; `value` must use the same variable list. The variable list is kept.
    MPoly substitute(const std::string& name, const MPoly& value) const {
        check_same(*this, value);
        std::size_t i = index_of(name);
        MPoly out(vars_);
        std::vector<MPoly> powers{constant(vars_, 1)};
        for (const auto& [e, c] : terms_) {
            while (powers.size() <= e[i]) powers.push_back(powers.back() * value);
            Exponents rest = e;
            rest[i] = 0;
            MPoly mono(vars_);
            mono.add_term(std::move(rest), c);
            out += mono * powers[e[i]];
        }
        return out;
    }

    /// Evaluate var := value; the variable is dropped from the result.
    MPoly evaluate(const std::string& name, const Integer& value) const {
        std::size_t i = index_of(name);
        std::vector<std::string> rest_vars = vars_;
        rest_vars.erase(rest_vars.begin() + static_cast<std::ptrdiff_t>(i));
        MPoly out(rest_vars);
        for (const auto& [e, c] : terms_) {
            Exponents ne = e;
            ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(i));
            out.add_term(std::move(ne), c * boost::multiprecision::pow(value, e[i]));
        }
        return out;
    }

    /// Value at an integer point (one entry per variable).
    Integer evaluate_at(const std::vector<Integer>& point) const {
        if (point.size() != vars_.size()) throw DomainError("point dimension does not match variable count");
        Integer acc = 0;
        for (const auto& [e, c] : terms_) {
            Integer t = c;
            for (std::size_t i = 0; i < e.size(); ++i) t *= boost::multiprecision::pow(point[i], e[i]);
            acc += t;
        }
        return acc;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

    MPoly pow(unsigned k) const {
        MPoly r = constant(vars_, 1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

   private:
    static void check_same(const MPoly& a, const MPoly& b) {
        if (a.vars_ != b.vars_) throw RingMismatch("multivariate polynomials over different variable lists");
    }

    std::vector<std::string> vars_;
    term_map terms_;
};

}  // namespace ratmap

#endif
