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
 * @file punctured_plane.hpp
 * @brief Families (F0, F1) over Z[T0, T1, T] of self-maps of the plane minus the origin.
 *
 * (F0, F1) misses the origin away from T0 = T1 = 0 when some power of the
 * ideal (T0, T1) lies in (F0, F1). A MembershipCertificate witnesses this with
 * integer polynomials A_i, B_i such that
 *
 *     T0^i T1^(N-i) = A_i F0 + B_i F1,   i = 0..N.
 *
 * find_membership searches for one by solving the integer linear system for
 * the coefficients of A_i, B_i at increasing N and then increasing degree.
 * Failing to find one says nothing about existence beyond the bounds tried.
 */

#ifndef RATMAP_PUNCTURED_PLANE_HPP
#define RATMAP_PUNCTURED_PLANE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chain_common.hpp"
#include "expr.hpp"
#include "int_linear.hpp"
#include "mpoly.hpp"

namespace ratmap {

inline const std::vector<std::string>& plane_vars() {
    static const std::vector<std::string> vars{"T0", "T1", "T"};
    return vars;
}

inline const std::vector<std::string>& plane_point_vars() {
    static const std::vector<std::string> vars{"T0", "T1"};
    return vars;
}

struct PlaneFamily {
    MPoly F0, F1;
};

inline PlaneFamily parse_plane_family(std::string_view f0, std::string_view f1) {
    return {parse_mpoly(f0, plane_vars()), parse_mpoly(f1, plane_vars())};
}

using PlanePair = std::pair<MPoly, MPoly>;

inline PlanePair parse_plane_pair(std::string_view f0, std::string_view f1) {
    return {parse_mpoly(f0, plane_point_vars()), parse_mpoly(f1, plane_point_vars())};
}

inline std::string print_plane_pair(const PlanePair& p) { return "(" + print_poly(p.first) + ", " + print_poly(p.second) + ")"; }

struct MembershipCertificate {
    unsigned N = 1;
    /// combos[i] = (A_i, B_i) for the monomial T0^i T1^(N-i).
    std::vector<std::pair<MPoly, MPoly>> combos;

    /// Largest total degree among the A_i, B_i (0 when all vanish).
    int coefficient_degree() const {
        int d = 0;
        for (const auto& [a, b] : combos) d = std::max({d, a.total_degree(), b.total_degree()});
        return d;
    }
};

/// T0^i T1^(N-i) over the plane variables.
inline MPoly target_monomial(unsigned i, unsigned N) {
    MPoly m(plane_vars());
    m.add_term({i, N - i, 0}, 1);
    return m;
}

struct MembershipCheck {
    bool ok = false;
    std::optional<unsigned> failing_index;
    std::string message;
};

inline MembershipCheck verify_membership(const PlaneFamily& fam, const MembershipCertificate& cert) {
    MembershipCheck out;
    if (cert.N < 1 || cert.combos.size() != cert.N + 1) {
        out.message = "certificate needs N >= 1 and N + 1 combinations";
        return out;
    }
    for (unsigned i = 0; i <= cert.N; ++i) {
        const auto& [a, b] = cert.combos[i];
        MPoly lhs = target_monomial(i, cert.N);
        if (!(a.vars() == plane_vars() && b.vars() == plane_vars()) || !(a * fam.F0 + b * fam.F1 == lhs)) {
            out.failing_index = i;
            out.message = "identity for " + print_poly(lhs) + " does not hold";
            return out;
        }
    }
    out.ok = true;
    return out;
}

struct MembershipSearch {
    std::optional<MembershipCertificate> certificate;
    unsigned nmax = 0, dmax = 0;

    /// Text for the inconclusive case; deliberately does not claim nonexistence.
    std::string not_found_message() const {
        return "NotFound: no certificate with N <= " + std::to_string(nmax) + " and coefficient degree <= " +
               std::to_string(dmax) + " (inconclusive)";
    }
};

namespace detail {

inline std::vector<Exponents> monomials_up_to(unsigned degree) {
    std::vector<Exponents> out;
    for (unsigned d = 0; d <= degree; ++d)
        for (unsigned a = d + 1; a-- > 0;)
            for (unsigned b = d - a + 1; b-- > 0;) out.push_back({a, b, d - a - b});
    return out;
}

/// The linear map (A, B) -> A F0 + B F1 restricted to deg A, deg B <= D.
class MembershipSystem {
   public:
    MembershipSystem(const PlaneFamily& fam, unsigned D) : monomials_(monomials_up_to(D)) {
        std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;
        for (const MPoly* F : {&fam.F0, &fam.F1})
            for (const auto& m : monomials_) {
                std::vector<std::pair<std::size_t, Integer>> col;
                for (const auto& [e, c] : F->terms()) {
                    Exponents sum(3);
                    for (int k = 0; k < 3; ++k) sum[k] = e[k] + m[k];
                    auto [it, fresh] = rows_.try_emplace(sum, rows_.size());
                    col.emplace_back(it->second, c);
                }
                columns.push_back(std::move(col));
            }
        matrix_ = IntMatrix(rows_.size(), columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (const auto& [r, v] : columns[c]) matrix_(r, c) += v;
    }

    /// Solve for the target monomial; nullopt when no integer solution of this degree exists.
    std::optional<std::pair<MPoly, MPoly>> solve(const Exponents& target) {
        auto it = rows_.find(target);
        if (it == rows_.end()) return std::nullopt;
        std::vector<Integer> b(rows_.size());
        b[it->second] = 1;
        if (!feasible_mod_p(matrix_, b)) return std::nullopt;
        if (!solver_) solver_ = std::make_unique<HermiteSolver>(matrix_);
        auto x = solver_->solve(b);
        if (!x) return std::nullopt;
        MPoly a(plane_vars()), bb(plane_vars());
        const std::size_t k = monomials_.size();
        for (std::size_t j = 0; j < k; ++j) {
            a.add_term(monomials_[j], (*x)[j]);
            bb.add_term(monomials_[j], (*x)[k + j]);
        }
        return std::pair{std::move(a), std::move(bb)};
    }

   private:
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::size_t> rows_;
    IntMatrix matrix_;
    std::unique_ptr<HermiteSolver> solver_;
};

}  // namespace detail

inline unsigned default_dmax(const PlaneFamily& fam, unsigned nmax) {
    return static_cast<unsigned>(std::max({0, fam.F0.total_degree(), fam.F1.total_degree()})) + nmax;
}

/// Searches N = 1..nmax, and for each target monomial the smallest coefficient degree <= dmax.
inline MembershipSearch find_membership(const PlaneFamily& fam, unsigned nmax = 6, std::optional<unsigned> dmax = {}) {
    MembershipSearch out;
    out.nmax = nmax;
    out.dmax = dmax ? *dmax : default_dmax(fam, nmax);
    std::map<unsigned, detail::MembershipSystem> systems;  // the matrix depends only on the degree
    auto system = [&](unsigned D) -> detail::MembershipSystem& {
        auto it = systems.find(D);
        if (it == systems.end()) it = systems.emplace(D, detail::MembershipSystem(fam, D)).first;
        return it->second;
    };
    for (unsigned N = 1; N <= nmax; ++N) {
        MembershipCertificate cert;
        cert.N = N;
        bool complete = true;
        for (unsigned i = 0; i <= N && complete; ++i) {
            std::optional<std::pair<MPoly, MPoly>> combo;
            for (unsigned D = 0; D <= out.dmax && !combo; ++D) combo = system(D).solve({i, N - i, 0});
            if (combo)
                cert.combos.push_back(std::move(*combo));
            else
                complete = false;
        }
        if (complete) {
            out.certificate = std::move(cert);
            return out;
        }
    }
    return out;
}

/// (F0, F1) at T = t, over the variables T0, T1.
inline PlanePair plane_endpoint(const PlaneFamily& fam, int t) {
    return {fam.F0.evaluate("T", t), fam.F1.evaluate("T", t)};
}

/// T -> 1 - T.
inline PlaneFamily reverse_plane_family(const PlaneFamily& fam) {
    MPoly one_minus_t = MPoly::constant(plane_vars(), 1) - MPoly::variable(plane_vars(), "T");
    return {fam.F0.substitute("T", one_minus_t), fam.F1.substitute("T", one_minus_t)};
}

struct PlaneLink {
    PlaneFamily family;
    Orientation orientation = Orientation::forward;
    /// Checked when present; otherwise one is searched for.
    std::optional<MembershipCertificate> certificate;
};

struct PlaneChain {
    std::vector<PlaneLink> links;
    PlanePair from, to;
};

struct PlaneLinkReport {
    std::size_t index = 0;
    Orientation orientation = Orientation::forward;
    bool certified = false;
    bool supplied = false;
    std::optional<MembershipCertificate> certificate;
    std::string failure;
    PlanePair start, end;
};

struct PlaneJunctionReport {
    std::string label;
    bool ok = false;
    PlanePair left, right;
};

struct PlaneChainReport {
    bool pass = false;
    unsigned nmax = 0;
    std::optional<unsigned> dmax;
    std::vector<PlaneLinkReport> links;
    std::vector<PlaneJunctionReport> junctions;
    std::vector<std::string> failures;

    std::string first_failure() const { return failures.empty() ? std::string() : failures.front(); }
};

inline PlaneChainReport verify_plane_chain(const PlaneChain& chain, unsigned nmax = 6, std::optional<unsigned> dmax = {}) {
    PlaneChainReport rep;
    rep.nmax = nmax;
    rep.dmax = dmax;
    auto normalize = [](const PlanePair& p) {
        return PlanePair{p.first.with_variables(plane_point_vars()), p.second.with_variables(plane_point_vars())};
    };
    auto junction = [&](std::size_t i, const PlanePair& left, const PlanePair& right) {
        PlaneJunctionReport j{junction_label(i, chain.links.size()), left == right, left, right};
        if (!j.ok)
            rep.failures.push_back("junction " + j.label + ": " + print_plane_pair(left) + " != " + print_plane_pair(right));
        rep.junctions.push_back(std::move(j));
    };
    PlanePair previous = normalize(chain.from);
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        const PlaneLink& link = chain.links[i];
        PlaneLinkReport lr;
        lr.index = i + 1;
        lr.orientation = link.orientation;
        auto [t0, t1] = traversal(link.orientation);
        lr.start = plane_endpoint(link.family, t0);
        lr.end = plane_endpoint(link.family, t1);
        junction(i, previous, lr.start);
        if (link.certificate) {
            lr.supplied = true;
            MembershipCheck c = verify_membership(link.family, *link.certificate);
            lr.certified = c.ok;
            lr.certificate = link.certificate;
            if (!c.ok) lr.failure = "supplied certificate rejected: " + c.message;
        } else {
            MembershipSearch s = find_membership(link.family, nmax, dmax);
            lr.certificate = s.certificate;
            lr.certified = s.certificate && verify_membership(link.family, *s.certificate).ok;
            if (!lr.certified) lr.failure = s.not_found_message();
        }
        if (!lr.certified) rep.failures.push_back("link " + std::to_string(lr.index) + ": " + lr.failure);
        previous = lr.end;
        rep.links.push_back(std::move(lr));
    }
    junction(chain.links.size(), previous, normalize(chain.to));
    rep.pass = rep.failures.empty();
    return rep;
}

inline std::vector<std::string> builtin_plane_chain_names() { return {"prop_3_4_5", "plane-square"}; }

/// Six families joining (T0^2, T1) to (T0, T1^2); orientations F, R, R, F, R, R.
inline PlaneChain builtin_plane_chain(std::string_view name) {
    if (name != "prop_3_4_5" && name != "plane-square")
        throw DomainError("unknown built-in plane chain '" + std::string(name) + "'");
    using O = Orientation;
    PlaneChain c;
    c.links = {
        {parse_plane_family("(T0 + T*T1)^2", "T1"), O::forward, {}},
        {parse_plane_family("(T0 + T1)^2", "T*T1 + (T - 1)*T0"), O::reversed, {}},
        {parse_plane_family("(T*T0 + T1)^2", "-T0"), O::reversed, {}},
        {parse_plane_family("T*T0 + T1^2", "-T0"), O::forward, {}},
        {parse_plane_family("T0 + T*T1^2", "-T0 + (1 - T)*T1^2"), O::reversed, {}},
        {parse_plane_family("T0", "-T*T0 + T1^2"), O::reversed, {}},
    };
    c.from = parse_plane_pair("T0^2", "T1");
    c.to = parse_plane_pair("T0", "T1^2");
    return c;
}

}  // namespace ratmap

#endif
