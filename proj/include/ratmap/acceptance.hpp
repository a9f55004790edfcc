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
 * @file acceptance.hpp
 * @brief The release checklist: nine criteria, each an exact check with one verdict.
 *
 * The command-line checks run through a caller-supplied runner so that this
 * header does not depend on the front end (which itself calls run_acceptance).
 */

#ifndef RATMAP_ACCEPTANCE_HPP
#define RATMAP_ACCEPTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace ratmap {

struct AcceptanceOptions {
    std::uint64_t seed = 7;
    std::size_t law_trials = 1000;
    std::size_t monoid_trials = 300;
    std::size_t io_trials = 1000;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> notes;  // one line per sub-check
};

/// Runs argv (without the program name) and returns the exit code; stdout and stderr are captured.
using CliRunner = std::function<int(const std::vector<std::string>&, std::string& out, std::string& err)>;

namespace detail {

class Checklist {
   public:
    Checklist(int id, std::string title) { r_.id = id, r_.title = std::move(title), r_.pass = true; }

    bool check(bool ok, const std::string& what) {
        r_.notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        if (!ok) r_.pass = false;
        return ok;
    }

    /// Runs `body`; an escaping exception fails the criterion instead of aborting the run.
    template <class F>
    void guard(const std::string& what, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, what + " threw: " + e.what());
        }
    }

    CriterionResult result() && { return std::move(r_); }

   private:
    CriterionResult r_;
};

inline UPoly zx(std::string_view s) { return parse_upoly(s, RingTag::integers()); }
inline MapPair zx_pair(std::string_view s) { return parse_upoly_pair(s, RingTag::integers()); }

inline CriterionResult criterion_monoid_sum() {
    Checklist c(1, "monoid sum X/1 + (X-1)/(-1) = (X^2 - X + 1)/(X - 1) with matching matrices");
    c.guard("monoid sum", [&] {
        PointedMap u = named(NamedMap::identity), v = named(NamedMap::minus_epsilon);
        PointedMap s = oplus(u, v);
        c.check(s == PointedMap::parse("(X^2 - X + 1)/(X - 1)", RingTag::integers()), "sum is " + s.to_string());
        Mat2<UPoly> mu = bezout_pair(u).matrix(), mv = bezout_pair(v).matrix();
        c.check(mu == Mat2<UPoly>{zx("X"), zx("-1"), zx("1"), zx("0")}, "matrix of X/1 is [[X, -1], [1, 0]]");
        c.check(mv == Mat2<UPoly>{zx("X - 1"), zx("1"), zx("-1"), zx("0")}, "matrix of (X-1)/(-1) is [[X - 1, 1], [-1, 0]]");
        Mat2<UPoly> expected{zx("X^2 - X + 1"), zx("X"), zx("X - 1"), zx("1")};
        c.check(mu * mv == expected, "product is [[X^2 - X + 1, X], [X - 1, 1]]");
        c.check(bezout_pair(s).matrix() == expected, "matrix of the sum equals the product");
    });
    return std::move(c).result();
}

inline CriterionResult criterion_certificate_chain() {
    Checklist c(2, "four-certificate chain from X^2/1 to (X^2 - X + 1)/(X - 1), all resultants 1");
    c.guard("chain", [&] {
        Chain chain = builtin_chain("prop_3_4_3");
        ChainReport rep = verify_chain(chain);
        c.check(rep.pass, "chain verifies" + (rep.pass ? std::string() : ": " + rep.first_failure()));
        UPoly one = UPoly::constant(upoly_ring(RingTag::integers(), "T"), Scalar(RingTag::integers(), 1));
        for (const auto& l : rep.links) {
            std::string idx = std::to_string(l.index);
            c.check(l.resultant && *l.resultant == one, "link " + idx + " Bareiss resultant = 1");
            c.check(l.oracle_resultant && *l.oracle_resultant == one, "link " + idx + " cofactor resultant = 1");
        }
        c.check(chain.from == zx_pair("X^2/1") && chain.to == zx_pair("(X^2 - X + 1)/(X - 1)"), "chain endpoints");
    });
    return std::move(c).result();
}

inline CriterionResult criterion_matrix_chain() {
    Checklist c(3, "projective-linear chain: det 1, infinity lands in T1 != 0, endpoints, junction up to -1");
    c.guard("matrix chain", [&] {
        const RingTag Z = RingTag::integers();
        MatrixChain chain = builtin_matrix_chain("prop_3_4_2");
        const MatrixFamily& h1 = chain.links[0].family;
        const MatrixFamily& h2 = chain.links[1].family;
        UPoly one = UPoly::constant(family_ring(), Scalar(Z, 1));
        c.check(det_family(h1) == one && det_family(h2) == one, "det H1 = det H2 = 1");
        c.check(image_of_infinity_in_open(h1) && image_of_infinity_in_open(h2), "c is a unit for H1 and H2");
        c.check(endpoint_matrix(h1, 1) == scalar_matrix(Z, 1, -1, 1, 0), "H1(1) = [[1, -1], [1, 0]]");
        c.check(endpoint_matrix(h2, 1) == scalar_matrix(Z, 0, 1, -1, 1), "H2(1) = [[0, 1], [-1, 1]]");
        ScalarMatrix a = endpoint_matrix(h1, 0), b = endpoint_matrix(h2, 0);
        c.check(a == b.negated() && !(a == b) && projectively_equal(a, b), "H1(0) = -H2(0), projectively equal");
        MatrixChainReport rep = verify_matrix_chain(chain);
        c.check(rep.pass, "chain verifies" + (rep.pass ? std::string() : ": " + rep.first_failure()));
    });
    return std::move(c).result();
}

inline CriterionResult criterion_plane_chain() {
    Checklist c(4, "punctured-plane chain: six families certified with N <= 2, degree <= 4");
    c.guard("plane chain", [&] {
        PlaneChain chain = builtin_plane_chain("prop_3_4_5");
        PlaneChainReport rep = verify_plane_chain(chain, 6, 4);
        c.check(rep.pass, "chain verifies" + (rep.pass ? std::string() : ": " + rep.first_failure()));
        const Orientation expected[] = {Orientation::forward, Orientation::reversed, Orientation::reversed,
                                        Orientation::forward, Orientation::reversed, Orientation::reversed};
        c.check(rep.links.size() == 6, "six links");
        for (std::size_t i = 0; i < rep.links.size() && i < 6; ++i) {
            const auto& l = rep.links[i];
            bool small = l.certificate && l.certificate->N <= 2 && l.certificate->coefficient_degree() <= 4 &&
                         verify_membership(chain.links[i].family, *l.certificate).ok;
            c.check(small, "link " + std::to_string(i + 1) + " certificate" +
                               (l.certificate ? " N = " + std::to_string(l.certificate->N) + ", degree " +
                                                    std::to_string(l.certificate->coefficient_degree())
                                              : std::string(" missing")));
            c.check(chain.links[i].orientation == expected[i], "link " + std::to_string(i + 1) + " orientation " + to_string(expected[i]));
        }
        c.check(chain.from == parse_plane_pair("T0^2", "T1") && chain.to == parse_plane_pair("T0", "T1^2"),
                "endpoints (T0^2, T1) and (T0, T1^2)");
    });
    return std::move(c).result();
}

inline CriterionResult criterion_homogenize() {
    Checklist c(5, "homogenization of squaring and minus_epsilon");
    c.guard("homogenize", [&] {
        auto sq = homogenize(named(NamedMap::squaring));
        c.check(sq == parse_plane_pair("T0^2", "T1^2"), "squaring -> (T0^2, T1^2)");
        auto me = homogenize(named(NamedMap::minus_epsilon));
        c.check(me == parse_plane_pair("T0 - T1", "-T1"), "minus_epsilon -> (T0 - T1, -T1)");
        c.check(dehomogenize(sq.first, sq.second) == named(NamedMap::squaring) &&
                    dehomogenize(me.first, me.second) == named(NamedMap::minus_epsilon),
                "dehomogenize inverts both");
    });
    return std::move(c).result();
}

inline CriterionResult property_criterion(int id, std::string title, const std::vector<std::string>& names, std::size_t trials,
                                          std::uint64_t seed) {
    Checklist c(id, std::move(title));
    for (const auto& n : names) {
        c.guard(n, [&] {
            PropertyVerdict v = run_property(n, trials, seed);
            c.check(v.pass, n + " x" + std::to_string(trials) + " seed " + std::to_string(seed) +
                                (v.pass ? std::string() : ": " + v.counterexample.dump()));
        });
    }
    return std::move(c).result();
}

inline CriterionResult criterion_negative_controls() {
    Checklist c(8, "negative controls are rejected at the right place");
    c.guard("negative controls", [&] {
        MapCheck z = check_map(zx("X^2"), zx("2"));
        c.check(z.failure == MapFailure::resultant_not_unit && z.resultant && *z.resultant == Scalar(RingTag::integers(), 4),
                "X^2/2 over Z: ResultantNotUnit(4)");
        const RingTag Q = RingTag::rationals();
        c.check(check_map(parse_upoly("X^2", Q), parse_upoly("2", Q)).ok(), "X^2/2 over Q is valid");
        auto [F, G] = parse_homotopy_pair("X^2/(X + T)", RingTag::integers());
        CertCheck cc = check_cert(F, G);
        UPoly t2 = parse_upoly("T^2", RingTag::integers(), "T");
        c.check(cc.failure == CertFailure::resultant_not_unit && cc.resultant && (*cc.resultant == t2 || *cc.resultant == -t2),
                "X^2/(X + T): ResultantNotUnit(" + (cc.resultant ? print_poly(*cc.resultant) : std::string("?")) + ")");

        Chain flip = builtin_chain("prop_3_4_3");
        flip.links[2].orientation = Orientation::forward;
        std::string f1 = verify_chain(flip).first_failure();
        c.check(f1.starts_with("junction 2/3"), "chain with link 3 forward fails first at junction 2/3");

        Chain perturbed = builtin_chain("prop_3_4_3");
        perturbed.links[3].G = parse_homotopy_poly("X - 2", RingTag::integers());
        std::string f2 = verify_chain(perturbed).first_failure();
        c.check(f2.starts_with("junction 3/4"), "chain with link 4 denominator X - 2 fails first at junction 3/4");

        MatrixChain exact = builtin_matrix_chain("prop_3_4_2");
        exact.junction = JunctionMode::exact;
        c.check(verify_matrix_chain(exact).first_failure().starts_with("junction 1/2"), "exact junctions fail at 1/2");
        MatrixChain doubled = builtin_matrix_chain("prop_3_4_2");
        doubled.links[1].family = parse_family("0", "1", "-1", "2*T");
        c.check(verify_matrix_chain(doubled).first_failure().starts_with("junction 2/to"),
                "d = 2T fails at the final endpoint");

        PlaneChain pflip = builtin_plane_chain("prop_3_4_5");
        pflip.links[1].orientation = Orientation::forward;
        c.check(verify_plane_chain(pflip, 6, 4).first_failure().starts_with("junction 1/2"),
                "plane chain with link 2 forward fails at junction 1/2");
        c.check(!find_membership(parse_plane_family("T0*T1", "T1"), 3, 4).certificate, "(T0*T1, T1) gets no certificate");
    });
    return std::move(c).result();
}

inline CriterionResult criterion_io(const AcceptanceOptions& opt, const CliRunner& run) {
    CriterionResult props =
        property_criterion(9, "parse/print and JSON round trips; command-line exit codes", {"io_roundtrip", "parser_fuzz"},
                           opt.io_trials, opt.seed);
    Checklist c(9, props.title);
    for (const auto& n : props.notes) c.check(n.starts_with("ok"), n.substr(5));
    if (!run) {
        c.check(false, "no command-line runner supplied");
        return std::move(c).result();
    }
    auto expect = [&](const std::vector<std::string>& args, int code, const std::string& needle = "") {
        std::string out, err, line;
        int got = run(args, out, err);
        for (const auto& a : args) line += (line.empty() ? "" : " ") + a;
        bool ok = got == code && (needle.empty() || out.find(needle) != std::string::npos);
        c.check(ok, "`" + line + "` exits " + std::to_string(got) + " (want " + std::to_string(code) + ")" +
                        (needle.empty() ? "" : ", prints " + needle));
        return out;
    };
    c.guard("cli", [&] {
        expect({"oplus", "X/1", "(X-1)/(-1)"}, 0, "(X^2 - X + 1)/(X - 1)");
        expect({"verify-chain", "--builtin", "prop_3_4_3"}, 0, "PASS");
        expect({"validate", "X^2/2", "--ring", "z"}, 1, "ResultantNotUnit(4)");
        expect({"validate", "X^2/2", "--ring", "q"}, 0);
        expect({"validate", "X^^2/1"}, 2);
        expect({"validate", "X^2/1", "--ring", "fp:4"}, 2);
        expect({"res", "X^2", "T*X + 1"}, 0, "1");
        expect({"bezout", "(X^2 - X + 1)/(X - 1)"}, 0, "q = -X");
        expect({"verify-matrix-chain", "--builtin", "prop_3_4_2"}, 0, "PASS");
        expect({"verify-matrix-chain", "--builtin", "prop_3_4_2", "--junction", "exact"}, 1, "FAIL");
        expect({"verify-plane-chain", "--builtin", "prop_3_4_5", "--dmax", "4"}, 0, "PASS");
        expect({"membership", "T0*T1", "T1", "--nmax", "2", "--dmax", "3"}, 1, "inconclusive");
        expect({"verify-chain", "/nonexistent/chain.json"}, 2);
        expect({"no-such-command"}, 2);

        std::string out = expect({"--json", "oplus", "X/1", "(X-1)/(-1)"}, 0);
        bool round = false;
        try {
            round = from_json<PointedMap>(parse_json_text(out)) == PointedMap::parse("(X^2 - X + 1)/(X - 1)", RingTag::integers());
        } catch (const std::exception&) {
        }
        c.check(round, "--json oplus output reads back as the expected map");

        namespace fs = std::filesystem;
        fs::path file = fs::temp_directory_path() / ("ratmap_acceptance_" + std::to_string(opt.seed) + ".json");
        Chain flip = builtin_chain("prop_3_4_3");
        flip.links[2].orientation = Orientation::forward;
        std::ofstream(file) << to_json(flip).dump(2);
        expect({"verify-chain", file.string()}, 1, "junction 2/3");
        std::ofstream(file) << to_json(builtin_chain("prop_3_4_3")).dump(2);
        expect({"verify-chain", file.string()}, 0, "PASS");
        std::ofstream(file) << "{\"links\": 3}";
        expect({"verify-chain", file.string()}, 2);
        fs::remove(file);
    });
    return std::move(c).result();
}

}  // namespace detail

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, const CliRunner& run) {
    std::vector<CriterionResult> out;
    out.push_back(detail::criterion_monoid_sum());
    out.push_back(detail::criterion_certificate_chain());
    out.push_back(detail::criterion_matrix_chain());
    out.push_back(detail::criterion_plane_chain());
    out.push_back(detail::criterion_homogenize());
    out.push_back(detail::property_criterion(
        6, "resultant laws: oracle, swap, scaling, Bezout, product, reciprocal",
        {"oracle_agreement", "swap_law", "scaling_law", "bezout_law", "product_law", "reciprocal_law"}, opt.law_trials, opt.seed));
    out.push_back(detail::property_criterion(
        7, "monoid laws: associativity, identity, degrees, matrices, determinant, Bezout uniqueness",
        {"oplus_assoc", "oplus_identity", "degree_additivity", "matrix_law", "det_witness", "bezout_uniqueness"},
        opt.monoid_trials, opt.seed));
    out.push_back(detail::criterion_negative_controls());
    out.push_back(detail::criterion_io(opt, run));
    return out;
}

/// "PASS  3  title" per criterion, followed by indented sub-check lines when `verbose`.
inline std::string format_acceptance(const std::vector<CriterionResult>& results, bool verbose) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "\n";
        if (verbose || !r.pass)
            for (const auto& n : r.notes) os << "        " << n << "\n";
    }
    return os.str();
}

}  // namespace ratmap

#endif
