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
 * @file cli.hpp
 * @brief The `ratmap` command line, callable in-process.
 *
 * Exit codes: 0 success or verified, 1 verification failed, 2 bad input
 * (syntax, schema, unknown names, unreadable files, bad flags).
 */

#ifndef RATMAP_CLI_HPP
#define RATMAP_CLI_HPP

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"

namespace ratmap {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_input = 2 };

namespace detail {

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

inline bool mentions_t(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 'T' && (i + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1])))) return true;
    return false;
}

inline std::string print_matrix(const Mat2<UPoly>& m) {
    return "[[" + print_poly(m.a) + ", " + print_poly(m.b) + "], [" + print_poly(m.c) + ", " + print_poly(m.d) + "]]";
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json_output = false;
};

inline int cmd_res(Context& ctx, const std::string& fs, const std::string& gs, std::optional<std::size_t> nf,
                   std::optional<std::size_t> ng, const RingTag& ring) {
    auto finish = [&](auto f, auto g, auto print) {
        std::size_t n = nf ? *nf : f.degree().value_or(0), m = ng ? *ng : g.degree().value_or(0);
        auto r = resultant(f, n, g, m);
        std::optional<decltype(r)> oracle;
        if (n + m <= cofactor_size_cap) oracle = resultant_oracle(f, n, g, m);
        bool agree = !oracle || *oracle == r;
        if (ctx.json_output) {
            json j = {{"ring", ring.to_string()}, {"n", n}, {"m", m}, {"resultant", print(r)}};
            j["oracle"] = oracle ? json(print(*oracle)) : json(nullptr);
            ctx.out << j.dump() << "\n";
        } else {
            ctx.out << "res_{" << n << "," << m << "} = " << print(r) << "\n";
            if (oracle) ctx.out << "cofactor check: " << (agree ? "agrees" : "DISAGREES: " + print(*oracle)) << "\n";
        }
        return agree ? exit_ok : exit_failed;
    };
    if (mentions_t(fs) || mentions_t(gs))
        return finish(parse_homotopy_poly(fs, ring), parse_homotopy_poly(gs, ring),
                      [](const UPoly& p) { return print_poly(p.trimmed()); });
    return finish(parse_upoly(fs, ring), parse_upoly(gs, ring), [](const Scalar& s) { return s.to_string(); });
}

inline int cmd_validate(Context& ctx, const std::string& text, const RingTag& ring) {
    auto [f, g] = parse_upoly_pair(text, ring);
    MapCheck c = check_map(f, g);
    if (ctx.json_output) {
        json j = {{"valid", c.ok()}, {"failure", to_string(c.failure)}};
        j["resultant"] = c.resultant ? json(c.resultant->to_string()) : json(nullptr);
        if (c.ok()) j["map"] = to_json(PointedMap::validate(f, g));
        ctx.out << j.dump() << "\n";
    } else if (c.ok()) {
        PointedMap u = PointedMap::validate(f, g);
        ctx.out << "valid: " << u.to_string() << " over " << ring.to_string() << " (n = " << u.n() << ", res = " << u.res()
                << ")\n";
    } else {
        ctx.out << c.message << "\n";
    }
    return c.ok() ? exit_ok : exit_failed;
}

inline int cmd_bezout(Context& ctx, const std::string& text, const RingTag& ring) {
    PointedMap u = PointedMap::parse(text, ring);
    SL2Witness w = bezout_pair(u);
    if (ctx.json_output) {
        ctx.out << json{{"map", to_json(u)}, {"p", print_poly(w.p)}, {"q", print_poly(w.q)}}.dump() << "\n";
    } else {
        ctx.out << "p = " << print_poly(w.p) << "\nq = " << print_poly(w.q) << "\nmatrix = " << print_matrix(w.matrix()) << "\n";
    }
    return exit_ok;
}

inline int cmd_oplus(Context& ctx, const std::vector<std::string>& maps, const RingTag& ring) {
    PointedMap acc = PointedMap::parse(maps.at(0), ring);
    for (std::size_t i = 1; i < maps.size(); ++i) acc = oplus(acc, PointedMap::parse(maps[i], ring));
    if (ctx.json_output)
        ctx.out << to_json(acc).dump() << "\n";
    else
        ctx.out << acc.to_string() << "\n";
    return exit_ok;
}

inline int cmd_cert(Context& ctx, const std::string& text, const RingTag& ring) {
    auto [F, G] = parse_homotopy_pair(text, ring);
    CertCheck c = check_cert(F, G);
    if (ctx.json_output) {
        json j = {{"valid", c.ok()}, {"failure", to_string(c.failure)}};
        j["resultant"] = c.resultant ? json(print_poly(*c.resultant)) : json(nullptr);
        if (c.ok()) {
            HomotopyCert h = HomotopyCert::validate(F, G);
            j["cert"] = to_json(h);
            j["at_0"] = to_json(endpoint(h, 0));
            j["at_1"] = to_json(endpoint(h, 1));
        }
        ctx.out << j.dump() << "\n";
    } else if (c.ok()) {
        HomotopyCert h = HomotopyCert::validate(F, G);
        ctx.out << "valid certificate, res = " << print_poly(h.res()) << "\nT = 0: " << endpoint(h, 0).to_string()
                << "\nT = 1: " << endpoint(h, 1).to_string() << "\n";
    } else {
        ctx.out << c.message << "\n";
    }
    return c.ok() ? exit_ok : exit_failed;
}

inline void print_failures(Context& ctx, bool pass, const std::vector<std::string>& failures) {
    ctx.out << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& f : failures) ctx.out << "  " << f << "\n";
}

inline int cmd_verify_chain(Context& ctx, const std::string& file, const std::string& builtin) {
    Chain chain = builtin.empty() ? from_json<Chain>(read_json_file(file)) : builtin_chain(builtin);
    ChainReport rep = verify_chain(chain);
    if (ctx.json_output) {
        ctx.out << to_json(rep, chain.ring).dump() << "\n";
    } else {
        for (std::size_t i = 0; i < rep.links.size(); ++i) {
            const auto& j = rep.junctions[i];
            const auto& l = rep.links[i];
            ctx.out << "junction " << j.label << ": " << (j.ok ? "ok" : "MISMATCH") << "\n";
            ctx.out << "link " << l.index << " (" << to_string(l.orientation) << "): " << print_pair(l.start) << " -> "
                    << print_pair(l.end) << ", res = " << (l.resultant ? print_poly(*l.resultant) : "?")
                    << (l.valid ? "" : "  [" + l.failure + "]") << "\n";
        }
        const auto& last = rep.junctions.back();
        ctx.out << "junction " << last.label << ": " << (last.ok ? "ok" : "MISMATCH") << "\n";
        print_failures(ctx, rep.pass, rep.failures);
    }
    return rep.pass ? exit_ok : exit_failed;
}

inline int cmd_verify_matrix_chain(Context& ctx, const std::string& file, const std::string& builtin, const std::string& junction) {
    MatrixChain chain = builtin.empty() ? from_json<MatrixChain>(read_json_file(file)) : builtin_matrix_chain(builtin);
    if (!junction.empty()) chain.junction = parse_junction_mode(junction);
    MatrixChainReport rep = verify_matrix_chain(chain);
    if (ctx.json_output) {
        ctx.out << to_json(rep).dump() << "\n";
    } else {
        for (const auto& l : rep.links)
            ctx.out << "link " << l.index << " (" << to_string(l.orientation) << "): det = " << print_poly(l.det)
                    << ", infinity in T1 != 0: " << (l.infinity_in_open ? "yes" : "no") << ", " << print_matrix(l.start)
                    << " -> " << print_matrix(l.end) << "\n";
        for (const auto& j : rep.junctions)
            ctx.out << "junction " << j.label << ": " << (j.ok ? (j.exact ? "equal" : "equal up to sign") : "MISMATCH") << "\n";
        print_failures(ctx, rep.pass, rep.failures);
    }
    return rep.pass ? exit_ok : exit_failed;
}

inline int cmd_verify_plane_chain(Context& ctx, const std::string& file, const std::string& builtin, unsigned nmax,
                                  std::optional<unsigned> dmax) {
    PlaneChain chain = builtin.empty() ? from_json<PlaneChain>(read_json_file(file)) : builtin_plane_chain(builtin);
    PlaneChainReport rep = verify_plane_chain(chain, nmax, dmax);
    if (ctx.json_output) {
        ctx.out << to_json(rep).dump() << "\n";
    } else {
        for (const auto& l : rep.links) {
            ctx.out << "link " << l.index << " (" << to_string(l.orientation) << "): " << print_plane_pair(l.start) << " -> "
                    << print_plane_pair(l.end) << "\n";
            if (l.certificate) {
                ctx.out << "  certificate N = " << l.certificate->N << (l.supplied ? " (supplied)" : " (found)")
                        << (l.certified ? "" : " REJECTED") << "\n";
                for (const auto& [a, b] : l.certificate->combos)
                    ctx.out << "    A = " << print_poly(a) << ", B = " << print_poly(b) << "\n";
            } else {
                ctx.out << "  " << l.failure << "\n";
            }
        }
        for (const auto& j : rep.junctions) ctx.out << "junction " << j.label << ": " << (j.ok ? "ok" : "MISMATCH") << "\n";
        print_failures(ctx, rep.pass, rep.failures);
    }
    return rep.pass ? exit_ok : exit_failed;
}

inline int cmd_membership(Context& ctx, const std::string& f0, const std::string& f1, unsigned nmax, std::optional<unsigned> dmax) {
    PlaneFamily fam = parse_plane_family(f0, f1);
    MembershipSearch s = find_membership(fam, nmax, dmax);
    if (ctx.json_output) {
        json j = {{"found", bool(s.certificate)}, {"nmax", s.nmax}, {"dmax", s.dmax}};
        j["certificate"] = s.certificate ? to_json(*s.certificate) : json(nullptr);
        ctx.out << j.dump() << "\n";
    } else if (s.certificate) {
        ctx.out << "N = " << s.certificate->N << "\n";
        for (unsigned i = 0; i <= s.certificate->N; ++i) {
            const auto& [a, b] = s.certificate->combos[i];
            ctx.out << "  " << print_poly(target_monomial(i, s.certificate->N)) << " = (" << print_poly(a) << ")*F0 + ("
                    << print_poly(b) << ")*F1\n";
        }
    } else {
        ctx.out << s.not_found_message() << "\n";
    }
    return s.certificate ? exit_ok : exit_failed;
}

}  // namespace detail

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runner for the acceptance checks that drives run_cli in-process.
inline CliRunner in_process_runner() {
    return [](const std::vector<std::string>& args, std::string& out, std::string& err) {
        std::ostringstream o, e;
        int code = run_cli(args, o, e);
        out = o.str();
        err = e.str();
        return code;
    };
}

/// Parses `args` (without the program name) and runs one subcommand.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact algebra of pointed rational maps on the projective line"};
    app.name("ratmap");
    app.require_subcommand(1);
    detail::Context ctx{out, err};
    app.add_flag("--json", ctx.json_output, "Machine-readable JSON output");
    app.fallthrough();

    std::string ring_text = "z";
    auto add_ring = [&](CLI::App* sub) { sub->add_option("--ring", ring_text, "Base ring: z, q or fp:P")->capture_default_str(); };

    std::string s1, s2, file, builtin, junction;
    std::vector<std::string> many;
    std::optional<std::size_t> nf, ng;
    unsigned nmax = 6, trials = 1000;
    std::optional<unsigned> dmax;
    std::uint64_t seed = 7;
    bool verbose = false;

    auto* res = app.add_subcommand("res", "Resultant res_{n,m}(f, g); T in the input selects coefficients in R[T]");
    res->add_option("f", s1)->required();
    res->add_option("g", s2)->required();
    res->add_option("--nf", nf, "Formal degree of f (default: its degree)");
    res->add_option("--ng", ng, "Formal degree of g (default: its degree)");
    add_ring(res);

    auto* validate = app.add_subcommand("validate", "Check that f/g is a pointed map");
    validate->add_option("map", s1)->required();
    add_ring(validate);

    auto* bezout = app.add_subcommand("bezout", "Bezout pair p, q with p f + q g = 1");
    bezout->add_option("map", s1)->required();
    add_ring(bezout);

    auto* oplus_cmd = app.add_subcommand("oplus", "Monoid sum of maps, folded from the left");
    oplus_cmd->add_option("maps", many)->required();
    add_ring(oplus_cmd);

    auto* cert = app.add_subcommand("cert", "Check a homotopy certificate F/G over R[T] and print its endpoints");
    cert->add_option("cert", s1)->required();
    add_ring(cert);

    auto* chain = app.add_subcommand("verify-chain", "Verify a chain of homotopy certificates");
    auto* chain_file = chain->add_option("file", file, "Chain JSON file");
    chain->add_option("--builtin", builtin, "Built-in chain: prop_3_4_3")->excludes(chain_file);

    auto* mchain = app.add_subcommand("verify-matrix-chain", "Verify a chain of projective-linear families");
    auto* mchain_file = mchain->add_option("file", file, "Matrix chain JSON file");
    mchain->add_option("--builtin", builtin, "Built-in chain: prop_3_4_2")->excludes(mchain_file);
    mchain->add_option("--junction", junction, "Override junction comparison: projective or exact");

    auto* pchain = app.add_subcommand("verify-plane-chain", "Verify a chain of punctured-plane families");
    auto* pchain_file = pchain->add_option("file", file, "Plane chain JSON file");
    pchain->add_option("--builtin", builtin, "Built-in chain: prop_3_4_5")->excludes(pchain_file);
    pchain->add_option("--nmax", nmax, "Largest power N searched")->capture_default_str();
    pchain->add_option("--dmax", dmax, "Largest coefficient degree searched (default: input degree + nmax)");

    auto* member = app.add_subcommand("membership", "Search (T0, T1)^N in (F0, F1) over Z[T0, T1, T]");
    member->add_option("F0", s1)->required();
    member->add_option("F1", s2)->required();
    member->add_option("--nmax", nmax)->capture_default_str();
    member->add_option("--dmax", dmax);

    auto* homog = app.add_subcommand("homogenize", "Homogeneous pair (F0, F1) in T0, T1 of a map over Z");
    homog->add_option("map", s1)->required();

    auto* dehomog = app.add_subcommand("dehomogenize", "Map f/g from a homogeneous pair (F0, F1)");
    dehomog->add_option("F0", s1)->required();
    dehomog->add_option("F1", s2)->required();

    auto* recip = app.add_subcommand("reciprocal", "X^n f(1/X) at formal degree n");
    recip->add_option("f", s1)->required();
    recip->add_option("--n", nf, "Formal degree (default: degree of f)");
    add_ring(recip);

    auto* named_cmd = app.add_subcommand("named", "identity, zero, squaring or minus_epsilon");
    named_cmd->add_option("name", s1)->required();

    auto* prop = app.add_subcommand("property", "Run one randomized law check");
    prop->add_option("name", s1)->required();
    prop->add_option("--trials", trials)->capture_default_str();
    prop->add_option("--seed", seed)->capture_default_str();

    auto* selftest = app.add_subcommand("selftest", "Run the full acceptance checklist");
    selftest->add_option("--seed", seed)->capture_default_str();
    selftest->add_option("--trials", trials, "Trials per resultant and I/O law; monoid laws get 30%")->capture_default_str();
    selftest->add_flag("--verbose", verbose, "Print every sub-check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input;
    }

    try {
        RingTag ring = RingTag::parse(ring_text);
        auto need_source = [&] {
            if (file.empty() && builtin.empty()) throw SchemaError("give a JSON file or --builtin NAME");
        };
        if (res->parsed()) return detail::cmd_res(ctx, s1, s2, nf, ng, ring);
        if (validate->parsed()) return detail::cmd_validate(ctx, s1, ring);
        if (bezout->parsed()) return detail::cmd_bezout(ctx, s1, ring);
        if (oplus_cmd->parsed()) return detail::cmd_oplus(ctx, many, ring);
        if (cert->parsed()) return detail::cmd_cert(ctx, s1, ring);
        if (chain->parsed()) return need_source(), detail::cmd_verify_chain(ctx, file, builtin);
        if (mchain->parsed()) return need_source(), detail::cmd_verify_matrix_chain(ctx, file, builtin, junction);
        if (pchain->parsed()) return need_source(), detail::cmd_verify_plane_chain(ctx, file, builtin, nmax, dmax);
        if (member->parsed()) return detail::cmd_membership(ctx, s1, s2, nmax, dmax);
        if (homog->parsed()) {
            auto [F0, F1] = homogenize(PointedMap::parse(s1, RingTag::integers()));
            if (ctx.json_output)
                out << to_json(PlanePair{F0, F1}).dump() << "\n";
            else
                out << print_plane_pair({F0, F1}) << "\n";
            return exit_ok;
        }
        if (dehomog->parsed()) {
            PointedMap u = dehomogenize(parse_mpoly(s1, projective_vars()), parse_mpoly(s2, projective_vars()));
            out << (ctx.json_output ? to_json(u).dump() : u.to_string()) << "\n";
            return exit_ok;
        }
        if (recip->parsed()) {
            UPoly f = parse_upoly(s1, ring);
            std::size_t n = nf ? *nf : f.degree().value_or(0);
            UPoly r = reciprocal(f, n);
            out << (ctx.json_output ? to_json(r).dump() : print_poly(r)) << "\n";
            return exit_ok;
        }
        if (named_cmd->parsed()) {
            PointedMap u = named(parse_named_map(s1));
            out << (ctx.json_output ? to_json(u).dump() : u.to_string()) << "\n";
            return exit_ok;
        }
        if (prop->parsed()) {
            PropertyVerdict v = run_property(s1, trials, seed);
            if (ctx.json_output)
                out << v.to_json().dump() << "\n";
            else
                out << (v.pass ? "PASS" : "FAIL") << "  " << v.name << " trials=" << v.trials << " seed=" << v.seed
                    << (v.pass ? "" : "\n  counterexample: " + v.counterexample.dump()) << "\n";
            return v.pass ? exit_ok : exit_failed;
        }
        if (selftest->parsed()) {
            AcceptanceOptions opt;
            opt.seed = seed;
            opt.law_trials = opt.io_trials = trials;
            opt.monoid_trials = std::max<std::size_t>(1, trials * 3 / 10);
            auto results = run_acceptance(opt, in_process_runner());
            bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
            if (ctx.json_output) {
                json arr = json::array();
                for (const auto& r : results) arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"checks", r.notes}});
                out << json{{"seed", seed}, {"verdict", all ? "PASS" : "FAIL"}, {"criteria", arr}}.dump() << "\n";
            } else {
                out << format_acceptance(results, verbose) << (all ? "PASS" : "FAIL") << "  all criteria (seed " << seed << ")\n";
            }
            return all ? exit_ok : exit_failed;
        }
    } catch (const MapValidationError& e) {
        if (ctx.json_output)
            out << json{{"valid", false}, {"failure", to_string(e.failure())}, {"message", e.what()}}.dump() << "\n";
        else
            out << e.what() << "\n";
        return exit_failed;
    } catch (const CertValidationError& e) {
        out << e.what() << "\n";
        return exit_failed;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

}  // namespace ratmap

#endif
