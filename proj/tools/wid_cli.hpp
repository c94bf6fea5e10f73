#ifndef WID_TOOLS_WID_CLI_HPP
#define WID_TOOLS_WID_CLI_HPP

#include <wid/wid.hpp>

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace wid::cli {

enum ExitCode { exit_ok = 0, exit_fails = 1, exit_usage = 2 };

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep))
        out.push_back(item);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

/// "clifford:<k>", "clifford:<k>:<q1>,<q2>,..." or "m2".
inline PairTarget parse_pair(const std::string& text)
{
    if (text == "m2")
        return matrix_pair();
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3 || parts[0] != "clifford")
        throw std::invalid_argument("unknown pair '" + text + "' (expected clifford:<k> or m2)");
    std::size_t k = 0;
    try {
        k = std::stoul(parts[1]);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Clifford dimension '" + parts[1] + "'");
    }
    if (parts.size() == 2)
        return CliffordPair{FormParams::symbolic(k)};
    std::vector<Rational> values;
    for (const auto& v : split(parts[2], ','))
        values.push_back(Rational::parse(v));
    if (values.size() != k)
        throw std::invalid_argument("expected " + std::to_string(k) + " Gram values");
    return CliffordPair{FormParams::explicit_values(std::move(values))};
}

/// Renames library generator indices for display under Naming.
inline NcPoly to_display(const NcPoly& f, const std::map<Gen, Gen>& names) { return rename(f, names); }

inline std::map<Gen, Gen> x_then_y_names(std::size_t nx, std::size_t ny)
{
    std::map<Gen, Gen> m;
    for (std::size_t i = 1; i <= nx; ++i)
        m[static_cast<Gen>(i)] = Naming::x(static_cast<std::uint32_t>(i));
    for (std::size_t j = 1; j <= ny; ++j)
        m[static_cast<Gen>(nx + j)] = Naming::y(static_cast<std::uint32_t>(j));
    return m;
}

inline json span_check_json(const SpanKernelCheck& c)
{
    return json{{"n", c.n},
                {"k", c.k},
                {"span", rank_report_json(c.span)},
                {"kernel", rank_report_json(c.kernel)},
                {"span_in_kernel", c.span_in_kernel},
                {"holds", c.holds}};
}

struct Settings {
    bool json_output = false;
    std::size_t max_degree = default_degree_cap;
    std::vector<unsigned> seeds{0, 1};
    bool allow_degree_7 = false;
    bool exact = false;

    RankOptions rank_options() const
    {
        RankOptions o;
        o.seeds = seeds;
        o.exact = exact;
        o.degree_cap = std::min<std::size_t>(max_degree, 6);
        o.allow_degree_7 = allow_degree_7 && max_degree >= 7;
        return o;
    }
};

/*
 * Runs one CLI invocation.  Returns the process exit code: 0 when the
 * identity holds or the computation succeeded, 1 when it fails, 2 on usage or
 * parse errors.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Settings cfg;
    if (const char* env = std::getenv("WID_MAX_DEGREE")) {
        try {
            cfg.max_degree = std::stoul(env);
        } catch (const std::exception&) {
            err << "error: WID_MAX_DEGREE is not a number\n";
            return exit_usage;
        }
    }

    CLI::App app{"Weak polynomial identities of Clifford and sl_2 pairs"};
    app.require_subcommand(1);
    app.add_flag("--json", cfg.json_output, "Emit the machine-readable report");
    app.add_option("--max-degree", cfg.max_degree, "Degree cap (env WID_MAX_DEGREE)");
    app.add_option("--seeds", cfg.seeds, "Specialization seeds for the form parameters")->delimiter(',');
    app.add_flag("--allow-degree-7", cfg.allow_degree_7, "Permit degree-7 rank computations");
    app.add_flag("--exact", cfg.exact, "Always run fraction-free elimination over the parameters");

    Report rep;
    int code = exit_ok;
    std::function<void()> action;

    std::string pair_text = "clifford:3", expr_text;
    auto* check = app.add_subcommand("check", "Decide whether an expression is a weak identity");
    check->add_option("--pair", pair_text, "clifford:<k>[:<q1>,...] or m2");
    check->add_option("expr", expr_text, "Expression, e.g. \"[x1^2,x2]\"")->required();
    check->callback([&] {
        action = [&] {
            const PairTarget target = parse_pair(pair_text);
            const NcPoly f = parse_poly(expr_text);
            rep.inputs = {{"pair", describe(target)}, {"expr", expr_text}, {"polynomial", format_expr(f)}};
            const auto res = is_weak_identity(f, target, cfg.max_degree);
            rep.status = res.holds ? "holds" : "fails";
            rep.outcome = {{"holds", res.holds}, {"components", res.components}, {"evaluations", res.evaluations}};
            if (res.witness)
                rep.outcome["witness"] = witness_json(*res.witness);
            code = res.holds ? exit_ok : exit_fails;
        };
    });

    std::size_t n = 0, k = 0;
    auto* dim = app.add_subcommand("dim", "Rank of the degree-n evaluation matrix");
    dim->add_option("--n", n, "Degree")->required();
    dim->add_option("--pair", pair_text, "clifford:<k>[:<q1>,...] or m2")->required();
    dim->callback([&] {
        action = [&] {
            const PairTarget target = parse_pair(pair_text);
            rep.inputs = {{"n", n}, {"pair", describe(target)}};
            const auto r = evaluation_kernel(n, target, cfg.rank_options());
            rep.seeds = r.seeds;
            rep.status = "ok";
            rep.outcome = rank_report_json(r);
        };
    });

    std::string gens_text;
    auto* span = app.add_subcommand("span", "Dimension of the degree-n multilinear consequences");
    span->add_option("--n", n, "Degree")->required();
    span->add_option("--gens", gens_text, "Generators separated by ';'")->required();
    span->callback([&] {
        action = [&] {
            std::vector<NcPoly> gens;
            json shown = json::array();
            for (const auto& g : split(gens_text, ';')) {
                gens.push_back(parse_poly(g));
                shown.push_back(format_expr(gens.back()));
            }
            rep.inputs = {{"n", n}, {"gens", shown}};
            rep.status = "ok";
            rep.outcome = rank_report_json(consequence_span_dim(n, gens, cfg.rank_options()));
        };
    });

    auto* thm1 = app.add_subcommand("theorem1", "Consequences of [x1^2,x2] versus the kernel on (C_n,V_n)");
    thm1->add_option("--n", n, "Degree")->required();
    thm1->callback([&] {
        action = [&] {
            rep.inputs = {{"n", n}};
            const auto c = theorem1_check(n, cfg.rank_options());
            rep.seeds = c.kernel.seeds;
            rep.outcome = span_check_json(c);
            rep.outcome["involutions"] = involutions(static_cast<std::uint32_t>(n));
            rep.status = c.holds ? "holds" : "fails";
            code = c.holds ? exit_ok : exit_fails;
        };
    });

    auto* cor1 = app.add_subcommand("corollary1", "Consequences of [x1^2,x2] and S_{k+1} versus the kernel on (C_k,V_k)");
    cor1->add_option("--n", n, "Degree")->required();
    cor1->add_option("--k", k, "Clifford dimension")->required();
    cor1->callback([&] {
        action = [&] {
            rep.inputs = {{"n", n}, {"k", k}};
            const auto c = corollary1_check(n, k, cfg.rank_options());
            rep.seeds = c.kernel.seeds;
            rep.outcome = span_check_json(c);
            rep.status = c.holds ? "holds" : "fails";
            code = c.holds ? exit_ok : exit_fails;
        };
    });

    auto* lem2 = app.add_subcommand("lemma2", "Insertion coefficients alpha, beta and their defect check");
    lem2->add_option("--n", n, "Degree of S_n")->required();
    lem2->add_option("--k", k, "Insertion position")->required();
    lem2->callback([&] {
        action = [&] {
            rep.inputs = {{"n", n}, {"k", k}};
            const auto rec = lemma2_coeffs(n, k);
            const auto solved = solve_insertion_coeffs(n, k, cfg.rank_options());
            const auto names = x_then_y_names(n, 1);
            const NcPoly defect = eq5_defect(n, k);
            const bool holds = is_weak_identity(defect, clifford_pair(n + 1), cfg.max_degree).holds;
            rep.outcome = {{"recursion", {{"alpha", rec.alpha.str()}, {"beta", rec.beta.str()}}},
                           {"defect", format_expr(to_display(defect, names))},
                           {"defect_is_weak_identity", holds}};
            bool agree = false;
            if (solved) {
                rep.outcome["solved"] = {{"alpha", solved->coeffs.alpha.str()},
                                         {"beta", solved->coeffs.beta.str()},
                                         {"unique", solved->unique}};
                agree = solved->coeffs.alpha == rec.alpha && solved->coeffs.beta == rec.beta;
            }
            rep.outcome["agree"] = agree;
            rep.status = holds && agree ? "holds" : "fails";
            code = holds && agree ? exit_ok : exit_fails;
        };
    });

    auto* lem1 = app.add_subcommand("lemma1", "Rewrite x1 y1..yn x2 - x2 y1..yn x1 through [x1,x2]");
    lem1->add_option("--n", n, "Number of y letters")->required();
    lem1->callback([&] {
        action = [&] {
            rep.inputs = {{"n", n}};
            const auto terms = lemma1_decompose(n);
            std::map<Gen, Gen> names{{1, Naming::x(1)}, {2, Naming::x(2)}};
            for (std::size_t j = 1; j <= n; ++j)
                names[static_cast<Gen>(2 + j)] = Naming::y(static_cast<std::uint32_t>(j));
            json list = json::array();
            for (const auto& [a, b] : terms)
                list.push_back({{"A", format_expr(to_display(a, names))}, {"B", format_expr(to_display(b, names))}});
            const bool holds = is_weak_identity(lemma1_defect(n, terms), clifford_pair(n + 2),
                                                std::max(cfg.max_degree, n + 2))
                                   .holds;
            rep.outcome = {{"lhs", format_expr(to_display(lemma1_lhs(n), names))},
                           {"terms", list},
                           {"defect_is_weak_identity", holds}};
            rep.status = holds ? "holds" : "fails";
            code = holds ? exit_ok : exit_fails;
        };
    });

    std::string ys_text;
    auto* factor = app.add_subcommand("factor", "Write an interleaved alternating sum through S_n");
    factor->add_option("--n", n, "Number of alternated variables")->required();
    factor->add_option("--ys", ys_text, "n-1 interleaving monomials separated by ',' (empty allowed)");
    factor->callback([&] {
        action = [&] {
            // x_j -> j, y_j -> n + j in library indices
            std::map<Gen, Gen> to_lib, to_show;
            std::vector<Word> ys;
            for (const auto& w : split(ys_text, ',')) {
                Word parsed = parse_word(w);
                for (Gen& g : parsed.letters) {
                    const Gen lib = g % 2 ? (g + 1) / 2 : static_cast<Gen>(n + g / 2);
                    if (g % 2 && lib > n)
                        throw std::invalid_argument("x" + std::to_string(lib) + " is not one of x1..x"
                                                    + std::to_string(n));
                    to_show[lib] = g;
                    g = lib;
                }
                ys.push_back(std::move(parsed));
            }
            if (ys.empty() && n == 2)
                ys.emplace_back();
            for (std::size_t i = 1; i <= n; ++i)
                to_show[static_cast<Gen>(i)] = Naming::x(static_cast<std::uint32_t>(i));
            const auto fac = factor_through_standard(n, ys, std::nullopt, cfg.rank_options());
            json shown = json::array();
            for (const auto& w : ys)
                shown.push_back(w.empty() ? "1" : format_word(rename(NcPoly(w), to_show).terms().begin()->first));
            rep.inputs = {{"n", n}, {"ys", shown}};
            rep.outcome = {{"variant", fac.variant == InterleaveVariant::in_x ? "S_n*D" : "sum D*S_n*E"},
                           {"lhs", format_expr(to_display(fac.lhs, to_show))},
                           {"unique", fac.unique},
                           {"verified", fac.verified}};
            if (fac.variant == InterleaveVariant::in_x) {
                rep.outcome["D"] = format_expr(to_display(fac.right_factor, to_show));
            } else {
                json pairs = json::array();
                for (const auto& t : fac.pairs)
                    pairs.push_back({{"coeff", t.coeff.str()},
                                     {"D", t.left.empty() ? "1" : format_expr(to_display(NcPoly(t.left), to_show))},
                                     {"E", t.right.empty() ? "1" : format_expr(to_display(NcPoly(t.right), to_show))}});
                rep.outcome["pairs"] = pairs;
            }
            rep.status = fac.verified ? "ok" : "fails";
            code = fac.verified ? exit_ok : exit_fails;
        };
    });

    auto* standard = app.add_subcommand("standard", "The standard polynomial S_n and its value at e_1..e_n");
    standard->add_option("--n", n, "Degree")->required();
    standard->callback([&] {
        action = [&] {
            rep.inputs = {{"n", n}};
            const NcPoly s = standard_poly(n);
            std::map<Gen, std::size_t> basis_of;
            for (std::size_t i = 1; i <= n; ++i)
                basis_of[static_cast<Gen>(i)] = i;
            const CliffordElt v = evaluate_on_basis(s, basis_of, FormParams::symbolic(n));
            rep.outcome = {{"terms", s.size()},
                           {"polynomial", format_expr(to_display(s, x_then_y_names(n, 0)))},
                           {"value_at_basis", v.str()}};
            rep.status = "ok";
        };
    });

    std::string diagrams_mode, diagrams_text;
    auto* diagrams = app.add_subcommand("diagrams", "Young diagram order: inclusion-minimal elements");
    diagrams->add_option("mode", diagrams_mode, "min")->required()->check(CLI::IsMember({"min"}));
    diagrams->add_option("partitions", diagrams_text, "Partitions such as \"2,1;2,2\"")->required();
    diagrams->callback([&] {
        action = [&] {
            std::vector<Partition> set;
            json shown = json::array();
            for (const auto& p : split(diagrams_text, ';')) {
                if (p.find_first_not_of(" \t") == std::string::npos)
                    continue;
                set.push_back(Partition::parse(p));
                shown.push_back(set.back().str());
            }
            json minimal = json::array();
            for (const auto& p : minimal_diagrams(set))
                minimal.push_back(p.str());
            rep.inputs = {{"partitions", shown}};
            rep.outcome = {{"minimal", minimal}};
            rep.status = "ok";
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    rep.command = app.get_subcommands().front()->get_name();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (cfg.json_output)
        out << json(rep).dump(2) << "\n";
    else
        out << render_text(rep);
    return code;
}

}  // namespace wid::cli

#endif  // WID_TOOLS_WID_CLI_HPP
