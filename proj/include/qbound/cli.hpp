#pragma once

// Command-line front end: `compute`, `sweep` and `reconstruct`.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 invariant or
// acceptance failure, 4 non-convergence.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qbound/edge_list.hpp"
#include "qbound/report.hpp"
#include "qbound/verify.hpp"

namespace qbound::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    parse_error = 2,
    check_failed = 3,
    not_converged = 4,
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

inline double to_double(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw CLI::ValidationError(what, "not a number: '" + s + "'");
    return v;
}

// "3..12" or "7".
inline std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoul(s);
            return {v, v};
        }
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected '<min>..<max>', got '" + s + "'");
    }
}

// "(1)=4,(2)=3.5" or "1=4,cm=5".
inline std::vector<std::pair<BoundId, double>> parse_values(const std::string& s) {
    std::vector<std::pair<BoundId, double>> out;
    for (const auto& item : split(s, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--values", "expected '<bound>=<value>' in '" + item + "'");
        const auto id = parse_bound_id(item.substr(0, eq));
        if (!id) throw CLI::ValidationError("--values", "unknown bound '" + item.substr(0, eq) + "'");
        out.emplace_back(*id, to_double(item.substr(eq + 1), "--values"));
    }
    return out;
}

inline std::string deviation_table(const std::vector<Deviation>& devs) {
    std::string out = fmt::format("  {:<6} {:>10} {:>10} {:>12}\n", "column", "expected", "computed", "deviation");
    for (const auto& d : devs) {
        out += fmt::format("  {:<6} {:>10.4f} {:>10} {:>12}\n", d.column, d.expected,
                           d.computed ? fmt::format("{:.4f}", *d.computed) : "-",
                           std::isinf(d.abs_deviation) ? "inapplicable" : fmt::format("{:.2e}", d.abs_deviation));
    }
    return out;
}

inline nlohmann::json match_json(const ReconstructionMatch& m) {
    nlohmann::json devs = nlohmann::json::array();
    for (const auto& d : m.deviations) {
        devs.push_back({{"column", d.column},
                        {"expected", d.expected},
                        {"computed", d.computed ? nlohmann::json(*d.computed) : nlohmann::json(nullptr)},
                        {"deviation", std::isinf(d.abs_deviation) ? nlohmann::json(nullptr) : nlohmann::json(d.abs_deviation)}});
    }
    return {{"candidate", m.candidate},
            {"edge_list", serialize_edge_list(m.graph)},
            {"q", m.spectral.q},
            {"max_deviation", m.max_deviation},
            {"deviations", devs}};
}

}  // namespace detail

struct SharedFlags {
    std::string format = "table";
    double tol = SpectralOptions{}.tol;
    std::size_t max_iter = SpectralOptions{}.max_iter;

    void attach(CLI::App* app) {
        app->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "csv", "json", "tree"}));
        app->add_option("--tol", tol, "Power-iteration tolerance")->check(CLI::PositiveNumber);
        app->add_option("--max-iter", max_iter, "Power-iteration limit")->check(CLI::PositiveNumber);
    }
    SpectralOptions spectral() const { return {tol, max_iter}; }
    bool json() const { return format == "json" || format == "tree"; }
};

inline int cmd_compute(const Digraph& g, const SharedFlags& flags, std::ostream& out) {
    const Report r = build_report(g, flags.spectral());
    if (flags.json()) {
        out << to_json(r).dump(2) << '\n';
    } else if (flags.format == "csv") {
        out << render_csv(r);
    } else {
        out << render_table(r);
    }
    return ok;
}

inline int cmd_sweep(const CorpusSpec& spec, const SharedFlags& flags, std::ostream& out, std::ostream& err) {
    if (spec.count == 0) err << "warning: empty corpus, nothing to check\n";
    SweepOptions opt;
    opt.spectral = flags.spectral();
    const SweepReport rep = sweep(spec, InvariantSet::all(), opt);
    if (flags.json()) {
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& f : rep.failures) {
            fails.push_back({{"graph", f.index}, {"invariant", name(f.invariant)}, {"detail", f.detail},
                             {"edge_list", f.edge_list}});
        }
        nlohmann::json graphs = nlohmann::json::array();
        for (const auto& g : rep.graphs) {
            graphs.push_back({{"index", g.index}, {"n", g.n}, {"m", g.m}, {"q", g.q}, {"passed", g.passed()}});
        }
        out << nlohmann::json{{"corpus", rep.corpus}, {"passed", rep.passed()}, {"graphs", graphs},
                              {"failures", fails}}
                   .dump(2)
            << '\n';
    } else if (flags.format == "csv") {
        out << "index,n,m,q,passed\n";
        for (const auto& g : rep.graphs) {
            out << fmt::format("{},{},{},{:.17g},{}\n", g.index, g.n, g.m, g.q, g.passed() ? "yes" : "no");
        }
    } else {
        out << "corpus: " << rep.corpus << '\n';
        std::size_t checks = 0;
        for (const auto& g : rep.graphs) checks += g.results.size();
        out << fmt::format("graphs: {}  invariant checks: {}  failures: {}\n", rep.graphs.size(), checks,
                           rep.failures.size());
        for (const auto& f : rep.failures) {
            out << fmt::format("FAIL graph {} [{}]: {}\n{}", f.index, name(f.invariant), f.detail, f.edge_list);
        }
        out << (rep.passed() ? "PASS\n" : "FAIL\n");
    }
    return rep.passed() ? ok : check_failed;
}

inline int cmd_reconstruct(const ReconstructionTarget& target, const SharedFlags& flags, bool allow_empty,
                           std::ostream& out) {
    const ReconstructionResult res = reconstruct(target, flags.spectral());
    if (flags.json()) {
        nlohmann::json matches = nlohmann::json::array();
        for (const auto& m : res.matches) matches.push_back(detail::match_json(m));
        nlohmann::json doc{{"target", target.name}, {"visited", res.visited}, {"evaluated", res.evaluated},
                           {"matches", matches}};
        if (res.matches.empty() && res.nearest) doc["nearest"] = detail::match_json(*res.nearest);
        out << doc.dump(2) << '\n';
    } else {
        out << fmt::format("target {}: visited {} arc sets, {} passed the structural filters, {} match(es) "
                           "up to isomorphism (tolerance {:g})\n",
                           target.name.empty() ? "custom" : target.name, res.visited, res.evaluated,
                           res.matches.size(), target.tolerance);
        for (std::size_t k = 0; k < res.matches.size(); ++k) {
            const auto& m = res.matches[k];
            out << fmt::format("\nmatch {} (candidate {}), max deviation {:.2e}\n", k + 1, m.candidate,
                               m.max_deviation);
            out << serialize_edge_list(m.graph);
            out << detail::deviation_table(m.deviations);
        }
        if (res.matches.empty()) {
            out << "\nno digraph matches the target";
            if (res.nearest) {
                out << fmt::format("; nearest candidate {} deviates by {:.2e}:\n", res.nearest->candidate,
                                   res.nearest->max_deviation);
                out << serialize_edge_list(res.nearest->graph);
                out << detail::deviation_table(res.nearest->deviations);
            } else {
                out << "; no candidate passed the structural filters\n";
            }
        }
    }
    return (!res.matches.empty() || allow_empty) ? ok : check_failed;
}

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signless Laplacian spectral radius of digraphs and its upper bounds", "qbound"};
    app.require_subcommand(1);

    SharedFlags compute_flags, sweep_flags, recon_flags;

    auto* compute = app.add_subcommand("compute", "q(G) and every bound for one digraph");
    std::string input, inline_text;
    compute->add_option("--input", input, "Edge-list file, '-' for stdin");
    compute->add_option("--inline", inline_text, "Edge list given inline; ';' separates lines");
    compute_flags.attach(compute);

    auto* sweep_cmd = app.add_subcommand("sweep", "Check every invariant on a seeded random corpus");
    CorpusSpec corpus{500, 3, 12, {0.2, 0.3, 0.5}, 42};
    std::string n_range = "3..12", probs = "0.2,0.3,0.5";
    sweep_cmd->add_option("--count", corpus.count, "Number of digraphs");
    sweep_cmd->add_option("--n", n_range, "Vertex-count range, e.g. 3..12");
    sweep_cmd->add_option("--p", probs, "Arc probabilities, comma separated");
    sweep_cmd->add_option("--seed", corpus.seed, "64-bit seed");
    sweep_flags.attach(sweep_cmd);

    auto* recon = app.add_subcommand("reconstruct", "Search small digraphs matching a row of bound values");
    std::string preset_name, values;
    std::optional<std::size_t> n, m, max_outdeg, min_outdeg;
    std::optional<double> q, match_tol;
    bool g_star = false, allow_empty = false;
    recon->add_option("--preset", preset_name, "gstar, g1 or g2")->check(CLI::IsMember({"gstar", "g1", "g2"}));
    recon->add_option("--n", n, "Vertex count");
    recon->add_option("--m", m, "Arc count");
    recon->add_option("--max-outdeg", max_outdeg, "Required maximum outdegree");
    recon->add_option("--min-outdeg", min_outdeg, "Required minimum outdegree");
    recon->add_option("--q", q, "Target spectral radius");
    recon->add_option("--values", values, "Target bounds, e.g. '(1)=4,(3)=3.3028'");
    recon->add_option("--match-tol", match_tol, "Allowed absolute deviation per value")->check(CLI::PositiveNumber);
    recon->add_flag("--g-star", g_star, "Restrict to the G* class");
    recon->add_flag("--allow-empty", allow_empty, "Exit 0 even without a match");
    recon_flags.attach(recon);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (compute->parsed()) {
            if (input.empty() == inline_text.empty()) {
                err << "error: compute needs exactly one of --input or --inline\n";
                return usage_error;
            }
            Digraph g = [&] {
                if (!inline_text.empty()) {
                    std::string text = inline_text;
                    for (char& c : text)
                        if (c == ';') c = '\n';
                    return parse_edge_list(text);
                }
                if (input == "-") return parse_edge_list(std::cin);
                return read_edge_list(input);
            }();
            return cmd_compute(g, compute_flags, out);
        }
        if (sweep_cmd->parsed()) {
            std::tie(corpus.n_min, corpus.n_max) = detail::parse_range(n_range);
            corpus.probabilities.clear();
            for (const auto& p : detail::split(probs, ',')) {
                const double v = detail::to_double(p, "--p");
                if (!(v >= 0.0 && v <= 1.0)) throw CLI::ValidationError("--p", "probabilities must lie in [0, 1]");
                corpus.probabilities.push_back(v);
            }
            if (corpus.n_min < 2 || corpus.n_max < corpus.n_min) {
                throw CLI::ValidationError("--n", "need 2 <= min <= max");
            }
            return cmd_sweep(corpus, sweep_flags, out, err);
        }
        if (recon->parsed()) {
            ReconstructionTarget t;
            if (!preset_name.empty()) {
                t = *preset(preset_name);
            } else if (!n) {
                throw CLI::ValidationError("reconstruct", "needs --preset or --n");
            }
            if (n) t.n = *n;
            if (m) t.m = *m;
            if (max_outdeg) t.max_outdeg = *max_outdeg;
            if (min_outdeg) t.min_outdeg = *min_outdeg;
            if (q) t.q = *q;
            if (!values.empty()) t.row = detail::parse_values(values);
            if (match_tol) t.tolerance = *match_tol;
            if (g_star) t.require_g_star = true;
            return cmd_reconstruct(t, recon_flags, allow_empty, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ReconstructionError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_error;
    } catch (const DigraphError& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_error;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return not_converged;
    }
    return usage_error;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace qbound::cli
