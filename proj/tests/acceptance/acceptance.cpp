// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status 0 only if all pass.
//
//   acceptance [--g2 <edge-list>]
//
// --g2 names a 6-vertex digraph to hold against the published G2 row; without it
// data/g2.txt is used when present.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "oracle/charpoly_oracle.hpp"
#include "qbound/cli.hpp"
#include "qbound/qbound.hpp"

using namespace qbound;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;  // printed indented under the result line

    void fail(std::string why) {
        if (pass) detail = std::move(why);
        pass = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    std::optional<double> limit_s;
    std::function<Outcome()> check;
};

const CorpusSpec sweep_corpus{500, 3, 12, {0.2, 0.3, 0.5}, 42};

std::string data_path(const std::string& file) { return std::string(QBOUND_TEST_DATA) + "/" + file; }

std::string indent(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) out += "      " + line + "\n";
    return out;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Outcome analytic_families() {
    Outcome o;
    for (std::size_t n = 3; n <= 10; ++n) {
        const double q = spectral_radius(gen_directed_cycle(n)).q;
        if (!near(q, 2.0, 1e-9)) o.fail(fmt::format("cycle n={} q={:.12f}", n, q));
        const auto star = gen_bidirectional_star(n);
        const double qs = spectral_radius(star).q;
        if (!near(qs, static_cast<double>(n), 1e-9)) o.fail(fmt::format("star n={} q={:.12f}", n, qs));
        const auto t = bound_thm31(star).value;
        if (!t || *t != static_cast<double>(n)) o.fail(fmt::format("star n={} (27) differs from n", n));
    }
    for (std::size_t k = 3; k <= 6; ++k) {
        const auto g = gen_bidirectional_complete(k);
        const double want = 2.0 * static_cast<double>(k - 1);
        const double q = spectral_radius(g).q;
        if (!near(q, want, 1e-9)) o.fail(fmt::format("complete k={} q={:.12f}", k, q));
        for (const auto& b : {bound_thm31(g), bound_thm32(g), bound_deg_plus_avg(g)}) {
            if (!b.value || *b.value != want) o.fail(fmt::format("complete k={} {} != {}", k, label(b.id), want));
        }
    }
    if (o.pass) o.detail = "cycles and stars n=3..10, complete k=3..6";
    return o;
}

Outcome table1() {
    Outcome o;
    const auto r = reconstruct(*preset("gstar"));
    if (r.visited != 220) o.fail(fmt::format("visited {} arc sets, expected 220", r.visited));
    if (r.matches.empty()) o.fail("no match");
    for (const auto& m : r.matches) {
        const auto cls = classify(m.graph);
        const auto one = bound_arc_deg_sum(m.graph).value;
        const auto cm = bound_delta_plus_2(m.graph).value;
        if (!cls.is_strongly_connected || !cls.is_in_g_star_class) o.fail("match outside the G* class");
        if (!near(m.spectral.q, 4.7321, 5e-4)) o.fail(fmt::format("q = {:.6f}", m.spectral.q));
        if (!one || *one != 6.0) o.fail("(1) != 6");
        if (!cm || *cm != 5.0) o.fail("(cm) != 5");
        if (one && cm && !(*cm <= *one)) o.fail("(cm) > (1)");
    }
    if (o.pass) o.detail = fmt::format("{} non-isomorphic match(es) among 220 arc sets", r.matches.size());
    if (!r.matches.empty()) o.notes.push_back(serialize_edge_list(r.matches.front().graph));
    return o;
}

Outcome table2_g1() {
    Outcome o;
    const auto r = reconstruct(*preset("g1"));
    if (r.matches.empty()) {
        // Acceptable only with the full deviation table on record.
        o.detail = "no match; published-data discrepancy, nearest row follows";
        if (r.nearest) {
            o.notes.push_back(serialize_edge_list(r.nearest->graph) + cli::detail::deviation_table(r.nearest->deviations));
        } else {
            o.fail("no match and no candidate to report");
        }
        return o;
    }
    for (const auto& m : r.matches) {
        if (m.max_deviation > 5e-4) o.fail(fmt::format("match deviates by {:.2e}", m.max_deviation));
        if (m.deviations.size() != 12) o.fail("deviation table is not twelve columns");
    }
    if (o.pass) {
        o.detail = fmt::format("{} non-isomorphic match(es) over {} arc sets, max deviation {:.1e}", r.matches.size(),
                               r.visited, r.matches.front().max_deviation);
    }
    o.notes.push_back(serialize_edge_list(r.matches.front().graph));
    return o;
}

// Runs the `compute` subcommand and reads the twelve numbers back from its JSON.
std::optional<std::vector<std::pair<std::string, double>>> compute_row(const std::string& path) {
    std::ostringstream out, err;
    if (cli::run(std::vector<std::string>{"compute", "--input", path, "--format", "json"}, out, err) != cli::ok) {
        return std::nullopt;
    }
    const auto doc = nlohmann::json::parse(out.str());
    std::vector<std::pair<std::string, double>> row{{"q", doc["spectral"]["q"].get<double>()}};
    for (const auto& b : doc["bounds"]) {
        if (!b["value"].is_null()) row.emplace_back(b["label"].get<std::string>(), b["value"].get<double>());
    }
    return row;
}

Outcome table2_g2(const std::optional<std::string>& g2) {
    Outcome o;
    const auto t = preset("g2");
    if (!t || !t->q || t->row.size() != 11) {
        o.fail("g2 preset does not carry q and eleven bounds");
        return o;
    }
    std::vector<std::pair<std::string, double>> expected{{"q", *t->q}};
    for (const auto& [id, v] : t->row) expected.emplace_back(std::string(label(id)), v);

    // The pipeline is exercised on the closest digraph known even when no match is supplied.
    const auto check_file = [&](const std::string& path, bool must_match) {
        const auto row = compute_row(path);
        if (!row) {
            o.fail("compute failed on " + path);
            return;
        }
        const Digraph g = read_edge_list(path);
        const auto direct = all_bounds(g);
        std::string table = fmt::format("  {:<6} {:>10} {:>10}\n", "column", "expected", "computed");
        std::size_t agree = 0;
        for (const auto& [col, want] : expected) {
            std::optional<double> got;
            for (const auto& [c, v] : *row)
                if (c == col) got = v;
            const bool ok = got && near(*got, want, 5e-4);
            agree += ok;
            table += fmt::format("  {:<6} {:>10.4f} {:>10} {}\n", col, want, got ? fmt::format("{:.4f}", *got) : "-",
                                 ok ? "" : "<-");
            if (must_match && !ok) o.fail(fmt::format("{}: column {} does not match", path, col));
        }
        // The JSON carries the library's values bit for bit.
        for (const auto& b : direct) {
            if (!b.value) continue;
            bool found = false;
            for (const auto& [c, v] : *row) found |= c == label(b.id) && v == *b.value;
            if (!found) o.fail(fmt::format("compute output differs from the library for {}", label(b.id)));
        }
        o.notes.push_back(fmt::format("{}: {}/12 columns within 5e-4\n{}", path, agree, table));
    };

    if (g2) {
        check_file(*g2, true);
        if (o.pass) o.detail = "supplied digraph reproduces all twelve values";
    } else {
        check_file(data_path("g2_near.txt"), false);
        if (o.pass) o.detail = "golden row shipped as preset g2; no matching digraph supplied, pipeline shown on the nearest one";
    }
    return o;
}

Outcome dominance_sweep() {
    Outcome o;
    const InvariantSet inv{Invariant::dominance, Invariant::q_bracket, Invariant::similarity_bracket,
                           Invariant::oval_containment};
    const auto rep = sweep(sweep_corpus, inv);
    if (rep.graphs.size() != 500) o.fail(fmt::format("{} graphs swept", rep.graphs.size()));
    for (const auto& f : rep.failures) {
        o.fail(fmt::format("graph {} [{}]: {}", f.index, name(f.invariant), f.detail));
        o.notes.push_back(f.edge_list);
    }
    if (o.pass) o.detail = fmt::format("{} graphs, {}", rep.graphs.size(), rep.corpus);
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t strong = 0;
    double worst = 0.0;
    const auto compare = [&](const Digraph& g) {
        const double a = spectral_radius(g).q;
        const double b = oracle::spectral_radius(g);
        worst = std::max(worst, std::abs(a - b));
        if (!(std::abs(a - b) <= 1e-6)) o.fail(fmt::format("q={:.12f} oracle={:.12f}\n{}", a, b, serialize_edge_list(g)));
    };
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::size_t pairs = n * (n - 1);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs); ++mask) {
            std::vector<Arc> arcs;
            for (std::size_t k = 0; k < pairs; ++k)
                if (mask >> k & 1) arcs.push_back(qbound::detail::pair_of(n, k));
            const Digraph g = Digraph::from_arc_list(n, arcs);
            if (!is_strongly_connected(g)) continue;
            ++strong;
            compare(g);
        }
    }
    qbound::detail::Rng rng(6);
    std::size_t reducible = 0;
    while (reducible < 200) {
        const std::size_t n = 2 + rng.below(5);
        const double p = 0.15 + 0.35 * rng.unit();
        std::vector<Arc> arcs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && rng.unit() < p) arcs.push_back({u, v});
        if (arcs.empty()) continue;
        const Digraph g = Digraph::from_arc_list(n, arcs);
        if (is_strongly_connected(g)) continue;
        ++reducible;
        compare(g);
    }
    if (o.pass) {
        o.detail = fmt::format("{} strongly connected (n<=4) + {} reducible (n<=6), max |diff| {:.1e}", strong,
                               reducible, worst);
    }
    return o;
}

Outcome collapse_homogeneity() {
    Outcome o;
    const auto corpus = make_corpus(sweep_corpus);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const Digraph& g = corpus[k];
        const BoundEvaluator ev(g);
        const DegreeProfile* p = &ev.profile();
        const auto one = ev.generic_f([](Vertex, Vertex) { return 1.0; });
        if (one.value != ev.arc_deg_sum().value) o.fail(fmt::format("graph {}: f=1 differs from (1)", k));

        const weights::SqrtProduct sp{p};
        const weights::DegreeSum ds{p};
        const weights::SqrtOfSum ss{p};
        const weights::SumOfSqrt qs{p};
        const auto base = ev.generic_f(ds).value.value();
        for (double c : {0.5, 3.0}) {
            const auto scaled = ev.generic_f([&](Vertex i, Vertex j) { return c * ds(i, j); }).value.value();
            if (!(std::abs(scaled - base) <= 1e-12)) o.fail(fmt::format("graph {}: scaling by {} moved the bound", k, c));
        }
        const auto check = [&](BoundId id, double generic) {
            const double closed = ev.corollary(id).value.value();
            if (!(generic <= closed + 1e-12)) o.fail(fmt::format("graph {}: generic f above {}", k, label(id)));
        };
        check(BoundId::cor_sqrt_prod, ev.generic_f(sp).value.value());
        check(BoundId::cor_sqrt_sum, ev.generic_f(ss).value.value());
        check(BoundId::cor_sum_sqrt, ev.generic_f(qs).value.value());
        check(BoundId::cor_deg_sum, base);
        if (base != ev.corollary(BoundId::cor_deg_sum).value.value()) {
            o.fail(fmt::format("graph {}: f=d_i+d_j differs from (35)", k));
        }
    }
    if (o.pass) o.detail = fmt::format("{} graphs; (35) equal bit for bit", corpus.size());
    return o;
}

std::string ranking_text(const RemarkCheck& rc) {
    std::string s;
    for (const auto& [id, v] : rc.ranking) s += fmt::format("{}={:.4f} ", label(id), v);
    return s;
}

Outcome remark_ordering(const std::optional<std::string>& g2) {
    Outcome o;
    const auto r = reconstruct(*preset("g1"));
    if (r.matches.empty()) o.fail("no reconstructed G1");
    for (const auto& m : r.matches) {
        const auto rc = remark_check(m.graph);
        if (rc.best() != BoundId::oval_avg || !rc.strict_best) o.fail("(3) is not the strict minimum on G1");
        if (rc.second_best() != BoundId::cor_deg_sum) o.fail("(35) is not second on G1");
        o.notes.push_back("G1: " + ranking_text(rc));
    }
    if (g2) {
        const auto rc = remark_check(read_edge_list(*g2));
        if (rc.best() != BoundId::cor_sqrt_prod) o.fail("(32) is not the minimum on the supplied G2");
        o.notes.push_back("G2: " + ranking_text(rc));
        if (o.pass) o.detail = "G1: (3) strict best, (35) second; G2: (32) best";
    } else {
        const auto rc = remark_check(read_edge_list(data_path("g2_near.txt")));
        o.notes.push_back("nearest G2 (not a match, for reference): " + ranking_text(rc));
        if (o.pass) o.detail = "G1: (3) strict best, (35) second; no digraph matches the G2 row, G2 clause not exercised";
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::optional<std::string> g2;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--g2" && i + 1 < argc) {
            g2 = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--g2 <edge-list>]\n";
            return 1;
        }
    }
    if (!g2 && std::filesystem::exists(data_path("g2.txt"))) g2 = data_path("g2.txt");

    const std::vector<Criterion> criteria{
        {1, "analytic families", 1.0, analytic_families},
        {2, "Table 1 G* reproduction", 10.0, table1},
        {3, "Table 2 G1 reproduction", 60.0, table2_g1},
        {4, "Table 2 G2 substitute property", std::nullopt, [&] { return table2_g2(g2); }},
        {5, "dominance sweep", 120.0, dominance_sweep},
        {6, "oracle equivalence", std::nullopt, oracle_equivalence},
        {7, "collapse and homogeneity", std::nullopt, collapse_homogeneity},
        {8, "bound ordering on G1/G2", std::nullopt, [&] { return remark_ordering(g2); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s && secs >= *c.limit_s) o.fail(fmt::format("took {:.2f} s, limit {} s", secs, *c.limit_s));
        failed += !o.pass;
        const std::string limit = c.limit_s ? fmt::format(" < {} s", *c.limit_s) : "";
        std::cout << fmt::format("[{}] AC{} {} ({:.2f} s{}): {}\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, limit,
                                 o.detail);
        for (const auto& n : o.notes) std::cout << indent(n);
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
