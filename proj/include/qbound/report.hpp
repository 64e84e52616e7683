#pragma once

// Report documents for a single digraph: summary, q(G), and the bound row,
// rendered as a fixed-width table, CSV, or a JSON tree.

#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qbound/bounds.hpp"
#include "qbound/digraph.hpp"
#include "qbound/spectral.hpp"

namespace qbound {

/// |bound - q| at or below this marks the bound as attained.
inline constexpr double equality_tolerance = 1e-9;

struct BoundReportEntry {
    BoundValue bound;
    bool equality = false;
};

struct Report {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_outdeg = 0;
    std::size_t min_outdeg = 0;
    Classification flags;
    SpectralResult spectral;
    std::vector<BoundReportEntry> bounds;  // row_order
};

inline Report build_report(const Digraph& g, const SpectralOptions& opt = {}) {
    const BoundEvaluator ev(g);
    Report r;
    r.n = g.order();
    r.m = g.size();
    r.max_outdeg = ev.profile().max_outdeg;
    r.min_outdeg = ev.profile().min_outdeg;
    r.flags = classify(g);
    r.spectral = spectral_radius(g, opt);
    for (BoundValue& b : ev.all()) {
        const bool eq = b.value && std::abs(*b.value - r.spectral.q) <= equality_tolerance;
        r.bounds.push_back({std::move(b), eq});
    }
    return r;
}

namespace detail {

inline std::string witness_text(const std::optional<Witness>& w) {
    if (!w) return "";
    switch (w->kind) {
        case Witness::Kind::arc: return fmt::format("arc {}->{}", w->first + 1, w->second + 1);
        case Witness::Kind::vertex: return fmt::format("vertex {}", w->first + 1);
        case Witness::Kind::rank: return fmt::format("rank {}", w->first + 1);
    }
    return "";
}

inline std::vector<std::pair<const char*, bool>> flag_list(const Classification& c) {
    return {{"strongly_connected", c.is_strongly_connected},
            {"regular", c.is_regular},
            {"directed_cycle", c.is_directed_cycle},
            {"bidirectional_star", c.is_bidirectional_star},
            {"bipartite_semiregular", c.is_bipartite_semiregular},
            {"g_star_class", c.is_in_g_star_class}};
}

inline std::string fixed4(const std::optional<double>& v) { return v ? fmt::format("{:.4f}", *v) : "-"; }

}  // namespace detail

/// Human table. The first block mirrors the two-line layout of the
/// comparison table; the second lists every bound with witness and notes.
inline std::string render_table(const Report& r) {
    std::string out;
    out += fmt::format("digraph: n={} m={} max_outdeg={} min_outdeg={}\n", r.n, r.m, r.max_outdeg, r.min_outdeg);
    std::string flags;
    for (const auto& [name, on] : detail::flag_list(r.flags)) {
        if (on) flags += (flags.empty() ? "" : " ") + std::string(name);
    }
    out += fmt::format("flags: {}\n", flags.empty() ? "none" : flags);
    out += fmt::format("q(G) = {:.4f}  (residual {:.1e}, {} iterations)\n\n", r.spectral.q, r.spectral.residual,
                       r.spectral.iterations);

    auto find = [&](BoundId id) -> const BoundReportEntry& {
        for (const auto& e : r.bounds)
            if (e.bound.id == id) return e;
        throw std::logic_error("bound missing from report");
    };
    std::string head1 = fmt::format("{:>8}", "q(G)"), row1 = fmt::format("{:>8.4f}", r.spectral.q);
    std::string head2 = fmt::format("{:>8}", ""), row2 = fmt::format("{:>8}", "");
    for (std::size_t k = 0; k < table_columns.size(); ++k) {
        const auto& e = find(table_columns[k]);
        auto& head = k < 5 ? head1 : head2;
        auto& row = k < 5 ? row1 : row2;
        head += fmt::format("{:>9}", label(e.bound.id));
        row += fmt::format("{:>9}", detail::fixed4(e.bound.value));
    }
    out += head1 + "\n" + row1 + "\n" + head2 + "\n" + row2 + "\n\n";

    out += fmt::format("{:<6} {:>9}  {:<14} {}\n", "bound", "value", "witness", "note");
    for (const auto& e : r.bounds) {
        std::string note = e.equality ? "equality" : "";
        if (!e.bound.value) note = "inapplicable: " + e.bound.reason;
        out += fmt::format("{:<6} {:>9}  {:<14} {}", label(e.bound.id), detail::fixed4(e.bound.value),
                           detail::witness_text(e.bound.witness), note);
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

/// CSV with full-precision numbers.
inline std::string render_csv(const Report& r) {
    std::string out = "quantity,id,value,applicable,witness,equality,note\n";
    out += fmt::format("q,Q,{:.17g},yes,,,residual={:.3g};iterations={}\n", r.spectral.q, r.spectral.residual,
                       r.spectral.iterations);
    for (const auto& e : r.bounds) {
        const auto& b = e.bound;
        out += fmt::format("{},{},{},{},{},{},{}\n", label(b.id), name(b.id),
                           b.value ? fmt::format("{:.17g}", *b.value) : "", b.value ? "yes" : "no",
                           detail::witness_text(b.witness), e.equality ? "yes" : "",
                           b.value ? "" : "\"" + b.reason + "\"");
    }
    return out;
}

inline nlohmann::json to_json(const Report& r) {
    using nlohmann::json;
    json flags = json::object();
    for (const auto& [name, on] : detail::flag_list(r.flags)) flags[name] = on;
    json comps = json::array();
    for (const auto& c : r.spectral.per_component) comps.push_back({{"component", c.component}, {"radius", c.radius}});
    json bounds = json::array();
    for (const auto& e : r.bounds) {
        const auto& b = e.bound;
        json entry{{"id", name(b.id)}, {"label", label(b.id)}, {"applicable", b.applicable()},
                   {"equality", e.equality}};
        entry["value"] = b.value ? json(*b.value) : json(nullptr);
        if (!b.value) entry["reason"] = b.reason;
        if (b.witness) {
            const auto& w = *b.witness;
            switch (w.kind) {
                case Witness::Kind::arc: entry["witness"] = {{"arc", {w.first + 1, w.second + 1}}}; break;
                case Witness::Kind::vertex: entry["witness"] = {{"vertex", w.first + 1}}; break;
                case Witness::Kind::rank: entry["witness"] = {{"rank", w.first + 1}}; break;
            }
        }
        bounds.push_back(std::move(entry));
    }
    return {{"graph",
             {{"n", r.n}, {"m", r.m}, {"max_outdeg", r.max_outdeg}, {"min_outdeg", r.min_outdeg}, {"flags", flags}}},
            {"spectral",
             {{"q", r.spectral.q},
              {"residual", r.spectral.residual},
              {"iterations", r.spectral.iterations},
              {"per_component", comps}}},
            {"bounds", bounds}};
}

}  // namespace qbound
