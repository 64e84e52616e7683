#pragma once

// Upper bounds on the signless Laplacian spectral radius q(G).
//
// Every bound is evaluated as a max (or, for Hong-You, a min) of a per-arc or
// per-vertex term. Hypotheses that fail produce an inapplicable BoundValue
// rather than an exception, so a full row can always be assembled.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbound/digraph.hpp"

namespace qbound {

enum class BoundId {
    arc_deg_sum,     // (1)
    deg_plus_avg,    // (2)
    oval_avg,        // (3)
    indeg_sqrt,      // (4)
    hong_you,        // (5)
    thm31,           // (27)
    delta_plus_2,    // (cm)
    thm32,           // (28)
    generic_f,       // (29)
    cor_sqrt_prod,   // (32)
    cor_deg_sum,     // (35)
    cor_sqrt_sum,    // (33)
    cor_sum_sqrt,    // (34)
};

/// Column order of the bound row: the eleven table columns, then (cm).
inline constexpr std::array<BoundId, 12> row_order{
    BoundId::arc_deg_sum, BoundId::deg_plus_avg, BoundId::oval_avg,   BoundId::indeg_sqrt,
    BoundId::hong_you,    BoundId::thm31,        BoundId::thm32,      BoundId::cor_sqrt_prod,
    BoundId::cor_deg_sum, BoundId::cor_sqrt_sum, BoundId::cor_sum_sqrt, BoundId::delta_plus_2,
};

/// The eleven bounds that make up a comparison-table row (everything but (cm)).
inline constexpr std::array<BoundId, 11> table_columns{
    BoundId::arc_deg_sum, BoundId::deg_plus_avg, BoundId::oval_avg,   BoundId::indeg_sqrt,
    BoundId::hong_you,    BoundId::thm31,        BoundId::thm32,      BoundId::cor_sqrt_prod,
    BoundId::cor_deg_sum, BoundId::cor_sqrt_sum, BoundId::cor_sum_sqrt,
};

/// Display label, e.g. "(1)", "(cm)".
constexpr std::string_view label(BoundId id) {
    switch (id) {
        case BoundId::arc_deg_sum: return "(1)";
        case BoundId::deg_plus_avg: return "(2)";
        case BoundId::oval_avg: return "(3)";
        case BoundId::indeg_sqrt: return "(4)";
        case BoundId::hong_you: return "(5)";
        case BoundId::thm31: return "(27)";
        case BoundId::delta_plus_2: return "(cm)";
        case BoundId::thm32: return "(28)";
        case BoundId::generic_f: return "(29)";
        case BoundId::cor_sqrt_prod: return "(32)";
        case BoundId::cor_deg_sum: return "(35)";
        case BoundId::cor_sqrt_sum: return "(33)";
        case BoundId::cor_sum_sqrt: return "(34)";
    }
    return "?";
}

constexpr std::string_view name(BoundId id) {
    switch (id) {
        case BoundId::arc_deg_sum: return "ARC_DEG_SUM";
        case BoundId::deg_plus_avg: return "DEG_PLUS_AVG";
        case BoundId::oval_avg: return "OVAL_AVG";
        case BoundId::indeg_sqrt: return "INDEG_SQRT";
        case BoundId::hong_you: return "HONG_YOU";
        case BoundId::thm31: return "THM31";
        case BoundId::delta_plus_2: return "DELTA_PLUS_2";
        case BoundId::thm32: return "THM32";
        case BoundId::generic_f: return "GENERIC_F";
        case BoundId::cor_sqrt_prod: return "COR_F_SQRTPROD";
        case BoundId::cor_deg_sum: return "COR_F_DEGSUM";
        case BoundId::cor_sqrt_sum: return "COR_F_SQRTSUM";
        case BoundId::cor_sum_sqrt: return "COR_F_SUMSQRT";
    }
    return "?";
}

/// Accepts either the label ("(32)", "32", "cm") or the upper-case name.
inline std::optional<BoundId> parse_bound_id(std::string_view text) {
    constexpr std::array all{
        BoundId::arc_deg_sum, BoundId::deg_plus_avg, BoundId::oval_avg,      BoundId::indeg_sqrt,
        BoundId::hong_you,    BoundId::thm31,        BoundId::delta_plus_2,  BoundId::thm32,
        BoundId::generic_f,   BoundId::cor_sqrt_prod, BoundId::cor_deg_sum,  BoundId::cor_sqrt_sum,
        BoundId::cor_sum_sqrt,
    };
    for (BoundId id : all) {
        const auto l = label(id);
        if (text == l || text == l.substr(1, l.size() - 2) || text == name(id)) return id;
    }
    return std::nullopt;
}

/// Where a max/min was attained. For Hong-You `first` is the 0-based rank in
/// the non-increasing outdegree order.
struct Witness {
    enum class Kind { vertex, arc, rank };
    Kind kind = Kind::vertex;
    std::size_t first = 0;
    std::size_t second = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct BoundValue {
    BoundId id{};
    std::optional<double> value;
    std::string reason;  // set when inapplicable
    std::optional<Witness> witness;

    bool applicable() const noexcept { return value.has_value(); }

    friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

/// Arc weight for the generic bound: called as f(i, j), must be positive on arcs.
template <class F>
concept ArcWeightFunction = std::regular_invocable<const F&, Vertex, Vertex> &&
                            std::convertible_to<std::invoke_result_t<const F&, Vertex, Vertex>, double>;

/// Evaluates all bounds for one digraph, sharing the degree profile.
class BoundEvaluator {
public:
    explicit BoundEvaluator(const Digraph& g)
        : g_(g), p_(degree_profile(g)), strong_(is_strongly_connected(g)),
          sorted_(p_.outdeg.begin(), p_.outdeg.end()) {
        std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
    }

    const Digraph& graph() const noexcept { return g_; }
    const DegreeProfile& profile() const noexcept { return p_; }
    bool strongly_connected() const noexcept { return strong_; }

    BoundValue evaluate(BoundId id) const {
        switch (id) {
            case BoundId::arc_deg_sum: return arc_deg_sum();
            case BoundId::deg_plus_avg: return deg_plus_avg();
            case BoundId::oval_avg: return oval_avg();
            case BoundId::indeg_sqrt: return indeg_sqrt();
            case BoundId::hong_you: return hong_you();
            case BoundId::thm31: return thm31();
            case BoundId::delta_plus_2: return delta_plus_2();
            case BoundId::thm32: return thm32();
            case BoundId::generic_f:
                return inapplicable(id, "needs an arc weight function; use generic_f(f)");
            case BoundId::cor_sqrt_prod:
            case BoundId::cor_deg_sum:
            case BoundId::cor_sqrt_sum:
            case BoundId::cor_sum_sqrt: return corollary(id);
        }
        return inapplicable(id, "unknown bound");
    }

    std::vector<BoundValue> all() const {
        std::vector<BoundValue> row;
        row.reserve(row_order.size());
        for (BoundId id : row_order) row.push_back(evaluate(id));
        return row;
    }

    BoundValue arc_deg_sum() const {
        if (auto r = require_strong(BoundId::arc_deg_sum)) return *r;
        return max_over_arcs(BoundId::arc_deg_sum);
    }

    BoundValue deg_plus_avg() const {
        // Vertices with zero outdegree have no average 2-outdegree and are skipped.
        return max_over_vertices(BoundId::deg_plus_avg, true);
    }

    BoundValue oval_avg() const {
        if (auto r = require_strong(BoundId::oval_avg)) return *r;
        return max_over_arcs(BoundId::oval_avg);
    }

    BoundValue indeg_sqrt() const {
        if (auto r = require_strong(BoundId::indeg_sqrt)) return *r;
        return max_over_vertices(BoundId::indeg_sqrt, false);
    }

    BoundValue hong_you() const {
        const auto& sorted = sorted_outdeg();
        BoundValue out{BoundId::hong_you};
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const double t = hong_you_term(i);
            if (!out.value || t < *out.value) {
                out.value = t;
                out.witness = Witness{Witness::Kind::rank, i, 0};
            }
        }
        return out;
    }

    BoundValue thm31() const {
        if (auto r = require_strong(BoundId::thm31)) return *r;
        if (g_.order() < 3) return inapplicable(BoundId::thm31, "requires n >= 3");
        const double big = static_cast<double>(p_.max_outdeg);
        const double small = static_cast<double>(p_.min_outdeg);
        const double excess = static_cast<double>(p_.arc_count) -
                              small * static_cast<double>(g_.order() - 1);
        const double a = big + small - 1.0 + excess / big;
        const double b = small + 1.0 + excess / 2.0;
        return {BoundId::thm31, std::max(a, b), {}, std::nullopt};
    }

    BoundValue delta_plus_2() const {
        if (auto r = require_strong(BoundId::delta_plus_2)) return *r;
        if (g_.order() < 3) return inapplicable(BoundId::delta_plus_2, "requires n >= 3");
        if (p_.min_outdeg != 1) return inapplicable(BoundId::delta_plus_2, "requires minimum outdegree 1");
        const auto excess = static_cast<long long>(p_.arc_count) - static_cast<long long>(g_.order() - 1);
        if (2 * static_cast<long long>(p_.max_outdeg) < excess) {
            return inapplicable(BoundId::delta_plus_2, "requires max outdegree >= (m-(n-1))/2");
        }
        return {BoundId::delta_plus_2, static_cast<double>(p_.max_outdeg) + 2.0, {}, std::nullopt};
    }

    BoundValue thm32() const {
        if (auto r = require_strong(BoundId::thm32)) return *r;
        return max_over_arcs(BoundId::thm32);
    }

    BoundValue corollary(BoundId id) const {
        for (const Arc& a : g_.arcs()) {
            if (p_.outdeg[a.head] == 0) {
                return inapplicable(id, "arc head " + std::to_string(a.head) +
                                            " has outdegree 0, so the arc weight vanishes");
            }
        }
        return max_over_arcs(id);
    }

    /// max over arcs (i,j) of (sum_{k in N+(i)} f(i,k) + sum_{k in N+(j)} f(j,k)) / f(i,j).
    template <ArcWeightFunction F>
    BoundValue generic_f(const F& f) const {
        for (const Arc& a : g_.arcs()) {
            const double w = f(a.tail, a.head);
            if (!(w > 0.0)) {
                return inapplicable(BoundId::generic_f,
                                    "weight function is not positive on arc (" +
                                        std::to_string(a.tail) + ", " + std::to_string(a.head) + ")");
            }
        }
        std::vector<double> out_sum(g_.order(), 0.0);
        for (const Arc& a : g_.arcs()) out_sum[a.tail] += static_cast<double>(f(a.tail, a.head));
        BoundValue out{BoundId::generic_f};
        for (const Arc& a : g_.arcs()) {
            const double t = (out_sum[a.tail] + out_sum[a.head]) / static_cast<double>(f(a.tail, a.head));
            if (!out.value || t > *out.value) {
                out.value = t;
                out.witness = Witness{Witness::Kind::arc, a.tail, a.head};
            }
        }
        return out;
    }

    /// Re-evaluates the single term a witness refers to.
    double term_at(BoundId id, const Witness& w) const {
        switch (w.kind) {
            case Witness::Kind::arc: return arc_term(id, w.first, w.second);
            case Witness::Kind::vertex: return vertex_term(id, w.first);
            case Witness::Kind::rank: return hong_you_term(w.first);
        }
        return std::nan("");
    }

    double arc_term(BoundId id, Vertex i, Vertex j) const {
        const double di = static_cast<double>(p_.outdeg[i]);
        const double dj = static_cast<double>(p_.outdeg[j]);
        switch (id) {
            case BoundId::arc_deg_sum: return di + dj;
            case BoundId::oval_avg: {
                const double mi = avg(i), mj = avg(j);
                return (di + dj + std::sqrt((di - dj) * (di - dj) + 4.0 * mi * mj)) / 2.0;
            }
            case BoundId::thm32: {
                const double si = std::sqrt(di * avg(i)), sj = std::sqrt(dj * avg(j));
                return (di + dj + std::sqrt((di - dj) * (di - dj) + 4.0 * si * sj)) / 2.0;
            }
            case BoundId::cor_sqrt_prod:
                return di * std::sqrt(avg(i) / dj) + dj * std::sqrt(avg(j) / di);
            case BoundId::cor_deg_sum: {
                // d(d + m) = d^2 + t, kept in integers.
                const double ti = static_cast<double>(p_.two_outdeg[i]);
                const double tj = static_cast<double>(p_.two_outdeg[j]);
                return (di * di + ti + dj * dj + tj) / (di + dj);
            }
            case BoundId::cor_sqrt_sum:
                return (di * std::sqrt(di + avg(i)) + dj * std::sqrt(dj + avg(j))) / std::sqrt(di + dj);
            case BoundId::cor_sum_sqrt:
                return (di * (std::sqrt(di) + std::sqrt(avg(i))) + dj * (std::sqrt(dj) + std::sqrt(avg(j)))) /
                       (std::sqrt(di) + std::sqrt(dj));
            default: return std::nan("");
        }
    }

    double vertex_term(BoundId id, Vertex i) const {
        const double di = static_cast<double>(p_.outdeg[i]);
        switch (id) {
            case BoundId::deg_plus_avg: return di + avg(i);
            case BoundId::indeg_sqrt: {
                double s = 0.0;
                for (Vertex j : g_.in(i)) s += static_cast<double>(p_.outdeg[j]);
                return di + std::sqrt(s);
            }
            default: return std::nan("");
        }
    }

    double hong_you_term(std::size_t rank) const {
        const auto& d = sorted_outdeg();
        const double d1 = d.front();
        const double di = d[rank];
        double excess = 0.0;
        for (std::size_t k = 0; k < rank; ++k) excess += d[k] - di;
        const double lin = 2.0 * di - d1 + 1.0;
        return (d1 + 2.0 * di - 1.0 + std::sqrt(lin * lin + 8.0 * excess)) / 2.0;
    }

private:
    static BoundValue inapplicable(BoundId id, std::string reason) {
        return {id, std::nullopt, std::move(reason), std::nullopt};
    }

    std::optional<BoundValue> require_strong(BoundId id) const {
        if (strong_) return std::nullopt;
        return inapplicable(id, "requires a strongly connected digraph");
    }

    double avg(Vertex v) const { return p_.avg_two_outdeg[v].value(); }

    const std::vector<double>& sorted_outdeg() const { return sorted_; }

    BoundValue max_over_arcs(BoundId id) const {
        BoundValue out{id};
        for (const Arc& a : g_.arcs()) {
            const double t = arc_term(id, a.tail, a.head);
            if (!out.value || t > *out.value) {
                out.value = t;
                out.witness = Witness{Witness::Kind::arc, a.tail, a.head};
            }
        }
        return out;
    }

    BoundValue max_over_vertices(BoundId id, bool skip_sinks) const {
        BoundValue out{id};
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (skip_sinks && p_.outdeg[v] == 0) continue;
            const double t = vertex_term(id, v);
            if (!out.value || t > *out.value) {
                out.value = t;
                out.witness = Witness{Witness::Kind::vertex, v, 0};
            }
        }
        return out;
    }

    const Digraph& g_;
    DegreeProfile p_;
    bool strong_;
    std::vector<double> sorted_;  // outdegrees, non-increasing
};

inline BoundValue bound_arc_deg_sum(const Digraph& g) { return BoundEvaluator(g).arc_deg_sum(); }
inline BoundValue bound_deg_plus_avg(const Digraph& g) { return BoundEvaluator(g).deg_plus_avg(); }
inline BoundValue bound_oval_avg(const Digraph& g) { return BoundEvaluator(g).oval_avg(); }
inline BoundValue bound_indeg_sqrt(const Digraph& g) { return BoundEvaluator(g).indeg_sqrt(); }
inline BoundValue bound_hong_you(const Digraph& g) { return BoundEvaluator(g).hong_you(); }
inline BoundValue bound_thm31(const Digraph& g) { return BoundEvaluator(g).thm31(); }
inline BoundValue bound_delta_plus_2(const Digraph& g) { return BoundEvaluator(g).delta_plus_2(); }
inline BoundValue bound_thm32(const Digraph& g) { return BoundEvaluator(g).thm32(); }
inline BoundValue bound_cor32(const Digraph& g) { return BoundEvaluator(g).corollary(BoundId::cor_sqrt_prod); }
inline BoundValue bound_cor35(const Digraph& g) { return BoundEvaluator(g).corollary(BoundId::cor_deg_sum); }
inline BoundValue bound_cor33(const Digraph& g) { return BoundEvaluator(g).corollary(BoundId::cor_sqrt_sum); }
inline BoundValue bound_cor34(const Digraph& g) { return BoundEvaluator(g).corollary(BoundId::cor_sum_sqrt); }

template <ArcWeightFunction F>
BoundValue bound_generic_f(const Digraph& g, const F& f) {
    return BoundEvaluator(g).generic_f(f);
}

/// Full row in `row_order`; inapplicable bounds carry their reason.
inline std::vector<BoundValue> all_bounds(const Digraph& g) { return BoundEvaluator(g).all(); }

/// Arc weights whose generic bound the four closed-form corollaries majorise.
namespace weights {

struct SqrtProduct {  // sqrt(d_i d_j), gives (32)
    const DegreeProfile* p;
    double operator()(Vertex i, Vertex j) const {
        return std::sqrt(static_cast<double>(p->outdeg[i]) * static_cast<double>(p->outdeg[j]));
    }
};

struct DegreeSum {  // d_i + d_j, gives (35)
    const DegreeProfile* p;
    double operator()(Vertex i, Vertex j) const {
        return static_cast<double>(p->outdeg[i]) + static_cast<double>(p->outdeg[j]);
    }
};

struct SqrtOfSum {  // sqrt(d_i + d_j), gives (33)
    const DegreeProfile* p;
    double operator()(Vertex i, Vertex j) const {
        return std::sqrt(static_cast<double>(p->outdeg[i]) + static_cast<double>(p->outdeg[j]));
    }
};

struct SumOfSqrt {  // sqrt(d_i) + sqrt(d_j), gives (34)
    const DegreeProfile* p;
    double operator()(Vertex i, Vertex j) const {
        return std::sqrt(static_cast<double>(p->outdeg[i])) + std::sqrt(static_cast<double>(p->outdeg[j]));
    }
};

}  // namespace weights

}  // namespace qbound
