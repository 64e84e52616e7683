#pragma once

// Property sweeps over seeded digraph corpora and exhaustive reconstruction
// of small digraphs from a published row of bound values.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbound/bounds.hpp"
#include "qbound/digraph.hpp"
#include "qbound/edge_list.hpp"
#include "qbound/generators.hpp"
#include "qbound/spectral.hpp"

namespace qbound {

// ---------------------------------------------------------------------------
// Corpora

struct CorpusSpec {
    std::size_t count = 0;
    std::size_t n_min = 3;
    std::size_t n_max = 12;
    std::vector<double> probabilities{0.3};
    std::uint64_t seed = 0;
};

inline std::string describe(const CorpusSpec& spec) {
    std::ostringstream os;
    os << "random strongly connected: count=" << spec.count << " n=" << spec.n_min << ".."
       << spec.n_max << " p={";
    for (std::size_t i = 0; i < spec.probabilities.size(); ++i) {
        os << (i ? "," : "") << spec.probabilities[i];
    }
    os << "} seed=" << spec.seed;
    return os.str();
}

/// Graph k draws its size from a sub-seed of (seed, k), its arc probability
/// cyclically from `probabilities`, and its arcs from a second sub-seed.
inline std::vector<Digraph> make_corpus(const CorpusSpec& spec) {
    if (spec.n_min < 2 || spec.n_max < spec.n_min) {
        throw std::invalid_argument("corpus needs 2 <= n_min <= n_max");
    }
    if (spec.probabilities.empty()) throw std::invalid_argument("corpus needs at least one arc probability");
    std::vector<Digraph> out;
    out.reserve(spec.count);
    const std::uint64_t span = spec.n_max - spec.n_min + 1;
    for (std::size_t k = 0; k < spec.count; ++k) {
        const std::uint64_t sub = detail::mix64(spec.seed ^ detail::mix64(k));
        detail::Rng pick(sub);
        const std::size_t n = spec.n_min + static_cast<std::size_t>(pick.below(span));
        const double p = spec.probabilities[k % spec.probabilities.size()];
        out.push_back(gen_random_strongly_connected(n, p, pick.next()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps

enum class Invariant {
    dominance,           ///< q <= every applicable bound
    q_bracket,           ///< min row sum of Q <= q <= max row sum
    similarity_bracket,  ///< same for D^-1 Q D and D^-1/2 Q D^1/2
    oval_containment,    ///< q lies in the union of arc ovals of D^-1/2 Q D^1/2
    collapse,            ///< generic bound with f == 1 equals bound (1)
    homogeneity,         ///< generic bound is invariant under f -> c f
    cauchy_schwarz,      ///< generic bound <= closed-form corollary
    witness,             ///< the reported witness reproduces the bound value
    equality_cases,      ///< regular / star / bipartite semiregular equalities
    exceeds_max_outdeg,  ///< q > max outdegree for strongly connected n >= 2
};

inline constexpr std::array all_invariants{
    Invariant::dominance,       Invariant::q_bracket,   Invariant::similarity_bracket,
    Invariant::oval_containment, Invariant::collapse,   Invariant::homogeneity,
    Invariant::cauchy_schwarz,  Invariant::witness,     Invariant::equality_cases,
    Invariant::exceeds_max_outdeg,
};

constexpr std::string_view name(Invariant inv) {
    switch (inv) {
        case Invariant::dominance: return "dominance";
        case Invariant::q_bracket: return "q_bracket";
        case Invariant::similarity_bracket: return "similarity_bracket";
        case Invariant::oval_containment: return "oval_containment";
        case Invariant::collapse: return "collapse";
        case Invariant::homogeneity: return "homogeneity";
        case Invariant::cauchy_schwarz: return "cauchy_schwarz";
        case Invariant::witness: return "witness";
        case Invariant::equality_cases: return "equality_cases";
        case Invariant::exceeds_max_outdeg: return "exceeds_max_outdeg";
    }
    return "?";
}

class InvariantSet {
public:
    InvariantSet() = default;
    InvariantSet(std::initializer_list<Invariant> list) {
        for (Invariant i : list) bits_ |= bit(i);
    }
    static InvariantSet all() {
        InvariantSet s;
        for (Invariant i : all_invariants) s.bits_ |= bit(i);
        return s;
    }
    bool contains(Invariant i) const noexcept { return (bits_ & bit(i)) != 0; }

    friend bool operator==(const InvariantSet&, const InvariantSet&) = default;

private:
    static constexpr std::uint32_t bit(Invariant i) { return 1u << static_cast<unsigned>(i); }
    std::uint32_t bits_ = 0;
};

struct SweepTolerances {
    double dominance = 1e-9;
    double bracket = 1e-9;
    double equality = 1e-9;
    double homogeneity = 1e-12;
    double cauchy_schwarz = 1e-12;
    /// Absolute allowance on the oval product inequality, scaled by max(1, q)^2.
    double oval = 1e-9;
};

struct SweepOptions {
    SpectralOptions spectral{};
    SweepTolerances tol{};
};

struct InvariantOutcome {
    Invariant invariant{};
    bool passed = true;
    std::string detail;  // first violation, empty on pass

    friend bool operator==(const InvariantOutcome&, const InvariantOutcome&) = default;
};

struct GraphOutcome {
    std::size_t index = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    double q = 0.0;
    std::vector<InvariantOutcome> results;

    bool passed() const {
        return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    }
    friend bool operator==(const GraphOutcome&, const GraphOutcome&) = default;
};

struct SweepFailure {
    std::size_t index = 0;
    Invariant invariant{};
    std::string detail;
    std::string edge_list;  // serialized counterexample

    friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepReport {
    std::string corpus;
    std::vector<GraphOutcome> graphs;
    std::vector<SweepFailure> failures;

    bool passed() const noexcept { return failures.empty(); }
    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

namespace detail {

class Checker {
public:
    Checker(const Digraph& g, const SweepOptions& opt)
        : g_(g), opt_(opt), ev_(g), spec_(spectral_radius(g, opt.spectral)), q_(spec_.q),
          row_(ev_.all()), cls_(classify(g)) {}

    double q() const { return q_; }

    InvariantOutcome run(Invariant inv) const {
        InvariantOutcome out{inv};
        auto fail = [&](std::string msg) {
            if (out.passed) out.detail = std::move(msg);
            out.passed = false;
        };
        const bool strong = ev_.strongly_connected();
        const auto& p = ev_.profile();
        switch (inv) {
            case Invariant::dominance:
                for (const BoundValue& b : row_) {
                    if (b.value && !(q_ <= *b.value + opt_.tol.dominance)) {
                        fail("q = " + num(q_) + " exceeds bound " + std::string(label(b.id)) + " = " + num(*b.value));
                    }
                }
                break;
            case Invariant::q_bracket: {
                const auto br = row_sum_bracket(build_q(g_));
                check_bracket(br, "Q", fail);
                if (!(br.lower == 2.0 * static_cast<double>(p.min_outdeg) &&
                      br.upper == 2.0 * static_cast<double>(p.max_outdeg))) {
                    fail("row sums of Q are not (2 min outdeg, 2 max outdeg)");
                }
                break;
            }
            case Invariant::similarity_bracket: {
                if (!strong) break;
                check_bracket(row_sum_bracket(similarity_matrix(g_, SimilarityKind::deg_inverse)), "D^-1 Q D", fail);
                check_bracket(row_sum_bracket(similarity_matrix(g_, SimilarityKind::deg_sqrt)), "D^-1/2 Q D^1/2", fail);
                // Closed form of the D^-1 Q D row sums: d + m.
                double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
                for (Vertex v = 0; v < g_.order(); ++v) {
                    const double s = static_cast<double>(p.outdeg[v]) + *p.avg_two_outdeg[v];
                    lo = std::min(lo, s);
                    hi = std::max(hi, s);
                }
                check_bracket({lo, hi}, "d+m", fail);
                break;
            }
            case Invariant::oval_containment: {
                if (!strong) break;
                const double slack = opt_.tol.oval * std::max(1.0, q_) * std::max(1.0, q_);
                if (!qbound::oval_containment(g_, q_, slack).contained) fail("q = " + num(q_) + " lies outside every oval");
                break;
            }
            case Invariant::collapse: {
                if (!strong) break;
                const auto one = ev_.generic_f([](Vertex, Vertex) { return 1.0; });
                const auto ref = ev_.arc_deg_sum();
                if (one.value != ref.value) fail("generic(f=1) = " + num(*one.value) + " but (1) = " + num(*ref.value));
                break;
            }
            case Invariant::homogeneity:
                if (!heads_positive()) break;
                each_weight([&](const auto& f, BoundId) {
                    const auto base = ev_.generic_f(f);
                    for (double c : {0.5, 3.0}) {
                        const auto scaled = ev_.generic_f([&](Vertex i, Vertex j) { return c * f(i, j); });
                        if (!(std::abs(*scaled.value - *base.value) <= opt_.tol.homogeneity)) {
                            fail("generic bound changes under scaling by " + num(c));
                        }
                    }
                });
                break;
            case Invariant::cauchy_schwarz:
                if (!heads_positive()) break;
                each_weight([&](const auto& f, BoundId cor) {
                    const double gen = *ev_.generic_f(f).value;
                    const double closed = *ev_.corollary(cor).value;
                    if (!(gen <= closed + opt_.tol.cauchy_schwarz)) {
                        fail("generic " + num(gen) + " > corollary " + std::string(label(cor)) + " " + num(closed));
                    }
                    if (cor == BoundId::cor_deg_sum && gen != closed) {
                        fail("generic bound with f = d_i + d_j differs from (35)");
                    }
                });
                break;
            case Invariant::witness:
                for (const BoundValue& b : row_) {
                    if (!b.value || !b.witness) continue;
                    if (ev_.term_at(b.id, *b.witness) != *b.value) {
                        fail("witness of " + std::string(label(b.id)) + " does not reproduce its value");
                    }
                }
                break;
            case Invariant::equality_cases: {
                auto expect = [&](double a, double b, const std::string& what) {
                    if (!(std::abs(a - b) <= opt_.tol.equality)) fail(what + ": " + num(a) + " != " + num(b));
                };
                const double big = static_cast<double>(p.max_outdeg);
                if (cls_.is_regular) expect(q_, 2.0 * big, "regular: q vs 2 max outdeg");
                if (cls_.is_regular && strong) expect(*ev_.thm32().value, q_, "regular: (28) vs q");
                if (cls_.is_regular && strong && !cls_.is_directed_cycle && g_.order() >= 3) {
                    expect(*ev_.thm31().value, q_, "regular: (27) vs q");
                }
                if (cls_.is_bidirectional_star && g_.order() >= 3) {
                    expect(q_, static_cast<double>(g_.order()), "star: q vs n");
                    expect(*ev_.thm31().value, q_, "star: (27) vs q");
                }
                if (cls_.is_bipartite_semiregular && strong) expect(*ev_.thm32().value, q_, "bipartite semiregular: (28) vs q");
                break;
            }
            case Invariant::exceeds_max_outdeg:
                if (strong && g_.order() >= 2 && !(q_ > static_cast<double>(p.max_outdeg))) {
                    fail("q = " + num(q_) + " does not exceed max outdegree");
                }
                break;
        }
        return out;
    }

private:
    template <class Fail>
    void check_bracket(RowSumBracket br, const char* what, Fail& fail) const {
        if (!(br.lower - opt_.tol.bracket <= q_ && q_ <= br.upper + opt_.tol.bracket)) {
            fail(std::string("q = ") + num(q_) + " outside row-sum bracket of " + what + " [" + num(br.lower) +
                 ", " + num(br.upper) + "]");
        }
    }

    bool heads_positive() const {
        return std::all_of(g_.arcs().begin(), g_.arcs().end(),
                           [&](const Arc& a) { return g_.outdeg(a.head) > 0; });
    }

    template <class Fn>
    void each_weight(Fn&& fn) const {
        const DegreeProfile* p = &ev_.profile();
        fn(weights::SqrtProduct{p}, BoundId::cor_sqrt_prod);
        fn(weights::DegreeSum{p}, BoundId::cor_deg_sum);
        fn(weights::SqrtOfSum{p}, BoundId::cor_sqrt_sum);
        fn(weights::SumOfSqrt{p}, BoundId::cor_sum_sqrt);
    }

    static std::string num(double v) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        return os.str();
    }

    const Digraph& g_;
    const SweepOptions& opt_;
    BoundEvaluator ev_;
    SpectralResult spec_;
    double q_;
    std::vector<BoundValue> row_;
    Classification cls_;
};

}  // namespace detail

inline SweepReport sweep(std::span<const Digraph> corpus, std::string description,
                         InvariantSet invariants = InvariantSet::all(), const SweepOptions& opt = {}) {
    SweepReport report;
    report.corpus = std::move(description);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const Digraph& g = corpus[k];
        GraphOutcome go{k, g.order(), g.size()};
        try {
            const detail::Checker check(g, opt);
            go.q = check.q();
            for (Invariant inv : all_invariants) {
                if (!invariants.contains(inv)) continue;
                go.results.push_back(check.run(inv));
                if (!go.results.back().passed) {
                    report.failures.push_back({k, inv, go.results.back().detail, serialize_edge_list(g)});
                }
            }
        } catch (const ConvergenceError& e) {
            report.failures.push_back({k, Invariant::dominance, e.what(), serialize_edge_list(g)});
        }
        report.graphs.push_back(std::move(go));
    }
    return report;
}

inline SweepReport sweep(const CorpusSpec& spec, InvariantSet invariants = InvariantSet::all(),
                         const SweepOptions& opt = {}) {
    const auto corpus = make_corpus(spec);
    return sweep(corpus, describe(spec), invariants, opt);
}

// ---------------------------------------------------------------------------
// Isomorphism canonical form

/// Smallest adjacency bitstring over all relabelings. Off-diagonal pairs
/// (i, j) are read in lexicographic order, most significant bit first.
/// Brute force over n! permutations; n <= 8.
inline std::uint64_t canonical_form(const Digraph& g) {
    const std::size_t n = g.order();
    if (n > 8) throw std::invalid_argument("canonical_form supports n <= 8");
    const std::size_t pairs = n * (n - 1);
    auto pair_bit = [&](Vertex i, Vertex j) {
        const std::size_t idx = i * (n - 1) + (j < i ? j : j - 1);
        return std::uint64_t{1} << (pairs - 1 - idx);
    };
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    do {
        std::uint64_t code = 0;
        for (const Arc& a : g.arcs()) code |= pair_bit(perm[a.tail], perm[a.head]);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ---------------------------------------------------------------------------
// Reconstruction

class ReconstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ReconstructionTarget {
    std::string name;
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::optional<std::size_t> max_outdeg;
    std::optional<std::size_t> min_outdeg;
    bool require_strongly_connected = true;
    bool require_g_star = false;
    std::optional<double> q;
    std::vector<std::pair<BoundId, double>> row;
    double tolerance = 5e-4;
};

struct Deviation {
    std::string column;  // "q" or a bound label
    double expected = 0.0;
    std::optional<double> computed;
    double abs_deviation = 0.0;  // +inf when the bound is inapplicable
};

struct ReconstructionMatch {
    Digraph graph;
    std::uint64_t candidate = 0;  // enumeration ordinal
    SpectralResult spectral;
    std::vector<BoundValue> row;
    std::vector<Deviation> deviations;
    double max_deviation = 0.0;
};

struct ReconstructionResult {
    std::vector<ReconstructionMatch> matches;  // one per isomorphism class, in enumeration order
    std::uint64_t visited = 0;                 // arc subsets enumerated
    std::uint64_t evaluated = 0;               // subsets passing the structural filters
    std::optional<ReconstructionMatch> nearest;
};

/// Largest n for which reconstruct enumerates every arc subset.
inline constexpr std::size_t max_exhaustive_order = 5;
/// Largest n accepted when m and an outdegree constraint are given.
inline constexpr std::size_t max_constrained_order = 6;

inline void validate(const ReconstructionTarget& t) {
    if (!(t.tolerance > 0.0)) throw ReconstructionError("tolerance must be positive");
    if (t.n < 2) throw ReconstructionError("n must be at least 2");
    for (const auto& [id, v] : t.row) {
        if (std::find(row_order.begin(), row_order.end(), id) == row_order.end()) {
            throw ReconstructionError("bound " + std::string(label(id)) + " is not part of the bound row");
        }
    }
    const std::size_t pairs = t.n * (t.n - 1);
    if (t.m && (*t.m == 0 || *t.m > pairs)) throw ReconstructionError("m must lie in [1, n(n-1)]");
    if (t.n <= max_exhaustive_order) return;
    if (t.n <= max_constrained_order && t.m && (t.max_outdeg || t.min_outdeg)) return;
    throw ReconstructionError(
        "n = " + std::to_string(t.n) + " is too large for exhaustive search (2^" + std::to_string(pairs) +
        " arc sets). Supply a fixed arc count (--m) and an outdegree constraint (--max-outdeg / --min-outdeg); "
        "n <= " + std::to_string(max_constrained_order) + " is supported that way.");
}

/// Deviation of a computed row and q from a target.
inline std::vector<Deviation> deviations(const ReconstructionTarget& t, double q, std::span<const BoundValue> row) {
    std::vector<Deviation> out;
    if (t.q) out.push_back({"q", *t.q, q, std::abs(q - *t.q)});
    for (const auto& [id, expected] : t.row) {
        const auto it = std::find_if(row.begin(), row.end(), [&](const BoundValue& b) { return b.id == id; });
        Deviation d{std::string(label(id)), expected, std::nullopt, std::numeric_limits<double>::infinity()};
        if (it != row.end() && it->value) {
            d.computed = *it->value;
            d.abs_deviation = std::abs(*it->value - expected);
        }
        out.push_back(d);
    }
    return out;
}

namespace detail {

inline Arc pair_of(std::size_t n, std::size_t k) {
    const Vertex i = k / (n - 1);
    Vertex j = k % (n - 1);
    if (j >= i) ++j;
    return {i, j};
}

// Next integer with the same popcount (Gosper's hack); 0 when exhausted.
inline std::uint64_t next_same_popcount(std::uint64_t x, std::size_t width) {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0) return 0;
    const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
    if (width < 64 && (next >> width) != 0) return 0;
    return next;
}

}  // namespace detail

/// Enumerates arc subsets on t.n vertices (all non-empty subsets, or all of
/// size t.m), filters them by the structural constraints, and returns every
/// candidate whose q and bound row are within tolerance of the target, one
/// per isomorphism class.
inline ReconstructionResult reconstruct(const ReconstructionTarget& t, const SpectralOptions& spectral = {}) {
    validate(t);
    const std::size_t n = t.n;
    const std::size_t pairs = n * (n - 1);
    const std::size_t seg = n - 1;
    const std::uint64_t seg_mask = (std::uint64_t{1} << seg) - 1;

    ReconstructionResult result;
    std::set<std::uint64_t> seen_forms;
    double nearest_dev = std::numeric_limits<double>::infinity();
    std::vector<Arc> arcs;

    auto consider = [&](std::uint64_t mask, std::uint64_t ordinal) {
        ++result.visited;
        std::size_t hi = 0, lo = std::numeric_limits<std::size_t>::max();
        for (std::size_t v = 0; v < n; ++v) {
            const auto d = static_cast<std::size_t>(std::popcount((mask >> (v * seg)) & seg_mask));
            hi = std::max(hi, d);
            lo = std::min(lo, d);
        }
        if (t.max_outdeg && hi != *t.max_outdeg) return;
        if (t.min_outdeg && lo != *t.min_outdeg) return;
        if (t.require_strongly_connected && lo == 0) return;

        arcs.clear();
        for (std::size_t k = 0; k < pairs; ++k)
            if ((mask >> k) & 1) arcs.push_back(detail::pair_of(n, k));
        Digraph g = Digraph::from_arc_list(n, arcs);
        const BoundEvaluator ev(g);
        if (t.require_strongly_connected && !ev.strongly_connected()) return;
        if (t.require_g_star && !is_in_g_star_class(g, ev.profile(), ev.strongly_connected())) return;
        ++result.evaluated;

        std::vector<BoundValue> row = ev.all();
        auto devs = deviations(t, 0.0, row);
        double bound_dev = 0.0;
        for (const auto& d : devs)
            if (d.column != "q") bound_dev = std::max(bound_dev, d.abs_deviation);
        if (bound_dev > t.tolerance && bound_dev >= nearest_dev) return;

        SpectralResult sr = spectral_radius(g, spectral);
        devs = deviations(t, sr.q, row);
        double dev = 0.0;
        for (const auto& d : devs) dev = std::max(dev, d.abs_deviation);

        const bool is_match = dev <= t.tolerance;
        const bool is_nearer = dev < nearest_dev;
        if (!is_match && !is_nearer) return;
        ReconstructionMatch match{std::move(g), ordinal, std::move(sr), std::move(row), std::move(devs), dev};
        if (is_nearer) {
            nearest_dev = dev;
            result.nearest = match;
        }
        if (is_match && seen_forms.insert(canonical_form(match.graph)).second) {
            result.matches.push_back(std::move(match));
        }
    };

    if (t.m) {
        std::uint64_t mask = (std::uint64_t{1} << *t.m) - 1;
        for (std::uint64_t ordinal = 0; mask != 0; ++ordinal) {
            consider(mask, ordinal);
            mask = detail::next_same_popcount(mask, pairs);
        }
    } else {
        const std::uint64_t end = std::uint64_t{1} << pairs;
        for (std::uint64_t mask = 1; mask < end; ++mask) consider(mask, mask);
    }
    return result;
}

/// Published rows. gstar and g1 are searched exhaustively on 4 vertices;
/// g2 has 6 vertices and needs a user-supplied arc count.
inline std::optional<ReconstructionTarget> preset(std::string_view name) {
    using B = BoundId;
    if (name == "gstar") {
        ReconstructionTarget t{"gstar", 4, 9, 3, 1};
        t.require_g_star = true;
        t.q = 4.7321;
        t.row = {{B::arc_deg_sum, 6.0}, {B::delta_plus_2, 5.0}};
        return t;
    }
    if (name == "g1") {
        ReconstructionTarget t{"g1", 4};
        t.q = 3.0000;
        t.row = {{B::arc_deg_sum, 4.0000},   {B::deg_plus_avg, 3.5000},  {B::oval_avg, 3.3028},
                 {B::indeg_sqrt, 3.4142},    {B::hong_you, 3.5616},      {B::thm31, 3.5000},
                 {B::thm32, 3.5651},         {B::cor_sqrt_prod, 3.4495}, {B::cor_deg_sum, 3.3333},
                 {B::cor_sqrt_sum, 3.6029},  {B::cor_sum_sqrt, 3.5731}};
        return t;
    }
    if (name == "g2") {
        ReconstructionTarget t{"g2", 6};
        t.q = 4.1984;
        t.row = {{B::arc_deg_sum, 5.0000},   {B::deg_plus_avg, 4.6667},  {B::oval_avg, 4.6016},
                 {B::indeg_sqrt, 5.0000},    {B::hong_you, 4.7321},      {B::thm31, 5.5000},
                 {B::thm32, 4.7913},         {B::cor_sqrt_prod, 4.5644}, {B::cor_deg_sum, 4.6000},
                 {B::cor_sqrt_sum, 4.7956},  {B::cor_sum_sqrt, 4.7866}};
        return t;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bound comparisons

struct RemarkCheck {
    bool in_g_star = false;
    /// (cm) <= (1); set only for G* members.
    std::optional<bool> delta_plus_2_not_worse;
    /// Applicable table bounds, ascending by value (column order on ties).
    std::vector<std::pair<BoundId, double>> ranking;
    /// Smallest bound is strictly below the second smallest.
    bool strict_best = false;

    std::optional<BoundId> best() const {
        return ranking.empty() ? std::nullopt : std::optional(ranking[0].first);
    }
    std::optional<BoundId> second_best() const {
        return ranking.size() < 2 ? std::nullopt : std::optional(ranking[1].first);
    }
};

inline RemarkCheck remark_check(const Digraph& g) {
    const BoundEvaluator ev(g);
    RemarkCheck rc;
    rc.in_g_star = is_in_g_star_class(g, ev.profile(), ev.strongly_connected());
    if (rc.in_g_star) {
        rc.delta_plus_2_not_worse = *ev.delta_plus_2().value <= *ev.arc_deg_sum().value;
    }
    for (BoundId id : table_columns) {
        const BoundValue b = ev.evaluate(id);
        if (b.value) rc.ranking.emplace_back(id, *b.value);
    }
    std::stable_sort(rc.ranking.begin(), rc.ranking.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    rc.strict_best = rc.ranking.size() >= 2 && rc.ranking[0].second < rc.ranking[1].second;
    return rc;
}

}  // namespace qbound
