#include <gtest/gtest.h>

#include <algorithm>

#include "qbound/edge_list.hpp"
#include "qbound/verify.hpp"

using namespace qbound;

namespace {

Digraph read(const char* file) { return read_edge_list(std::string(QBOUND_TEST_DATA) + "/" + file); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(Corpus, DeterministicAndStronglyConnected) {
    const CorpusSpec spec{50, 3, 12, {0.2, 0.3, 0.5}, 42};
    const auto a = make_corpus(spec);
    const auto b = make_corpus(spec);
    ASSERT_EQ(a.size(), 50u);
    EXPECT_EQ(a, b);
    for (const auto& g : a) {
        EXPECT_TRUE(is_strongly_connected(g));
        EXPECT_GE(g.order(), 3u);
        EXPECT_LE(g.order(), 12u);
    }
    EXPECT_THROW(make_corpus({1, 5, 3, {0.3}, 0}), std::invalid_argument);
}

TEST(Sweep, DirectedCycles) {
    std::vector<Digraph> corpus;
    for (std::size_t n = 3; n <= 10; ++n) corpus.push_back(gen_directed_cycle(n));
    const auto rep = sweep(corpus, "directed cycles");
    EXPECT_TRUE(rep.passed());
    for (const auto& g : rep.graphs) EXPECT_NEAR(g.q, 2.0, 1e-9);
}

TEST(Sweep, StarsSatisfyEquality) {
    std::vector<Digraph> corpus;
    for (std::size_t n = 3; n <= 10; ++n) corpus.push_back(gen_bidirectional_star(n));
    const auto rep = sweep(corpus, "stars", {Invariant::equality_cases, Invariant::dominance});
    EXPECT_TRUE(rep.passed());
    for (const auto& g : rep.graphs) {
        EXPECT_NEAR(g.q, static_cast<double>(g.n), 1e-9);
        EXPECT_EQ(g.results.size(), 2u);
    }
}

TEST(Sweep, RandomCorpusPassesAndIsDeterministic) {
    const CorpusSpec spec{120, 3, 12, {0.2, 0.3, 0.5}, 7};
    const auto a = sweep(spec);
    EXPECT_TRUE(a.passed()) << (a.failures.empty() ? "" : a.failures.front().detail);
    EXPECT_EQ(a, sweep(spec));
}

TEST(Sweep, ReportsCounterexamples) {
    // Tolerances below zero turn the bracket check into a guaranteed failure
    // for a regular digraph, where q sits exactly on both row-sum ends.
    SweepOptions opt;
    opt.tol.bracket = -1.0;
    const std::vector<Digraph> corpus{gen_directed_cycle(4)};
    const auto rep = sweep(corpus, "forced", {Invariant::q_bracket}, opt);
    ASSERT_FALSE(rep.passed());
    EXPECT_EQ(rep.failures.front().invariant, Invariant::q_bracket);
    EXPECT_EQ(parse_edge_list(rep.failures.front().edge_list), corpus.front());
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
    detail::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + rng.below(3);
        const auto g = gen_random_strongly_connected(n, 0.3, rng.next());
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<Arc> arcs;
        for (const Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
        EXPECT_EQ(canonical_form(g), canonical_form(Digraph::from_arc_list(n, arcs)));
    }
    EXPECT_NE(canonical_form(gen_directed_cycle(4)), canonical_form(gen_bidirectional_star(4)));
}

TEST(Reconstruct, VisitCounts) {
    ReconstructionTarget all{"all", 4};
    all.require_strongly_connected = false;
    all.q = 100.0;  // unreachable; only counts matter
    const auto r = reconstruct(all);
    EXPECT_EQ(r.visited, 4095u);
    EXPECT_EQ(r.evaluated, 4095u);
    EXPECT_TRUE(r.matches.empty());

    for (std::size_t m : {1, 6, 9, 12}) {
        ReconstructionTarget fixed{"fixed", 4, m};
        fixed.q = 100.0;
        EXPECT_EQ(reconstruct(fixed).visited, binomial(12, m)) << m;
    }
}

TEST(Reconstruct, GStarPreset) {
    const auto t = *preset("gstar");
    const auto r = reconstruct(t);
    EXPECT_EQ(r.visited, 220u);
    ASSERT_FALSE(r.matches.empty());
    std::set<std::uint64_t> forms;
    for (const auto& m : r.matches) {
        EXPECT_EQ(m.graph.size(), 9u);
        EXPECT_TRUE(classify(m.graph).is_in_g_star_class);
        EXPECT_NEAR(m.spectral.q, 4.7321, 5e-4);
        EXPECT_TRUE(forms.insert(canonical_form(m.graph)).second);
        // Stored rows reproduce exactly.
        EXPECT_EQ(all_bounds(m.graph), m.row);
        EXPECT_EQ(spectral_radius(m.graph), m.spectral);
        const auto rc = remark_check(m.graph);
        ASSERT_TRUE(rc.delta_plus_2_not_worse.has_value());
        EXPECT_TRUE(*rc.delta_plus_2_not_worse);
    }
}

TEST(Reconstruct, G1PresetIncludesFixture) {
    const auto r = reconstruct(*preset("g1"));
    EXPECT_EQ(r.visited, 4095u);
    ASSERT_FALSE(r.matches.empty());
    const auto fixture = canonical_form(read("g1.txt"));
    EXPECT_TRUE(std::any_of(r.matches.begin(), r.matches.end(),
                            [&](const auto& m) { return canonical_form(m.graph) == fixture; }));
    for (const auto& m : r.matches) EXPECT_LE(m.max_deviation, 5e-4);
}

TEST(Reconstruct, UnreachableTargetReportsNearest) {
    ReconstructionTarget t{"zero", 4};
    t.q = 0.0;
    const auto r = reconstruct(t);
    EXPECT_TRUE(r.matches.empty());
    ASSERT_TRUE(r.nearest.has_value());
    EXPECT_GT(r.nearest->max_deviation, 0.0);
}

TEST(Reconstruct, Preconditions) {
    EXPECT_THROW(reconstruct(*preset("g2")), ReconstructionError);
    ReconstructionTarget bad{"bad", 4};
    bad.tolerance = 0.0;
    EXPECT_THROW(reconstruct(bad), ReconstructionError);
    ReconstructionTarget generic{"generic", 4};
    generic.row = {{BoundId::generic_f, 1.0}};
    EXPECT_THROW(reconstruct(generic), ReconstructionError);
    EXPECT_FALSE(preset("g3").has_value());
}

TEST(BoundOrdering, G1) {
    const auto rc = remark_check(read("g1.txt"));
    // Maximum outdegree 2 >= (6 - 3) / 2 and vertex 1 points at vertex 2 of outdegree 2.
    EXPECT_TRUE(rc.in_g_star);
    ASSERT_TRUE(rc.delta_plus_2_not_worse.has_value());
    EXPECT_TRUE(*rc.delta_plus_2_not_worse);
    EXPECT_EQ(rc.best(), BoundId::oval_avg);
    EXPECT_EQ(rc.second_best(), BoundId::cor_deg_sum);
    EXPECT_TRUE(rc.strict_best);
    EXPECT_EQ(rc.ranking.size(), 11u);
}

TEST(Reconstruct, G2NearMissDeviatesOnlyInOneColumn) {
    const auto g = read("g2_near.txt");
    const auto t = *preset("g2");
    const auto devs = deviations(t, spectral_radius(g).q, all_bounds(g));
    ASSERT_EQ(devs.size(), 12u);
    for (const auto& d : devs) {
        if (d.column == "(32)") {
            EXPECT_GT(d.abs_deviation, 0.1);
        } else {
            EXPECT_LE(d.abs_deviation, 5e-4) << d.column;
        }
    }
}
