#pragma once

// Deterministic digraph families used by the equality-case suites and sweeps.

#include <cstdint>
#include <string>
#include <vector>

#include "qbound/digraph.hpp"

namespace qbound {

inline Digraph gen_directed_cycle(std::size_t n) {
    if (n < 2) throw DigraphError("directed cycle needs n >= 2");
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
    return Digraph::from_arc_list(n, arcs);
}

inline Digraph gen_bidirectional_complete(std::size_t n) {
    if (n < 2) throw DigraphError("complete digraph needs n >= 2");
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return Digraph::from_arc_list(n, arcs);
}

/// Star K_{1,n-1} with every edge doubled; vertex 0 is the centre.
inline Digraph gen_bidirectional_star(std::size_t n) {
    if (n < 3) throw DigraphError("bidirectional star needs n >= 3");
    std::vector<Arc> arcs;
    for (Vertex v = 1; v < n; ++v) {
        arcs.push_back({0, v});
        arcs.push_back({v, 0});
    }
    return Digraph::from_arc_list(n, arcs);
}

/// Bidirected bipartite digraph with parts X = {0..p-1} and Y = {p..p+q-1}.
/// Each X vertex has outdegree r and each Y vertex outdegree s. X vertex i
/// is joined to the r consecutive Y vertices starting at i*r (mod q), which
/// hits every Y vertex exactly s times when p*r == q*s.
inline Digraph gen_bipartite_semiregular(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    if (p == 0 || q == 0 || r == 0 || s == 0 || r > q || s > p || p * r != q * s) {
        throw DigraphError("infeasible bipartite parameters (p=" + std::to_string(p) +
                           ", q=" + std::to_string(q) + ", r=" + std::to_string(r) +
                           ", s=" + std::to_string(s) + "); need p*r == q*s, r <= q, s <= p");
    }
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < p; ++i) {
        for (std::size_t t = 0; t < r; ++t) {
            const Vertex y = p + (i * r + t) % q;
            arcs.push_back({i, y});
            arcs.push_back({y, i});
        }
    }
    return Digraph::from_arc_list(p + q, arcs);
}

namespace detail {

// SplitMix64 finaliser; used to derive independent sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// xoshiro256** seeded through SplitMix64. Written out so that output is
// identical across standard libraries (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept {
        for (auto& word : s_) {
            word = mix64(seed);
            seed += 0x9e3779b97f4a7c15ULL;
        }
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, bound), rejection sampled.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
        std::uint64_t x;
        do {
            x = next();
        } while (x < limit);
        return x % bound;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4]{};
};

}  // namespace detail

/// Random Hamiltonian cycle (Fisher-Yates over the seeded generator) plus
/// every other ordered pair independently with probability arc_probability.
inline Digraph gen_random_strongly_connected(std::size_t n, double arc_probability, std::uint64_t seed) {
    if (n < 2) throw DigraphError("random strongly connected digraph needs n >= 2");
    if (!(arc_probability >= 0.0 && arc_probability <= 1.0)) {
        throw DigraphError("arc probability must lie in [0, 1]");
    }
    detail::Rng rng(seed);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.below(i + 1)]);
    }
    std::vector<Arc> arcs;
    std::vector<char> in_cycle(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Arc a{perm[i], perm[(i + 1) % n]};
        arcs.push_back(a);
        in_cycle[a.tail * n + a.head] = 1;
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v || in_cycle[u * n + v]) continue;
            if (rng.unit() < arc_probability) arcs.push_back({u, v});
        }
    }
    return Digraph::from_arc_list(n, arcs);
}

}  // namespace qbound
