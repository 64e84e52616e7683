#pragma once

// Simple digraphs (no loops, no multiarcs, at least one arc) with the degree
// statistics used by the signless Laplacian bounds.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qbound {

using Vertex = std::size_t;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class DigraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable digraph on vertices 0..n-1. Arcs are kept sorted
/// lexicographically, which is also the tie-break order for witnesses.
class Digraph {
public:
    static Digraph from_arc_list(std::size_t n, std::span<const Arc> pairs) {
        if (n == 0) {
            throw DigraphError("digraph needs at least one vertex");
        }
        std::vector<Arc> arcs(pairs.begin(), pairs.end());
        for (const Arc& a : arcs) {
            if (a.tail >= n || a.head >= n) {
                throw DigraphError("arc (" + std::to_string(a.tail) + ", " +
                                   std::to_string(a.head) +
                                   ") has a vertex out of range for n = " +
                                   std::to_string(n));
            }
            if (a.tail == a.head) {
                throw DigraphError("loop at vertex " + std::to_string(a.tail));
            }
        }
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        if (arcs.empty()) {
            throw DigraphError("digraph needs at least one arc");
        }
        return Digraph(n, std::move(arcs));
    }

    static Digraph from_arc_list(std::size_t n, std::initializer_list<Arc> pairs) {
        return from_arc_list(n, std::span<const Arc>(pairs.begin(), pairs.size()));
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Out-neighbours of v in increasing order.
    std::span<const Vertex> out(Vertex v) const { return out_[v]; }
    /// In-neighbours of v in increasing order.
    std::span<const Vertex> in(Vertex v) const { return in_[v]; }

    std::size_t outdeg(Vertex v) const { return out_[v].size(); }
    std::size_t indeg(Vertex v) const { return in_[v].size(); }

    bool has_arc(Vertex u, Vertex v) const {
        return std::binary_search(out_[u].begin(), out_[u].end(), v);
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    Digraph(std::size_t n, std::vector<Arc> arcs)
        : n_(n), arcs_(std::move(arcs)), out_(n), in_(n) {
        for (const Arc& a : arcs_) {
            out_[a.tail].push_back(a.head);
            in_[a.head].push_back(a.tail);
        }
        for (auto& l : in_) {
            std::sort(l.begin(), l.end());
        }
    }

    std::size_t n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

/// Per-vertex degree data. avg_two_outdeg[i] is empty where outdeg[i] == 0.
struct DegreeProfile {
    std::vector<std::size_t> outdeg;
    std::vector<std::size_t> indeg;
    std::vector<std::size_t> two_outdeg;
    std::vector<std::optional<double>> avg_two_outdeg;
    std::size_t max_outdeg = 0;
    std::size_t min_outdeg = 0;
    std::size_t arc_count = 0;
};

inline DegreeProfile degree_profile(const Digraph& g) {
    const std::size_t n = g.order();
    DegreeProfile p;
    p.outdeg.resize(n);
    p.indeg.resize(n);
    p.two_outdeg.assign(n, 0);
    p.avg_two_outdeg.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        p.outdeg[v] = g.outdeg(v);
        p.indeg[v] = g.indeg(v);
    }
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.out(v)) {
            p.two_outdeg[v] += p.outdeg[w];
        }
        if (p.outdeg[v] > 0) {
            p.avg_two_outdeg[v] = static_cast<double>(p.two_outdeg[v]) /
                                  static_cast<double>(p.outdeg[v]);
        }
    }
    p.max_outdeg = *std::max_element(p.outdeg.begin(), p.outdeg.end());
    p.min_outdeg = *std::min_element(p.outdeg.begin(), p.outdeg.end());
    p.arc_count = g.size();
    return p;
}

/// Strongly connected components. `components` is in reverse topological
/// order of the condensation: every arc (u, v) has
/// component_of[u] >= component_of[v].
struct SccDecomposition {
    std::vector<std::size_t> component_of;
    std::vector<std::vector<Vertex>> components;
};

// Iterative Tarjan; components are emitted sinks first.
inline SccDecomposition scc(const Digraph& g) {
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    const std::size_t n = g.order();
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next child)
    SccDecomposition out;
    out.component_of.assign(n, 0);
    std::size_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            const auto succ = g.out(v);
            if (child < succ.size()) {
                const Vertex w = succ[child++];
                if (index[w] == unvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component_of[w] = out.components.size();
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.components.push_back(std::move(comp));
            }
            const Vertex finished = v;
            call.pop_back();
            if (!call.empty()) {
                Vertex parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return out;
}

inline bool is_strongly_connected(const Digraph& g) {
    return scc(g).components.size() == 1;
}

struct Classification {
    bool is_strongly_connected = false;
    bool is_regular = false;
    bool is_directed_cycle = false;
    bool is_bidirectional_star = false;
    bool is_bipartite_semiregular = false;
    bool is_in_g_star_class = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

namespace detail {

inline bool is_symmetric(const Digraph& g) {
    return std::all_of(g.arcs().begin(), g.arcs().end(),
                       [&](const Arc& a) { return g.has_arc(a.head, a.tail); });
}

inline bool bidirectional_star(const Digraph& g) {
    const std::size_t n = g.order();
    if (n < 2 || g.size() != 2 * (n - 1) || !is_symmetric(g)) return false;
    for (Vertex c = 0; c < n; ++c) {
        if (g.outdeg(c) == n - 1) {
            // Every arc must touch the centre.
            return std::all_of(g.arcs().begin(), g.arcs().end(), [&](const Arc& a) {
                return a.tail == c || a.head == c;
            });
        }
    }
    return false;
}

// Symmetric arc set, bipartite underlying graph, and outdegree constant on
// each side of the bipartition (the same unordered pair {r, s} in every
// connected component). Isolated vertices are not allowed.
inline bool bipartite_semiregular(const Digraph& g) {
    const std::size_t n = g.order();
    if (!is_symmetric(g)) return false;
    std::vector<int> side(n, -1);
    std::optional<std::pair<std::size_t, std::size_t>> pair_seen;
    for (Vertex root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        if (g.outdeg(root) == 0) return false;
        std::optional<std::size_t> deg[2];
        std::vector<Vertex> queue{root};
        side[root] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            auto& d = deg[side[v]];
            if (!d) {
                d = g.outdeg(v);
            } else if (*d != g.outdeg(v)) {
                return false;
            }
            for (Vertex w : g.out(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
        if (!deg[1]) return false;
        auto p = std::minmax(*deg[0], *deg[1]);
        if (pair_seen && *pair_seen != std::pair(p.first, p.second)) return false;
        pair_seen = std::pair(p.first, p.second);
    }
    return true;
}

}  // namespace detail

/// Membership in G*(m, n, (m-(n-1))/2, 1): strongly connected,
/// 2*max_outdeg >= m-(n-1), min_outdeg == 1, and some vertex of maximum
/// outdegree has an out-neighbour of outdegree >= 2.
inline bool is_in_g_star_class(const Digraph& g, const DegreeProfile& p, bool strongly_connected) {
    if (!strongly_connected || p.min_outdeg != 1) return false;
    const auto n = static_cast<long long>(g.order());
    const auto m = static_cast<long long>(p.arc_count);
    if (2 * static_cast<long long>(p.max_outdeg) < m - (n - 1)) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (p.outdeg[v] != p.max_outdeg) continue;
        for (Vertex w : g.out(v)) {
            if (p.outdeg[w] >= 2) return true;
        }
    }
    return false;
}

inline Classification classify(const Digraph& g) {
    const DegreeProfile p = degree_profile(g);
    Classification c;
    c.is_strongly_connected = is_strongly_connected(g);
    c.is_regular = p.min_outdeg == p.max_outdeg;
    c.is_directed_cycle = c.is_strongly_connected && p.max_outdeg == 1 && p.min_outdeg == 1;
    c.is_bidirectional_star = detail::bidirectional_star(g);
    c.is_bipartite_semiregular = detail::bipartite_semiregular(g);
    c.is_in_g_star_class = is_in_g_star_class(g, p, c.is_strongly_connected);
    return c;
}

}  // namespace qbound
