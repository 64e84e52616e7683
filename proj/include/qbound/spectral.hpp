#pragma once

// Signless Laplacian Q(G) = D(G) + A(G), its spectral radius, and the
// row-sum and oval inclusion checks that bracket it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbound/digraph.hpp"

namespace qbound {

/// Row-major dense square matrix.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t dim() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    double row_sum(std::size_t i) const {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
        return s;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_;
    std::vector<double> data_;
};

using SignlessLaplacian = DenseMatrix;

inline SignlessLaplacian build_q(const Digraph& g) {
    SignlessLaplacian q(g.order());
    for (Vertex v = 0; v < g.order(); ++v) q(v, v) = static_cast<double>(g.outdeg(v));
    for (const Arc& a : g.arcs()) q(a.tail, a.head) = 1.0;
    return q;
}

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectralOptions {
    /// Stop once the Collatz-Wielandt enclosure is narrower than
    /// tol * max(1, upper estimate).
    double tol = 1e-12;
    std::size_t max_iter = 1'000'000;
};

struct ComponentRadius {
    std::size_t component = 0;
    double radius = 0.0;

    friend bool operator==(const ComponentRadius&, const ComponentRadius&) = default;
};

struct SpectralResult {
    double q = 0.0;
    /// ||Qx - qx||_inf / ||x||_inf for the returned block eigenvector estimates (worst block).
    double residual = 0.0;
    std::size_t iterations = 0;
    /// Indexed like SccDecomposition::components.
    std::vector<ComponentRadius> per_component;

    friend bool operator==(const SpectralResult&, const SpectralResult&) = default;
};

namespace detail {

struct BlockRadius {
    double radius;
    double residual;
    std::size_t iterations;
};

// Power iteration on the principal block of Q indexed by `vertices`, where
// the block is irreducible with a positive diagonal (hence primitive). The
// iterate stays positive, so min/max of (Qx)_i / x_i enclose the radius.
inline BlockRadius block_power_iteration(const Digraph& g, std::span<const Vertex> vertices,
                                         const std::vector<std::size_t>& local_index,
                                         const std::vector<std::size_t>& component_of,
                                         std::size_t component, const SpectralOptions& opt) {
    const std::size_t k = vertices.size();
    std::vector<double> x(k, 1.0), y(k);
    for (std::size_t it = 1; it <= opt.max_iter; ++it) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        double ymax = 0.0;
        for (std::size_t a = 0; a < k; ++a) {
            const Vertex v = vertices[a];
            double s = static_cast<double>(g.outdeg(v)) * x[a];
            for (Vertex w : g.out(v)) {
                if (component_of[w] == component) s += x[local_index[w]];
            }
            y[a] = s;
            const double ratio = s / x[a];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            ymax = std::max(ymax, s);
        }
        if (hi - lo <= opt.tol * std::max(1.0, hi)) {
            const double q = 0.5 * (lo + hi);
            double defect = 0.0, xmax = 0.0;
            for (std::size_t a = 0; a < k; ++a) {
                defect = std::max(defect, std::abs(y[a] - q * x[a]));
                xmax = std::max(xmax, std::abs(x[a]));
            }
            return {q, defect / xmax, it};
        }
        for (std::size_t a = 0; a < k; ++a) x[a] = y[a] / ymax;
    }
    throw ConvergenceError("power iteration did not converge within " +
                           std::to_string(opt.max_iter) + " iterations (tol " +
                           std::to_string(opt.tol) + ")");
}

}  // namespace detail

/// Spectral radius of Q(G). Q is block triangular over the strongly
/// connected components, so q is the largest radius among the diagonal
/// blocks D_S + A[S] (D_S keeps the full-graph outdegrees). Each block of
/// size >= 2 is primitive and handled by power iteration; singleton blocks
/// contribute their diagonal entry.
inline SpectralResult spectral_radius(const Digraph& g, const SpectralOptions& opt = {}) {
    if (!(opt.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (opt.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");

    const SccDecomposition d = scc(g);
    std::vector<std::size_t> local_index(g.order());
    for (const auto& comp : d.components)
        for (std::size_t a = 0; a < comp.size(); ++a) local_index[comp[a]] = a;

    SpectralResult r;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        const auto& comp = d.components[c];
        double radius;
        if (comp.size() == 1) {
            radius = static_cast<double>(g.outdeg(comp.front()));
        } else {
            const auto b = detail::block_power_iteration(g, comp, local_index, d.component_of, c, opt);
            radius = b.radius;
            r.residual = std::max(r.residual, b.residual);
            r.iterations += b.iterations;
        }
        r.per_component.push_back({c, radius});
        r.q = std::max(r.q, radius);
    }
    return r;
}

struct RowSumBracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// For a nonnegative matrix the spectral radius lies between the smallest
/// and largest row sums.
inline RowSumBracket row_sum_bracket(const DenseMatrix& m) {
    RowSumBracket b{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t i = 0; i < m.dim(); ++i) {
        const double s = m.row_sum(i);
        b.lower = std::min(b.lower, s);
        b.upper = std::max(b.upper, s);
    }
    return b;
}

enum class SimilarityKind {
    plain_q,      ///< Q itself
    deg_inverse,  ///< D^-1 Q D
    deg_sqrt,     ///< D^-1/2 Q D^1/2
};

/// Matrix similar to Q(G). The D-scaled kinds require every outdegree to be
/// positive.
inline DenseMatrix similarity_matrix(const Digraph& g, SimilarityKind kind) {
    DenseMatrix m = build_q(g);
    if (kind == SimilarityKind::plain_q) return m;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.outdeg(v) == 0) {
            throw DigraphError("vertex " + std::to_string(v) +
                               " has outdegree 0; D is not invertible");
        }
    }
    for (const Arc& a : g.arcs()) {
        const double ratio = static_cast<double>(g.outdeg(a.head)) / static_cast<double>(g.outdeg(a.tail));
        m(a.tail, a.head) = kind == SimilarityKind::deg_inverse ? ratio : std::sqrt(ratio);
    }
    return m;
}

inline std::vector<double> similarity_row_sums(const Digraph& g, SimilarityKind kind) {
    const DenseMatrix m = similarity_matrix(g, kind);
    std::vector<double> sums(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) sums[i] = m.row_sum(i);
    return sums;
}

/// Cassini oval {z : |z - a_ii| |z - a_jj| <= r_i r_j} for an off-diagonal
/// nonzero (i, j) of P = D^-1/2 Q D^1/2.
struct OvalRegion {
    Arc arc;
    double center_i = 0.0;
    double center_j = 0.0;
    double radius_i = 0.0;
    double radius_j = 0.0;

    bool contains(double z, double slack = 0.0) const {
        return std::abs(z - center_i) * std::abs(z - center_j) <= radius_i * radius_j + slack;
    }
};

inline std::vector<OvalRegion> oval_regions(const Digraph& g) {
    const DenseMatrix p = similarity_matrix(g, SimilarityKind::deg_sqrt);
    std::vector<double> deleted(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) deleted[i] = p.row_sum(i) - p(i, i);
    std::vector<OvalRegion> ovals;
    ovals.reserve(g.size());
    for (const Arc& a : g.arcs()) {
        ovals.push_back({a, p(a.tail, a.tail), p(a.head, a.head), deleted[a.tail], deleted[a.head]});
    }
    return ovals;
}

struct OvalContainment {
    bool contained = false;
    std::optional<Arc> witness;
};

/// Whether the real point `value` lies in the union of the arc ovals of
/// P = D^-1/2 Q D^1/2. `slack` is an absolute allowance on the product
/// inequality for approximate inputs; 0 is the exact test.
inline OvalContainment oval_containment(const Digraph& g, double value, double slack = 0.0) {
    for (const OvalRegion& o : oval_regions(g)) {
        if (o.contains(value, slack)) return {true, o.arc};
    }
    return {};
}

}  // namespace qbound
