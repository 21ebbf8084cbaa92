#include "cnhood/electrical.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cnh {

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

IntMatrix laplacian(const Graph& g) {
    const int n = g.vertex_count();
    IntMatrix m(n, n);
    for (int u = 0; u < n; ++u) {
        m.at(u, u) = g.degree(u);
        for (int v : g.neighbors(u)) m.at(u, v) = -1;
    }
    return m;
}

namespace {

// Division known to be exact; a nonzero remainder would mean the
// fraction-free elimination broke its own invariant.
BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

// One-step fraction-free Gauss-Jordan on [A | I]. Ends with d*I on the left
// and M = d * A^{-1} on the right; returns (M, d). Row swaps fold into d's
// sign, so M/d is the true inverse either way.
std::pair<std::vector<BigInt>, BigInt> fraction_free_inverse(const IntMatrix& a) {
    const int r = a.rows();
    IntMatrix w(r, 2 * r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, r + i) = 1;
    }
    BigInt prev = 1;
    for (int k = 0; k < r; ++k) {
        if (w.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < r; ++i) {
                if (w.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == -1) throw std::logic_error("fraction_free_inverse: singular matrix");
            w.swap_rows(k, pivot);
        }
        for (int i = 0; i < r; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * r; ++j) {
                if (j == k) continue;
                w.at(i, j) = exact_div(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    std::vector<BigInt> inverse(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) inverse[static_cast<std::size_t>(i) * r + j] = w.at(i, r + j);
    }
    return {std::move(inverse), r == 0 ? BigInt(1) : prev};
}

IntMatrix reduced_laplacian(const Graph& g) {
    const int r = std::max(0, g.vertex_count() - 1);
    IntMatrix m(r, r);
    for (int u = 0; u < r; ++u) {
        m.at(u, u) = g.degree(u);
        for (int v : g.neighbors(u)) {
            if (v < r) m.at(u, v) = -1;
        }
    }
    return m;
}

}  // namespace

BigInt bareiss_determinant(IntMatrix m) {
    const int r = m.rows();
    if (r == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < r; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < r; ++i) {
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == -1) return 0;
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < r; ++j)
                m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign == 1 ? prev : -prev;
}

ResistanceSolver::ResistanceSolver(const Graph& g)
    : n_(g.vertex_count()), ground_(g.vertex_count() - 1) {
    if (!is_connected(g)) throw std::domain_error("ResistanceSolver: graph is disconnected");
    auto [inv, det] = fraction_free_inverse(reduced_laplacian(g));
    if (n_ > 1 && det <= 0)
        throw std::logic_error("ResistanceSolver: reduced Laplacian must be positive definite");
    inv_ = std::move(inv);
    det_ = std::move(det);
}

Rational ResistanceSolver::resistance(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("resistance: vertex out of range");
    if (u == v) throw std::invalid_argument("resistance: vertices must be distinct");
    const int r = n_ - 1;
    auto entry = [&](int i, int j) -> const BigInt& {
        return inv_[static_cast<std::size_t>(i) * r + j];
    };
    BigInt quad;
    if (u == ground_) {
        quad = entry(v, v);
    } else if (v == ground_) {
        quad = entry(u, u);
    } else {
        quad = entry(u, u) + entry(v, v) - entry(u, v) - entry(v, u);
    }
    return Rational(quad, det_);
}

FloatResistanceSolver::FloatResistanceSolver(const Graph& g)
    : n_(g.vertex_count()), ground_(g.vertex_count() - 1) {
    if (!is_connected(g)) throw std::domain_error("FloatResistanceSolver: graph is disconnected");
    const int r = std::max(0, n_ - 1);
    Eigen::MatrixXd reduced = Eigen::MatrixXd::Zero(r, r);
    for (int u = 0; u < r; ++u) {
        reduced(u, u) = g.degree(u);
        for (int v : g.neighbors(u)) {
            if (v < r) reduced(u, v) = -1.0;
        }
    }
    const Eigen::MatrixXd inverse = reduced.ldlt().solve(Eigen::MatrixXd::Identity(r, r));
    inv_.assign(static_cast<std::size_t>(r) * r, 0.0);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) inv_[static_cast<std::size_t>(i) * r + j] = inverse(i, j);
    }
}

double FloatResistanceSolver::resistance(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("resistance: vertex out of range");
    if (u == v) throw std::invalid_argument("resistance: vertices must be distinct");
    const int r = n_ - 1;
    auto entry = [&](int i, int j) { return inv_[static_cast<std::size_t>(i) * r + j]; };
    if (u == ground_) return entry(v, v);
    if (v == ground_) return entry(u, u);
    return entry(u, u) + entry(v, v) - entry(u, v) - entry(v, u);
}

Rational effective_resistance_exact(const Graph& g, int u, int v) {
    return ResistanceSolver(g).resistance(u, v);
}

double effective_resistance_float(const Graph& g, int u, int v) {
    return FloatResistanceSolver(g).resistance(u, v);
}

Backend default_backend(int n) { return n <= kExactBackendLimit ? Backend::exact : Backend::floating; }

ResistanceReport forster_check(const Graph& g, Backend backend) {
    if (g.vertex_count() < 1 || !is_connected(g))
        throw std::domain_error("forster_check: requires a connected graph with n >= 1");
    ResistanceReport report;
    report.backend = backend;
    report.expected_total = g.vertex_count() - 1;
    if (backend == Backend::exact) {
        const ResistanceSolver solver(g);
        for (const auto& [u, v] : g.edges()) {
            Rational r = solver.resistance(u, v);
            report.total_exact += r;
            report.per_edge_exact.emplace_back(u, v, std::move(r));
        }
        report.identity_holds = report.total_exact == report.expected_total;
    } else {
        const FloatResistanceSolver solver(g);
        for (const auto& [u, v] : g.edges()) {
            const double r = solver.resistance(u, v);
            report.total_float += r;
            report.per_edge_float.emplace_back(u, v, r);
        }
        report.residual = std::abs(report.total_float - report.expected_total);
        report.identity_holds = report.residual < kFloatTolerance;
    }
    return report;
}

Rational resistance_upper_bound(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("resistance_upper_bound: uv must be an edge");
    const auto k = static_cast<long>(common_neighbors(g, u, v).size());
    return Rational(2, k + 2);  // 1/(k/2 + 1)
}

Eq1Report check_bound_eq1(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("check_bound_eq1: graph is disconnected");
    const ResistanceSolver solver(g);
    Eq1Report report;
    for (const auto& [u, v] : g.edges()) {
        Eq1Entry entry;
        entry.u = u;
        entry.v = v;
        entry.resistance = solver.resistance(u, v);
        entry.bound = resistance_upper_bound(g, u, v);
        entry.strict = entry.resistance < entry.bound;
        report.all_hold = report.all_hold && entry.resistance <= entry.bound;
        report.any_strict = report.any_strict || entry.strict;
        report.per_edge.push_back(std::move(entry));
    }
    return report;
}

Theorem3Bound theorem3_resistance_bound(const Graph& g, int u, int v, int ell, int path_cap) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("theorem3_resistance_bound: uv must be an edge");
    const PathPacking packing = path_packing(g, u, v, ell, path_cap);
    Theorem3Bound out;
    out.resistance = effective_resistance_exact(g, u, v);
    out.bound = Rational(ell, ell + packing.value);  // 1/(1 + P/ell)
    out.holds = out.resistance <= out.bound;
    return out;
}

BigInt spanning_tree_count(const Graph& g) {
    if (g.vertex_count() <= 1) return 1;
    return bareiss_determinant(reduced_laplacian(g));
}

Rational resistance_via_spanning_trees(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("resistance_via_spanning_trees: vertices must differ");
    if (!is_connected(g))
        throw std::domain_error("resistance_via_spanning_trees: graph is disconnected");

    const BigInt total = spanning_tree_count(g);

    // Contract v into u. Weighted Laplacian with integer multiplicities: the
    // merged vertex picks up parallel edges, the uv loop disappears.
    const int n = g.vertex_count();
    auto relabel = [&](int x) { return x - (x > v ? 1 : 0); };
    const int cn = n - 1;
    IntMatrix weights(cn, cn);
    for (const auto& [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        const int x = relabel(a == v ? u : a);
        const int y = relabel(b == v ? u : b);
        weights.at(x, y) += 1;
        weights.at(y, x) += 1;
    }
    if (cn <= 1) return Rational(1, total);
    IntMatrix reduced(cn - 1, cn - 1);
    for (int i = 0; i < cn - 1; ++i) {
        BigInt degree = 0;
        for (int j = 0; j < cn; ++j) degree += weights.at(i, j);
        reduced.at(i, i) = degree;
        for (int j = 0; j < cn - 1; ++j) {
            if (j != i) reduced.at(i, j) = -weights.at(i, j);
        }
    }
    return Rational(bareiss_determinant(std::move(reduced)), total);
}

}  // namespace cnh
