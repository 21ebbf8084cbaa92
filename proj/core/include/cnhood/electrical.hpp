#pragma once

#include <tuple>
#include <vector>

#include "cnhood/graph.hpp"
#include "cnhood/inequality.hpp"
#include "cnhood/rational.hpp"

namespace cnh {

// Dense integer matrix used for Laplacians and fraction-free elimination.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    void swap_rows(int i, int j);

private:
    int rows_, cols_;
    std::vector<BigInt> a_;
};

// Unit-resistance network Laplacian: degrees on the diagonal, -1 per edge.
IntMatrix laplacian(const Graph& g);

// Exact determinant by Bareiss fraction-free elimination; consumes its input.
BigInt bareiss_determinant(IntMatrix m);

enum class Backend { exact, floating };

// Exact effective resistances. Grounds the largest-index vertex, inverts the
// reduced Laplacian once by one-step fraction-free Gauss-Jordan elimination,
// then answers any pair from the quadratic form (e_u - e_v)^T L^+ (e_u - e_v).
// Construction throws std::domain_error on disconnected input.
class ResistanceSolver {
public:
    explicit ResistanceSolver(const Graph& g);
    Rational resistance(int u, int v) const;
    int vertex_count() const { return n_; }

private:
    int n_, ground_;
    BigInt det_;
    std::vector<BigInt> inv_;  // (n-1) x (n-1), inv_/det_ = reduced inverse
};

// Double-precision counterpart (dense symmetric solve of the same system).
class FloatResistanceSolver {
public:
    explicit FloatResistanceSolver(const Graph& g);
    double resistance(int u, int v) const;

private:
    int n_, ground_;
    std::vector<double> inv_;
};

Rational effective_resistance_exact(const Graph& g, int u, int v);
double effective_resistance_float(const Graph& g, int u, int v);

// Exact arithmetic is the default up to this size; beyond it the floating
// backend takes over unless explicitly requested.
inline constexpr int kExactBackendLimit = 64;
Backend default_backend(int n);

// Absolute tolerance for floating-mode residuals and backend agreement.
inline constexpr double kFloatTolerance = 1e-9;

// Per-edge effective resistances and their sum, which equals n-1 in every
// connected graph. Exact mode checks the identity exactly; floating mode
// reports the residual.
struct ResistanceReport {
    Backend backend = Backend::exact;
    std::vector<std::tuple<int, int, Rational>> per_edge_exact;
    std::vector<std::tuple<int, int, double>> per_edge_float;
    Rational total_exact;
    double total_float = 0.0;
    int expected_total = 0;  // n-1
    bool identity_holds = false;
    double residual = 0.0;  // floating backend only
};

ResistanceReport forster_check(const Graph& g, Backend backend);

// Right side of the parallel-path resistance bound for an edge uv with
// k common neighbors: 1/(k/2 + 1). Requires uv in E.
Rational resistance_upper_bound(const Graph& g, int u, int v);

struct Eq1Entry {
    int u = 0, v = 0;
    Rational resistance;
    Rational bound;
    bool strict = false;
};

// Exact per-edge check R_{u,v} <= 1/(k/2+1). The bound always holds, and it
// is strict on at least one edge exactly when the graph is not a block graph.
struct Eq1Report {
    std::vector<Eq1Entry> per_edge;
    bool all_hold = true;
    bool any_strict = false;
};

Eq1Report check_bound_eq1(const Graph& g);

// R_{u,v} <= 1/(1 + P(uv,ell)/ell), with P from the path packing.
struct Theorem3Bound {
    Rational resistance;
    Rational bound;
    bool holds = false;
};

Theorem3Bound theorem3_resistance_bound(const Graph& g, int u, int v, int ell,
                                        int path_cap = kDefaultPathCap);

// Matrix-tree count: any cofactor of the Laplacian. 0 for disconnected
// graphs, 1 for n <= 1.
BigInt spanning_tree_count(const Graph& g);

// Independent oracle for effective resistance: identify u and v (dropping
// the uv loop, keeping parallel edges as weights) and return
// tau(G/uv) / tau(G). Equals effective_resistance_exact identically.
Rational resistance_via_spanning_trees(const Graph& g, int u, int v);

}  // namespace cnh
