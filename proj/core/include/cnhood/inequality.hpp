#pragma once

#include <optional>
#include <vector>

#include "cnhood/graph.hpp"
#include "cnhood/rational.hpp"

namespace cnh {

// Verdict for Σ_{uv∈E} 1/(|N(u)∩N(v)|+2) >= (n-1)/2 and its generalization
// Σ_{uv∈E} 1/(P(uv,ℓ)+ℓ) >= (n-1)/ℓ. All comparisons are exact rationals.
// `consistent` (equality <=> block graph) is only defined for the ℓ = 2
// case; the equality cases for larger ℓ have no known characterization.
struct TheoremReport {
    Rational sum;
    Rational bound;
    bool holds = false;
    bool equality = false;
    bool block_graph = false;
    std::optional<bool> consistent;
};

// Σ over unordered edges of 1/(|N(u)∩N(v)|+2). Defined for any simple graph.
Rational common_neighbor_sum(const Graph& g);

// Exact check of the edge inequality against (n-1)/2, with the block-graph
// equality characterization. Requires a connected graph with n >= 1
// (std::domain_error otherwise).
TheoremReport verify_theorem1(const Graph& g);

// Σ over vertices of 1/(deg(v)+1); numerically below the independence number.
Rational caro_wei_sum(const Graph& g);

// A maximum set of internally vertex-disjoint u–v paths whose edge counts
// lie in [2, ell]. `value` is exact; `witness` realizes it, one vertex
// sequence u..v per path. The direct edge uv never counts.
struct PathPacking {
    int u = 0;
    int v = 0;
    int ell = 2;
    int value = 0;
    std::vector<std::vector<int>> witness;
};

inline constexpr int kDefaultPathCap = 100000;

// Enumerates all qualifying simple paths (ResourceError past path_cap), then
// finds an exact maximum packing by branch and bound on the conflict
// structure (two paths conflict iff they share an internal vertex).
PathPacking path_packing(const Graph& g, int u, int v, int ell, int path_cap = kDefaultPathCap);

// Σ over edges of 1/(P(uv,ell)+ell).
Rational generalized_sum(const Graph& g, int ell, int path_cap = kDefaultPathCap);

// Exact check of the generalized inequality against (n-1)/ell. With ell = 2
// this coincides with verify_theorem1, since P(uv,2) = |N(u)∩N(v)|.
TheoremReport verify_generalized(const Graph& g, int ell, int path_cap = kDefaultPathCap);

}  // namespace cnh
