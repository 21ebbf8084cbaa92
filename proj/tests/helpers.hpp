#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "cnhood/blocks.hpp"
#include "cnhood/graph.hpp"
#include "cnhood/rational.hpp"

namespace cnh::test {

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

// K4 minus the edge 2-3.
inline Graph diamond_graph() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Triangles 0,1,2 and 2,3,4 glued at vertex 2.
inline Graph bowtie_graph() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

inline Rational frac(long long p, long long q) { return Rational(p, q); }

inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Independent quadratic-scan oracle for common neighborhoods.
inline std::vector<int> brute_common_neighbors(const Graph& g, int u, int v) {
    std::vector<int> out;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) out.push_back(w);
    }
    return out;
}

// Number of connected components among the vertices != removed.
inline int components_without_vertex(const Graph& g, int removed) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (start == removed || seen[start]) continue;
        ++components;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (y != removed && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return components;
}

// Brute-force spanning tree count: every (n-1)-subset of edges that connects
// all vertices. Only sensible for tiny graphs.
inline long long brute_spanning_tree_count(const Graph& g) {
    const auto edges = g.edges();
    const int n = g.vertex_count();
    if (n <= 1) return 1;
    const auto m = static_cast<int>(edges.size());
    long long count = 0;
    std::vector<int> pick(static_cast<std::size_t>(n - 1));
    std::function<void(int, int)> choose = [&](int from, int depth) {
        if (depth == n - 1) {
            std::vector<Edge> subset;
            for (int idx : pick) subset.push_back(edges[static_cast<std::size_t>(idx)]);
            if (is_connected(Graph::from_edges(n, subset))) ++count;
            return;
        }
        for (int i = from; i < m; ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    return count;
}

}  // namespace cnh::test
