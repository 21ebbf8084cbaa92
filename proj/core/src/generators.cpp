#include "cnhood/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "cnhood/blocks.hpp"
#include "cnhood/errors.hpp"
#include "cnhood/rng.hpp"

namespace cnh {

GenModel parse_gen_model(std::string_view name) {
    std::string canon(name);
    std::replace(canon.begin(), canon.end(), '-', '_');
    if (canon == "erdos_renyi") return GenModel::erdos_renyi;
    if (canon == "random_tree") return GenModel::random_tree;
    if (canon == "block_graph") return GenModel::block_graph;
    throw std::invalid_argument("unknown generator model '" + std::string(name) +
                                "' (expected erdos-renyi, random-tree or block-graph)");
}

std::string to_string(GenModel model) {
    switch (model) {
        case GenModel::erdos_renyi: return "erdos_renyi";
        case GenModel::random_tree: return "random_tree";
        case GenModel::block_graph: return "block_graph";
    }
    return "?";
}

namespace {

Graph gen_erdos_renyi(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p must lie in [0, 1]");
    for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng.unit() < p) edges.emplace_back(u, v);
            }
        }
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
    throw ResourceError("erdos_renyi: no connected sample after " +
                        std::to_string(kConnectivityRetries) + " retries; try a larger p");
}

// Uniform labeled tree: decode a uniformly random sequence seq in [0,n)^(n-2).
Graph gen_random_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph::from_edges(2, {{0, 1}});

    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[s];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    for (int s : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.push(s);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph gen_block_graph(int blocks, int max_clique, Rng& rng) {
    if (blocks < 1) throw std::invalid_argument("block_graph: blocks must be >= 1");
    if (max_clique < 2) throw std::invalid_argument("block_graph: max_clique must be >= 2");

    std::vector<Edge> edges;
    int n = rng.uniform_int(2, max_clique);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    for (int b = 1; b < blocks; ++b) {
        const int attach = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int size = rng.uniform_int(2, max_clique);
        std::vector<int> clique{attach};
        for (int i = 0; i < size - 1; ++i) clique.push_back(n++);
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.emplace_back(clique[i], clique[j]);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph gen_graph(const GenSpec& spec) {
    Rng rng(spec.seed);
    switch (spec.model) {
        case GenModel::erdos_renyi: return gen_erdos_renyi(spec.n, spec.p, rng);
        case GenModel::random_tree: return gen_random_tree(spec.n, rng);
        case GenModel::block_graph: {
            Graph g = gen_block_graph(spec.blocks, spec.max_clique, rng);
            if (!is_block_graph(g))
                throw std::logic_error("block_graph generator emitted a non-block graph");
            return g;
        }
    }
    throw std::invalid_argument("gen_graph: unknown model");
}

std::uint64_t enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("enumerate_connected_graphs: n must be in [1, 7]");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const auto bits = static_cast<std::uint32_t>(pairs.size());
    std::uint64_t count = 0;
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        // Quick union-find connectivity filter before building the graph.
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = n;
        for (std::uint32_t b = 0; b < bits; ++b) {
            if (!(mask >> b & 1)) continue;
            const int ru = find(pairs[b].first);
            const int rv = find(pairs[b].second);
            if (ru != rv) {
                parent[ru] = rv;
                --components;
            }
        }
        if (components != 1) continue;
        std::vector<Edge> edges;
        for (std::uint32_t b = 0; b < bits; ++b) {
            if (mask >> b & 1) edges.push_back(pairs[b]);
        }
        ++count;
        visit(Graph::from_edges(n, edges));
    }
    return count;
}

namespace {

struct MisSolver {
    const Graph& g;
    std::vector<std::uint32_t> adjacency;
    int best = 0;

    explicit MisSolver(const Graph& graph) : g(graph) {
        adjacency.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v : g.neighbors(u)) adjacency[u] |= std::uint32_t{1} << v;
        }
    }

    void branch(std::uint32_t candidates, int count) {
        if (count > best) best = count;
        if (candidates == 0) return;
        if (count + std::popcount(candidates) <= best) return;

        // Vertices isolated within the candidate set always join.
        std::uint32_t rest = candidates;
        while (rest != 0) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((adjacency[v] & candidates) == 0) {
                candidates &= ~(std::uint32_t{1} << v);
                ++count;
                if (count > best) best = count;
            }
        }
        if (candidates == 0) return;
        if (count + std::popcount(candidates) <= best) return;

        // Branch on a candidate of maximum degree within the set.
        int pick = -1, pick_degree = -1;
        rest = candidates;
        while (rest != 0) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int d = std::popcount(adjacency[v] & candidates);
            if (d > pick_degree) {
                pick_degree = d;
                pick = v;
            }
        }
        branch(candidates & ~(adjacency[pick] | (std::uint32_t{1} << pick)), count + 1);
        branch(candidates & ~(std::uint32_t{1} << pick), count);
    }
};

}  // namespace

int independence_number(const Graph& g) {
    if (g.vertex_count() > kIndependenceGuard)
        throw ResourceError("independence_number: n exceeds the brute-force guard of " +
                            std::to_string(kIndependenceGuard));
    if (g.vertex_count() == 0) return 0;
    MisSolver solver(g);
    solver.branch((std::uint32_t{1} << g.vertex_count()) - 1, 0);
    return solver.best;
}

}  // namespace cnh
