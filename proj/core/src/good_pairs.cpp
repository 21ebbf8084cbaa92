#include "cnhood/good_pairs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "cnhood/blocks.hpp"
#include "cnhood/errors.hpp"

namespace cnh {

Ordering Ordering::identity(int n) {
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    return Ordering(std::move(rank));
}

Ordering Ordering::from_ranks(std::vector<int> ranks) {
    std::vector<char> seen(ranks.size(), 0);
    for (int r : ranks) {
        if (r < 0 || r >= static_cast<int>(ranks.size()) || seen[static_cast<std::size_t>(r)])
            throw std::invalid_argument("ordering ranks must form a permutation of 0..n-1");
        seen[static_cast<std::size_t>(r)] = 1;
    }
    return Ordering(std::move(ranks));
}

Ordering Ordering::from_injection(const std::vector<long long>& values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> rank(values.size(), 0);
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        if (pos > 0 && values[idx[pos]] == values[idx[pos - 1]])
            throw std::invalid_argument("ordering values must be distinct");
        rank[idx[pos]] = static_cast<int>(pos);
    }
    return Ordering(std::move(rank));
}

Ordering Ordering::random(int n, Rng& rng) {
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    rng.shuffle(rank);
    return Ordering(std::move(rank));
}

namespace {

void check_ordering_size(const Graph& g, const Ordering& pi) {
    if (pi.size() != g.vertex_count())
        throw std::invalid_argument("ordering size does not match the graph");
}

}  // namespace

bool is_good_pair(const Graph& g, const Ordering& pi, int u, int v) {
    check_ordering_size(g, pi);
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("is_good_pair: vertices must be distinct");
    if (!g.has_edge(u, v) || pi.rank(u) >= pi.rank(v)) return false;
    for (int w : common_neighbors(g, u, v)) {
        if (pi.rank(w) < pi.rank(u)) return false;
    }
    return true;
}

Graph good_pair_graph(const Graph& g, const Ordering& pi) {
    check_ordering_size(g, pi);
    std::vector<Edge> kept;
    for (const auto& [u, v] : g.edges()) {
        // Only the lower-ranked orientation can be good.
        const int lo = pi.rank(u) < pi.rank(v) ? u : v;
        const int hi = lo == u ? v : u;
        bool good = true;
        for (int w : common_neighbors(g, lo, hi)) {
            if (pi.rank(w) < pi.rank(lo)) {
                good = false;
                break;
            }
        }
        if (good) kept.emplace_back(u, v);
    }
    return Graph::from_edges(g.vertex_count(), kept);
}

Graph good_pair_graph_by_deletion(const Graph& g, const Ordering& pi, DeletionTieBreak tie) {
    check_ordering_size(g, pi);
    std::vector<Edge> order = g.edges();
    auto sigma = [&](const Edge& e) { return std::min(pi.rank(e.first), pi.rank(e.second)); };
    auto max_rank = [&](const Edge& e) { return std::max(pi.rank(e.first), pi.rank(e.second)); };
    std::sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
        if (sigma(a) != sigma(b)) return sigma(a) > sigma(b);
        if (tie == DeletionTieBreak::larger_rank_desc && max_rank(a) != max_rank(b))
            return max_rank(a) > max_rank(b);
        return a < b;
    });

    std::vector<std::set<int>> h(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges()) {
        h[u].insert(v);
        h[v].insert(u);
    }
    for (const auto& [u, v] : order) {
        const int floor_rank = sigma({u, v});
        const auto& small = h[u].size() <= h[v].size() ? h[u] : h[v];
        const auto& other = h[u].size() <= h[v].size() ? h[v] : h[u];
        bool doomed = false;
        for (int a : small) {
            if (pi.rank(a) < floor_rank && other.count(a)) {
                doomed = true;
                break;
            }
        }
        if (doomed) {
            h[u].erase(v);
            h[v].erase(u);
        }
    }

    std::vector<Edge> kept;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : h[u]) {
            if (u < v) kept.emplace_back(u, v);
        }
    }
    return Graph::from_edges(g.vertex_count(), kept);
}

SpanningTree min_weight_spanning_tree(const Graph& g, const Ordering& pi) {
    check_ordering_size(g, pi);
    if (!is_connected(g))
        throw std::domain_error("min_weight_spanning_tree: graph is disconnected");

    std::vector<Edge> order = g.edges();
    auto sigma = [&](const Edge& e) { return std::min(pi.rank(e.first), pi.rank(e.second)); };
    auto max_rank = [&](const Edge& e) { return std::max(pi.rank(e.first), pi.rank(e.second)); };
    std::sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
        if (sigma(a) != sigma(b)) return sigma(a) < sigma(b);
        if (max_rank(a) != max_rank(b)) return max_rank(a) < max_rank(b);
        return a < b;
    });

    // Kruskal with path-compressing union-find.
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    SpanningTree tree;
    for (const Edge& e : order) {
        const int ru = find(e.first);
        const int rv = find(e.second);
        if (ru == rv) continue;
        parent[ru] = rv;
        tree.edges.push_back(e);
        tree.weight += sigma(e);
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

Rational exact_expected_good_edges(const Graph& g) {
    Rational sum = 0;
    for (const auto& [u, v] : g.edges()) {
        const auto k = static_cast<long>(common_neighbors(g, u, v).size());
        sum += Rational(2, k + 2);
    }
    return sum;
}

ExpectationReport sample_good_edge_count(const Graph& g, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("sample_good_edge_count: trials must be >= 1");
    ExpectationReport report;
    report.exact = exact_expected_good_edges(g);
    report.sample_count = trials;

    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const Ordering pi = Ordering::random(g.vertex_count(), rng);
        const auto count = static_cast<double>(good_pair_graph(g, pi).edge_count());
        sum += count;
        sum_sq += count * count;
    }
    report.sample_mean = sum / trials;
    if (trials > 1) {
        const double var =
            std::max(0.0, (sum_sq - sum * sum / trials) / static_cast<double>(trials - 1));
        report.sample_stddev = std::sqrt(var);
    }
    return report;
}

AllOrderingsReport all_orderings_report(const Graph& g, int n_limit) {
    if (!is_connected(g)) throw std::domain_error("all_orderings_report: graph is disconnected");
    const int n = g.vertex_count();
    if (n > n_limit)
        throw ResourceError("all_orderings_report: n=" + std::to_string(n) + " exceeds limit " +
                            std::to_string(n_limit) + " (n! orderings)");

    AllOrderingsReport report;
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    do {
        const Ordering pi = Ordering::from_ranks(rank);
        const Graph gp = good_pair_graph(g, pi);
        const bool connected = is_connected(gp);
        const bool tree = connected && gp.edge_count() + 1 == static_cast<std::size_t>(std::max(n, 1));
        report.always_connected = report.always_connected && connected;
        if (!tree) {
            report.always_tree = false;
            if (!report.counterexample && gp.edge_count() >= static_cast<std::size_t>(n))
                report.counterexample = pi;
        }
        if (!report.always_connected && !report.always_tree && report.counterexample) break;
    } while (std::next_permutation(rank.begin(), rank.end()));
    return report;
}

std::optional<CycleWitness> cycle_witness_ordering(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("cycle_witness_ordering: graph is disconnected");

    // Locate a non-clique block.
    const BlockDecomposition decomp = biconnected_components(g);
    const Block* bad = nullptr;
    for (const Block& block : decomp.blocks) {
        const std::size_t k = block.vertices.size();
        if (block.edges.size() != k * (k - 1) / 2) {
            bad = &block;
            break;
        }
    }
    if (bad == nullptr) return std::nullopt;

    // Lexicographically first distance-2 triple a, b, c inside the block:
    // ab a non-edge with a common block neighbor c.
    std::set<int> in_block(bad->vertices.begin(), bad->vertices.end());
    int a = -1, b = -1, c = -1;
    for (std::size_t i = 0; i < bad->vertices.size() && a == -1; ++i) {
        for (std::size_t j = i + 1; j < bad->vertices.size() && a == -1; ++j) {
            const int x = bad->vertices[i];
            const int y = bad->vertices[j];
            if (g.has_edge(x, y)) continue;
            for (int w : common_neighbors(g, x, y)) {
                if (in_block.count(w)) {
                    a = x;
                    b = y;
                    c = w;
                    break;
                }
            }
        }
    }
    if (a == -1) throw std::logic_error("non-clique block without a distance-2 pair");

    // Shortest a-b path inside the block avoiding c (exists: blocks on more
    // than two vertices stay connected after one removal).
    std::vector<int> prev(static_cast<std::size_t>(g.vertex_count()), -2);
    std::vector<int> queue{a};
    prev[a] = -1;
    for (std::size_t head = 0; head < queue.size() && prev[b] == -2; ++head) {
        const int x = queue[head];
        for (int w : g.neighbors(x)) {
            if (w == c || !in_block.count(w) || prev[w] != -2) continue;
            prev[w] = x;
            queue.push_back(w);
        }
    }
    if (prev[b] == -2) throw std::logic_error("block lost connectivity after removing one vertex");
    std::vector<int> path;
    for (int x = b; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());  // a, v1, .., vk, b

    // Place a, b, c, v1..vk first, every other vertex afterwards.
    std::vector<int> rank(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    rank[a] = next++;
    rank[b] = next++;
    rank[c] = next++;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) rank[path[i]] = next++;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (rank[v] == -1) rank[v] = next++;
    }

    CycleWitness witness{Ordering::from_ranks(std::move(rank)), {}, {a, b, c}, path};
    const Graph gp = good_pair_graph(g, witness.ordering);
    auto cycle = find_cycle(gp);
    if (!cycle)
        throw std::logic_error("cycle_witness_ordering: constructed ordering gave an acyclic graph");
    witness.cycle = std::move(*cycle);
    return witness;
}

}  // namespace cnh
