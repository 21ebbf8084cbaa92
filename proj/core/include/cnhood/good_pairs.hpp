#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cnhood/graph.hpp"
#include "cnhood/rational.hpp"
#include "cnhood/rng.hpp"

namespace cnh {

class Rng;

// A vertex ordering: rank[v] is v's position, a bijection onto {0..n-1}.
// Injections into wider integer ranges are rank-compressed at construction;
// only relative order ever matters.
class Ordering {
public:
    static Ordering identity(int n);
    static Ordering from_ranks(std::vector<int> ranks);
    static Ordering from_injection(const std::vector<long long>& values);
    static Ordering random(int n, Rng& rng);

    int size() const { return static_cast<int>(rank_.size()); }
    int rank(int v) const { return rank_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& ranks() const { return rank_; }

    bool operator==(const Ordering& other) const { return rank_ == other.rank_; }

private:
    explicit Ordering(std::vector<int> rank) : rank_(std::move(rank)) {}
    std::vector<int> rank_;
};

// (u, v) is good when uv is an edge, u precedes v, and u precedes every
// common neighbor of u and v.
bool is_good_pair(const Graph& g, const Ordering& pi, int u, int v);

// The spanning subgraph keeping exactly the edges whose lower-ranked
// orientation is a good pair. Connected whenever g is.
Graph good_pair_graph(const Graph& g, const Ordering& pi);

// Tie policies for the deletion construction. Edges always process in
// decreasing sigma = min endpoint rank; equal-sigma groups order either by
// descending rank of the larger endpoint or by ascending (u, v). The final
// graph is tie-independent, which the test suite checks by comparing both.
enum class DeletionTieBreak { larger_rank_desc, lexicographic };

// Triangle-deletion construction: walk edges from larger sigma to smaller,
// removing uv whenever some surviving triangle uva has a lower-ranked apex.
// Produces exactly good_pair_graph(g, pi).
Graph good_pair_graph_by_deletion(const Graph& g, const Ordering& pi,
                                  DeletionTieBreak tie = DeletionTieBreak::larger_rank_desc);

struct SpanningTree {
    std::vector<Edge> edges;  // sorted (u, v) with u < v
    long long weight = 0;     // Σ over tree edges of min endpoint rank
};

// A spanning tree minimizing Σ min(rank(u), rank(v)); every edge of such a
// tree is a good pair. Throws std::domain_error on disconnected input.
SpanningTree min_weight_spanning_tree(const Graph& g, const Ordering& pi);

// Σ over edges of 2/(|N(u)∩N(v)|+2): the expected number of good-pair edges
// under a uniformly random ordering.
Rational exact_expected_good_edges(const Graph& g);

struct ExpectationReport {
    Rational exact;
    double sample_mean = 0.0;
    int sample_count = 0;
    double sample_stddev = 0.0;  // sample (n-1) form; 0 when trials == 1
};

// Monte Carlo estimate of the good-edge count over `trials` random
// orderings. Per-trial orderings derive from derive_seed(seed, trial), so
// identical arguments always reproduce identical reports.
ExpectationReport sample_good_edge_count(const Graph& g, int trials, std::uint64_t seed);

struct AllOrderingsReport {
    bool always_connected = true;
    bool always_tree = true;
    std::optional<Ordering> counterexample;  // an ordering whose graph has a cycle
};

inline constexpr int kDefaultOrderingLimit = 9;

// Exhaustive check over all n! orderings: the good-pair graph must always be
// connected, and is always a tree exactly for block graphs. ResourceError
// when n exceeds n_limit.
AllOrderingsReport all_orderings_report(const Graph& g, int n_limit = kDefaultOrderingLimit);

// Constructive converse witness for a non-block graph: vertices a, b, c with
// ac, bc edges but ab a non-edge, a shortest a–b path avoiding c inside a
// non-clique block, and the ordering a, b, c, v1..vk placed first. The
// good-pair graph of that ordering contains `cycle`.
struct CycleWitness {
    Ordering ordering;
    std::vector<int> cycle;
    std::array<int, 3> triple{};  // a, b, c
    std::vector<int> path;        // a, v1, .., vk, b
};

// nullopt exactly when g is a block graph. The returned ordering is verified
// to yield a cyclic good-pair graph before returning (std::logic_error if
// the construction ever failed to).
std::optional<CycleWitness> cycle_witness_ordering(const Graph& g);

}  // namespace cnh
