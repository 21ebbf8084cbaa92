#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "cnhood/graph.hpp"

namespace cnh {

enum class GenModel { erdos_renyi, random_tree, block_graph };

GenModel parse_gen_model(std::string_view name);  // accepts '-' or '_' spellings
std::string to_string(GenModel model);

// Parameters for one generator draw. `p` applies to erdos_renyi only;
// `blocks`/`max_clique` to block_graph only (whose vertex count emerges from
// the random clique sizes, so `n` is ignored there).
struct GenSpec {
    GenModel model = GenModel::erdos_renyi;
    int n = 0;
    double p = 0.0;
    int blocks = 0;
    int max_clique = 0;
    std::uint64_t seed = 0;
};

// Deterministic in the seed.
//   erdos_renyi: independent pairs with probability p, resampled until
//     connected (ResourceError after bounded retries, suggesting larger p);
//   random_tree: uniform labeled tree decoded from a random integer
//     sequence of length n-2;
//   block_graph: one starting clique, then cliques of size 2..max_clique
//     attached at uniformly chosen existing vertices. Always connected and
//     always a block graph, which is re-checked on every emission.
Graph gen_graph(const GenSpec& spec);

inline constexpr int kConnectivityRetries = 1000;

// Visits every connected simple graph on labeled vertices 0..n-1 exactly
// once (all 2^(n(n-1)/2) edge subsets, filtered for connectivity) and
// returns how many there were. Requires 1 <= n <= 7.
std::uint64_t enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& visit);

// Exact independence number by branch and bound; guarded at n <= 24.
int independence_number(const Graph& g);

inline constexpr int kIndependenceGuard = 24;

}  // namespace cnh
