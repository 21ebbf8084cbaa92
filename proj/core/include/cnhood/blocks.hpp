#pragma once

#include <vector>

#include "cnhood/graph.hpp"

namespace cnh {

// One biconnected component: its vertices (sorted) and the edges it owns.
struct Block {
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

// Biconnected components plus articulation vertices of a connected graph.
// Every edge belongs to exactly one block; two blocks share at most one
// vertex, and a shared vertex is a cut vertex. A bridge with its endpoints
// is a two-vertex block.
struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;  // sorted ascending
};

// Lowpoint depth-first traversal with an edge stack. Throws
// std::domain_error on disconnected input.
BlockDecomposition biconnected_components(const Graph& g);

// True iff every block induces a complete subgraph. Block graphs are
// exactly the graphs where the common-neighborhood edge sum meets its
// lower bound. Throws std::domain_error on disconnected input.
bool is_block_graph(const Graph& g);

// Edges whose removal disconnects the graph, i.e. single-edge blocks.
std::vector<Edge> bridges(const Graph& g);

}  // namespace cnh
