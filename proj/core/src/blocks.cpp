#include "cnhood/blocks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cnh {

namespace {

struct BccState {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> edge_stack;
    std::vector<Block> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BccState(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.vertex_count()), -1),
          low(static_cast<std::size_t>(graph.vertex_count()), -1),
          is_cut(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    void pop_block(const Edge& top) {
        Block block;
        std::set<int> verts;
        for (;;) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.edges.push_back(e);
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == top) break;
        }
        block.vertices.assign(verts.begin(), verts.end());
        std::sort(block.edges.begin(), block.edges.end());
        blocks.push_back(std::move(block));
    }

    void dfs(int root) {
        // Explicit stack; frame.next indexes into the adjacency list.
        struct Frame {
            int v, parent;
            std::size_t next = 0;
        };
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        int root_children = 0;

        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const int w = nbrs[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(normalized(f.v, w));
                    disc[w] = low[w] = timer++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(normalized(f.v, w));
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const int v = f.v;
                const int parent = f.parent;
                stack.pop_back();
                if (parent == -1) break;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) {
                    // Edges above (parent, v) on the stack form one block.
                    if (parent != root) is_cut[parent] = 1;
                    pop_block(normalized(parent, v));
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

BlockDecomposition biconnected_components(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("biconnected_components: graph is disconnected");
    BccState state(g);
    if (g.vertex_count() > 0) state.dfs(0);
    BlockDecomposition out;
    out.blocks = std::move(state.blocks);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (state.is_cut[v]) out.cut_vertices.push_back(v);
    }
    return out;
}

bool is_block_graph(const Graph& g) {
    const BlockDecomposition decomp = biconnected_components(g);
    for (const Block& block : decomp.blocks) {
        const std::size_t k = block.vertices.size();
        if (block.edges.size() != k * (k - 1) / 2) return false;
    }
    return true;
}

std::vector<Edge> bridges(const Graph& g) {
    std::vector<Edge> out;
    for (const Block& block : biconnected_components(g).blocks) {
        if (block.edges.size() == 1) out.push_back(block.edges.front());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cnh
