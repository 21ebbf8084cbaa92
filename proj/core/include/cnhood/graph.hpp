#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cnh {

using Edge = std::pair<int, int>;  // stored normalized, first < second

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// neighbor lists are sorted, duplicate-free, and never contain the vertex
// itself, so every operation on top is a pure function.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Collapses duplicate edges; rejects self-loops and out-of-range
    // endpoints with std::invalid_argument.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    // Throws std::invalid_argument when v is outside [0, n).
    void check_vertex(int v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Sorted N(u) ∩ N(v); never contains u or v. Requires u != v.
std::vector<int> common_neighbors(const Graph& g, int u, int v);

// True iff every vertex is reachable from vertex 0; graphs with n <= 1 count
// as connected.
bool is_connected(const Graph& g);

// Some cycle of g as a closed vertex sequence (first vertex not repeated),
// or nullopt when g is a forest.
std::optional<std::vector<int>> find_cycle(const Graph& g);

// Edge-list text format, canonical across the toolkit:
//   - lines whose first non-blank character is '#' are comments, blank lines
//     are skipped;
//   - the first remaining line is "n m";
//   - every further line is an edge "u v" with 0 <= u,v < n and u != v;
//   - duplicate edges collapse to one, and m must equal the number of
//     distinct edges.
// LF and CRLF both parse. Violations raise ParseError naming the line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// DOT text for an undirected graph. Highlighted edges must exist in g
// (std::invalid_argument otherwise) and are emitted bold red.
std::string to_dot(const Graph& g, const std::vector<Edge>& highlight = {});

inline Edge normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace cnh
