#include "cnhood/graph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cnhood/errors.hpp"

namespace cnh {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    std::set<Edge> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        seen.insert(normalized(u, v));
    }
    for (const auto& [u, v] : seen) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = seen.size();
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("common_neighbors: vertices must be distinct");
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

std::optional<std::vector<int>> find_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (parent[v] == -2) {
                    parent[v] = u;
                    stack.push_back(v);
                } else if (v != parent[u]) {
                    // Back or cross edge in the DFS forest; walk both parent
                    // chains until they meet to extract one simple cycle.
                    std::vector<int> pu, pv;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    std::reverse(pu.begin(), pu.end());
                    std::reverse(pv.begin(), pv.end());
                    std::size_t k = 0;
                    while (k + 1 < pu.size() && k + 1 < pv.size() && pu[k + 1] == pv[k + 1]) ++k;
                    std::vector<int> cycle(pu.begin() + static_cast<long>(k), pu.end());
                    for (std::size_t i = pv.size(); i-- > k + 1;) cycle.push_back(pv[i]);
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Strip comments/blank lines; returns tokens plus the 1-based line number.
struct LineReader {
    std::istream& in;
    int line_no = 0;

    std::optional<std::pair<std::vector<std::string>, int>> next_tokens() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            return std::make_pair(std::move(tokens), line_no);
        }
        return std::nullopt;
    }
};

int parse_nonnegative(const std::string& tok, int line) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
    }
    if (pos != tok.size() || value < 0)
        throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
    if (value > 1'000'000'000) throw ParseError(line, "value too large: '" + tok + "'");
    return static_cast<int>(value);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    LineReader reader{in};
    auto header = reader.next_tokens();
    if (!header) throw ParseError(reader.line_no + 1, "missing 'n m' header");
    if (header->first.size() != 2)
        throw ParseError(header->second, "header must be 'n m'");
    const int n = parse_nonnegative(header->first[0], header->second);
    const int declared_m = parse_nonnegative(header->first[1], header->second);

    std::set<Edge> edges;
    while (auto tokens = reader.next_tokens()) {
        const auto& [toks, line] = *tokens;
        if (toks.size() != 2) throw ParseError(line, "edge line must be 'u v'");
        const int u = parse_nonnegative(toks[0], line);
        const int v = parse_nonnegative(toks[1], line);
        if (u >= n || v >= n)
            throw ParseError(line, "vertex index " + std::to_string(std::max(u, v)) +
                                       " not below n=" + std::to_string(n));
        if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
        edges.insert(normalized(u, v));
    }
    if (static_cast<int>(edges.size()) != declared_m)
        throw ParseError(header->second,
                         "header declares m=" + std::to_string(declared_m) + " but input has " +
                             std::to_string(edges.size()) + " distinct edges");
    return Graph::from_edges(n, {edges.begin(), edges.end()});
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g, const std::vector<Edge>& highlight) {
    std::set<Edge> marked;
    for (const auto& [u, v] : highlight) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("highlight edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") is not in the graph");
        marked.insert(normalized(u, v));
    }
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges()) {
        out << "  " << e.first << " -- " << e.second;
        if (marked.count(e)) out << " [color=red, penwidth=2.0]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace cnh
