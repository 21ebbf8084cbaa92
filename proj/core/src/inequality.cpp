#include "cnhood/inequality.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cnhood/blocks.hpp"
#include "cnhood/errors.hpp"

namespace cnh {

Rational common_neighbor_sum(const Graph& g) {
    Rational sum = 0;
    for (const auto& [u, v] : g.edges()) {
        const auto k = static_cast<long>(common_neighbors(g, u, v).size());
        sum += Rational(1, k + 2);
    }
    return sum;
}

TheoremReport verify_theorem1(const Graph& g) {
    if (g.vertex_count() < 1 || !is_connected(g))
        throw std::domain_error("verify_theorem1: requires a connected graph with n >= 1");
    TheoremReport report;
    report.sum = common_neighbor_sum(g);
    report.bound = Rational(g.vertex_count() - 1, 2);
    report.holds = report.sum >= report.bound;
    report.equality = report.sum == report.bound;
    report.block_graph = is_block_graph(g);
    report.consistent = report.equality == report.block_graph;
    return report;
}

Rational caro_wei_sum(const Graph& g) {
    Rational sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += Rational(1, g.degree(v) + 1);
    return sum;
}

namespace {

// A qualifying path, reduced to the bitmask of its internal vertices.
struct PathCandidate {
    std::uint64_t internal = 0;
    int size = 0;
    std::vector<int> vertices;
};

std::vector<PathCandidate> enumerate_qualifying_paths(const Graph& g, int u, int v, int ell,
                                                      int path_cap) {
    std::vector<PathCandidate> out;
    const int max_len = std::min(ell, std::max(1, g.vertex_count() - 1));
    std::vector<int> current{u};
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[u] = 1;

    auto record = [&] {
        if (static_cast<int>(out.size()) >= path_cap)
            throw ResourceError("path_packing: enumeration for (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") exceeded path_cap=" +
                                std::to_string(path_cap));
        PathCandidate cand;
        cand.vertices = current;
        cand.vertices.push_back(v);
        for (std::size_t i = 1; i + 1 < cand.vertices.size(); ++i)
            cand.internal |= std::uint64_t{1} << cand.vertices[i];
        cand.size = std::popcount(cand.internal);
        out.push_back(std::move(cand));
    };

    // Depth-first over simple paths from u; `len` counts edges used so far.
    auto dfs = [&](auto&& self, int x, int len) -> void {
        for (int w : g.neighbors(x)) {
            if (w == v) {
                if (len + 1 >= 2 && len + 1 <= max_len) record();
            } else if (!on_path[w] && len + 1 < max_len) {
                on_path[w] = 1;
                current.push_back(w);
                self(self, w, len + 1);
                current.pop_back();
                on_path[w] = 0;
            }
        }
    };
    dfs(dfs, u, 0);
    return out;
}

// Exact maximum packing: maximum independent set in the conflict graph,
// branch and bound seeded with a greedy incumbent.
class PackingSolver {
public:
    explicit PackingSolver(std::vector<PathCandidate> candidates)
        : cands_(std::move(candidates)) {
        std::sort(cands_.begin(), cands_.end(), [](const PathCandidate& a, const PathCandidate& b) {
            return a.size != b.size ? a.size < b.size : a.vertices < b.vertices;
        });
    }

    std::vector<int> solve() {
        // Greedy incumbent: smallest internal sets first.
        std::uint64_t used = 0;
        for (std::size_t i = 0; i < cands_.size(); ++i) {
            if ((cands_[i].internal & used) == 0) {
                used |= cands_[i].internal;
                best_set_.push_back(static_cast<int>(i));
            }
        }
        best_ = static_cast<int>(best_set_.size());
        chosen_.clear();
        branch(0, 0, 0);
        return best_set_;
    }

private:
    void branch(std::size_t idx, std::uint64_t used, int count) {
        if (count > best_) {
            best_ = count;
            best_set_ = chosen_;
        }
        // First still-compatible candidate; none means this branch is done.
        while (idx < cands_.size() && (cands_[idx].internal & used) != 0) ++idx;
        if (idx == cands_.size()) return;
        if (count + upper_bound(idx, used) <= best_) return;

        chosen_.push_back(static_cast<int>(idx));
        branch(idx + 1, used | cands_[idx].internal, count + 1);
        chosen_.pop_back();
        branch(idx + 1, used, count);
    }

    // Any k further paths occupy at least the k smallest compatible internal
    // sets, all inside the free vertices they jointly cover.
    int upper_bound(std::size_t idx, std::uint64_t used) const {
        std::uint64_t free_union = 0;
        for (std::size_t i = idx; i < cands_.size(); ++i) {
            if ((cands_[i].internal & used) == 0) free_union |= cands_[i].internal;
        }
        const int budget = std::popcount(free_union);
        int spent = 0;
        int k = 0;
        for (std::size_t i = idx; i < cands_.size(); ++i) {
            if ((cands_[i].internal & used) != 0) continue;
            if (spent + cands_[i].size > budget) break;  // sizes ascend, prefix is cheapest
            spent += cands_[i].size;
            ++k;
        }
        return k;
    }

    std::vector<PathCandidate> cands_;
    std::vector<int> chosen_, best_set_;
    int best_ = 0;

public:
    const std::vector<PathCandidate>& candidates() const { return cands_; }
};

}  // namespace

PathPacking path_packing(const Graph& g, int u, int v, int ell, int path_cap) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("path_packing: vertices must be distinct");
    if (ell < 2) throw std::invalid_argument("path_packing: ell must be at least 2");
    if (path_cap < 1) throw std::invalid_argument("path_packing: path_cap must be positive");
    if (g.vertex_count() > 64)
        throw ResourceError("path_packing: exact packing is limited to n <= 64");

    PathPacking result;
    result.u = u;
    result.v = v;
    result.ell = ell;

    PackingSolver solver(enumerate_qualifying_paths(g, u, v, ell, path_cap));
    for (int idx : solver.solve()) result.witness.push_back(solver.candidates()[idx].vertices);
    result.value = static_cast<int>(result.witness.size());
    return result;
}

Rational generalized_sum(const Graph& g, int ell, int path_cap) {
    if (ell < 2) throw std::invalid_argument("generalized_sum: ell must be at least 2");
    Rational sum = 0;
    for (const auto& [u, v] : g.edges()) {
        const PathPacking packing = path_packing(g, u, v, ell, path_cap);
        sum += Rational(1, packing.value + ell);
    }
    return sum;
}

TheoremReport verify_generalized(const Graph& g, int ell, int path_cap) {
    if (ell < 2) throw std::invalid_argument("verify_generalized: ell must be at least 2");
    if (g.vertex_count() < 1 || !is_connected(g))
        throw std::domain_error("verify_generalized: requires a connected graph with n >= 1");
    TheoremReport report;
    report.sum = generalized_sum(g, ell, path_cap);
    report.bound = Rational(g.vertex_count() - 1, ell);
    report.holds = report.sum >= report.bound;
    report.equality = report.sum == report.bound;
    report.block_graph = is_block_graph(g);
    if (ell == 2) report.consistent = report.equality == report.block_graph;
    return report;
}

}  // namespace cnh
