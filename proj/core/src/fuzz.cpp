#include "cnhood/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cnhood/blocks.hpp"
#include "cnhood/electrical.hpp"
#include "cnhood/errors.hpp"
#include "cnhood/good_pairs.hpp"
#include "cnhood/inequality.hpp"

namespace cnh {

void PropertyRegistry::add(std::string name, PropertyFn fn) {
    props_.emplace_back(std::move(name), std::move(fn));
}

const PropertyFn* PropertyRegistry::find(std::string_view name) const {
    for (const auto& [n, fn] : props_) {
        if (n == name) return &fn;
    }
    return nullptr;
}

std::vector<std::string> PropertyRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(props_.size());
    for (const auto& [n, fn] : props_) out.push_back(n);
    return out;
}

namespace {

std::string ordering_text(const Ordering& pi) {
    std::ostringstream out;
    for (int v = 0; v < pi.size(); ++v) {
        if (v > 0) out << ' ';
        out << pi.rank(v);
    }
    return out.str();
}

// Exhaustive orderings for tiny graphs, otherwise a random sample.
std::vector<Ordering> orderings_to_try(const Graph& g, Rng& rng, int samples) {
    std::vector<Ordering> out;
    const int n = g.vertex_count();
    if (n <= 5) {
        std::vector<int> rank(static_cast<std::size_t>(n));
        std::iota(rank.begin(), rank.end(), 0);
        do {
            out.push_back(Ordering::from_ranks(rank));
        } while (std::next_permutation(rank.begin(), rank.end()));
    } else {
        for (int i = 0; i < samples; ++i) out.push_back(Ordering::random(n, rng));
    }
    return out;
}

std::optional<std::string> prop_theorem1(const Graph& g, Rng&) {
    const TheoremReport r = verify_theorem1(g);
    if (r.holds && r.consistent.value_or(false)) return std::nullopt;
    return "sum=" + to_fraction_string(r.sum) + " bound=" + to_fraction_string(r.bound) +
           " holds=" + std::to_string(r.holds) + " equality=" + std::to_string(r.equality) +
           " block_graph=" + std::to_string(r.block_graph);
}

std::optional<std::string> prop_lemma2a(const Graph& g, Rng& rng) {
    for (const Ordering& pi : orderings_to_try(g, rng, 20)) {
        if (!is_connected(good_pair_graph(g, pi)))
            return "good-pair graph disconnected for ordering " + ordering_text(pi);
    }
    return std::nullopt;
}

std::optional<std::string> prop_lemma2b(const Graph& g, Rng&) {
    const AllOrderingsReport report = all_orderings_report(g);
    const bool block = is_block_graph(g);
    if (!report.always_connected) return "some ordering gave a disconnected good-pair graph";
    if (report.always_tree != block)
        return "always_tree=" + std::to_string(report.always_tree) +
               " but is_block_graph=" + std::to_string(block);
    return std::nullopt;
}

std::optional<std::string> prop_construction_equiv(const Graph& g, Rng& rng) {
    for (const Ordering& pi : orderings_to_try(g, rng, 4)) {
        const Graph direct = good_pair_graph(g, pi);
        for (auto tie : {DeletionTieBreak::larger_rank_desc, DeletionTieBreak::lexicographic}) {
            if (!(good_pair_graph_by_deletion(g, pi, tie) == direct))
                return "deletion construction disagrees for ordering " + ordering_text(pi);
        }
        for (const auto& [u, v] : min_weight_spanning_tree(g, pi).edges) {
            if (!direct.has_edge(u, v))
                return "min-weight tree edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") is not a good pair for ordering " + ordering_text(pi);
        }
    }
    return std::nullopt;
}

std::optional<std::string> prop_forster(const Graph& g, Rng&) {
    const ResistanceReport report = forster_check(g, default_backend(g.vertex_count()));
    if (report.identity_holds) return std::nullopt;
    if (report.backend == Backend::exact)
        return "exact total " + to_fraction_string(report.total_exact) + " != n-1";
    return "floating residual " + std::to_string(report.residual);
}

std::optional<std::string> prop_eq1_bound(const Graph& g, Rng&) {
    if (g.vertex_count() > kExactBackendLimit)
        throw ResourceError("eq1_bound: exact check limited to n <= 64");
    const Eq1Report report = check_bound_eq1(g);
    if (report.all_hold) return std::nullopt;
    for (const Eq1Entry& e : report.per_edge) {
        if (e.resistance > e.bound)
            return "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + "): R=" +
                   to_fraction_string(e.resistance) + " > bound=" + to_fraction_string(e.bound);
    }
    return "bound violated";
}

std::optional<std::string> prop_strictness(const Graph& g, Rng&) {
    if (g.vertex_count() > kExactBackendLimit)
        throw ResourceError("strictness_iff_nonblock: exact check limited to n <= 64");
    const Eq1Report report = check_bound_eq1(g);
    const bool block = is_block_graph(g);
    if (report.any_strict == !block) return std::nullopt;
    return "any_strict=" + std::to_string(report.any_strict) +
           " but is_block_graph=" + std::to_string(block);
}

std::optional<std::string> prop_rayleigh(const Graph& g, Rng&) {
    if (g.vertex_count() > 12) throw ResourceError("rayleigh: exact all-pairs check limited to n <= 12");
    const int n = g.vertex_count();
    const ResistanceSolver before(g);
    const auto bridge_edges = bridges(g);
    for (const Edge& e : g.edges()) {
        if (std::binary_search(bridge_edges.begin(), bridge_edges.end(), e)) continue;
        std::vector<Edge> kept;
        for (const Edge& f : g.edges()) {
            if (f != e) kept.push_back(f);
        }
        const ResistanceSolver after(Graph::from_edges(n, kept));
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (after.resistance(u, v) < before.resistance(u, v))
                    return "removing edge (" + std::to_string(e.first) + "," +
                           std::to_string(e.second) + ") decreased R(" + std::to_string(u) + "," +
                           std::to_string(v) + ")";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> prop_theorem3(const Graph& g, Rng&) {
    const TheoremReport base = verify_theorem1(g);
    for (int ell = 2; ell <= 4; ++ell) {
        const TheoremReport r = verify_generalized(g, ell);
        if (!r.holds)
            return "ell=" + std::to_string(ell) + ": sum=" + to_fraction_string(r.sum) +
                   " < bound=" + to_fraction_string(r.bound);
        if (ell == 2 && r.sum != base.sum)
            return "ell=2 sum " + to_fraction_string(r.sum) + " != theorem1 sum " +
                   to_fraction_string(base.sum);
    }
    for (const auto& [u, v] : g.edges()) {
        const auto k = static_cast<int>(common_neighbors(g, u, v).size());
        const PathPacking packing = path_packing(g, u, v, 2);
        if (packing.value != k)
            return "P(" + std::to_string(u) + std::to_string(v) + ",2)=" +
                   std::to_string(packing.value) + " != common-neighbor count " + std::to_string(k);
    }
    return std::nullopt;
}

std::optional<std::string> prop_caro_wei(const Graph& g, Rng&) {
    const Rational sum = caro_wei_sum(g);
    const int alpha = independence_number(g);
    if (sum <= alpha) return std::nullopt;
    return "caro_wei_sum=" + to_fraction_string(sum) + " > alpha=" + std::to_string(alpha);
}

std::optional<std::string> prop_expectation_avg(const Graph& g, Rng&) {
    const Rational exact = exact_expected_good_edges(g);
    if (exact != 2 * common_neighbor_sum(g))
        return "expected good edges != 2 * common-neighbor sum";
    const int n = g.vertex_count();
    if (n > 7) return std::nullopt;  // the identity above was still checked
    BigInt total = 0;
    BigInt orderings = 0;
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    do {
        total += good_pair_graph(g, Ordering::from_ranks(rank)).edge_count();
        ++orderings;
    } while (std::next_permutation(rank.begin(), rank.end()));
    if (Rational(total, orderings) != exact)
        return "all-orderings average != exact expectation " + to_fraction_string(exact);
    return std::nullopt;
}

std::optional<std::string> prop_resistance_oracle(const Graph& g, Rng&) {
    if (g.vertex_count() > 12)
        throw ResourceError("resistance_oracle: all-pairs check limited to n <= 12");
    const ResistanceSolver solver(g);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (solver.resistance(u, v) != resistance_via_spanning_trees(g, u, v))
                return "Laplacian and spanning-tree resistances differ at (" + std::to_string(u) +
                       "," + std::to_string(v) + ")";
        }
    }
    return std::nullopt;
}

}  // namespace

const PropertyRegistry& builtin_properties() {
    static const PropertyRegistry registry = [] {
        PropertyRegistry r;
        r.add("theorem1", prop_theorem1);
        r.add("lemma2a_connected", prop_lemma2a);
        r.add("lemma2b_tree_iff_block", prop_lemma2b);
        r.add("construction_equiv", prop_construction_equiv);
        r.add("forster", prop_forster);
        r.add("eq1_bound", prop_eq1_bound);
        r.add("strictness_iff_nonblock", prop_strictness);
        r.add("rayleigh", prop_rayleigh);
        r.add("theorem3", prop_theorem3);
        r.add("caro_wei", prop_caro_wei);
        r.add("expectation_avg", prop_expectation_avg);
        r.add("resistance_oracle", prop_resistance_oracle);
        return r;
    }();
    return registry;
}

FuzzReport fuzz_run(const std::vector<GenSpec>& models, int trials,
                    const std::vector<std::string>& properties, std::uint64_t master_seed,
                    const PropertyRegistry& registry) {
    if (models.empty()) throw std::invalid_argument("fuzz_run: at least one model is required");
    if (trials < 1) throw std::invalid_argument("fuzz_run: trials must be >= 1");
    if (properties.empty()) throw std::invalid_argument("fuzz_run: property list is empty");
    std::vector<const PropertyFn*> fns;
    for (const auto& name : properties) {
        const PropertyFn* fn = registry.find(name);
        if (fn == nullptr) throw std::invalid_argument("fuzz_run: unknown property '" + name + "'");
        fns.push_back(fn);
    }

    const auto start = std::chrono::steady_clock::now();
    FuzzReport report;
    report.trials = trials;
    report.master_seed = master_seed;

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(master_seed, static_cast<std::uint64_t>(t));
        GenSpec spec = models[static_cast<std::size_t>(t) % models.size()];
        spec.seed = trial_seed;
        Graph g;
        try {
            g = gen_graph(spec);
        } catch (const ResourceError&) {
            ++report.resource_skips;
            continue;
        }
        const std::string graph_text = serialize_edge_list(g);
        for (std::size_t p = 0; p < fns.size(); ++p) {
            const std::uint64_t prop_seed = derive_seed(trial_seed, p);
            try {
                Rng rng(prop_seed);
                if (auto violation = (*fns[p])(g, rng)) {
                    report.failures.push_back(
                        {properties[p], graph_text, prop_seed, std::move(*violation)});
                }
            } catch (const ResourceError&) {
                ++report.resource_skips;
            } catch (const std::exception& e) {
                report.failures.push_back({properties[p], graph_text, prop_seed,
                                           std::string("unexpected error: ") + e.what()});
            }
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::optional<std::string> replay_property(std::string_view name, const Graph& g,
                                           std::uint64_t seed, const PropertyRegistry& registry) {
    const PropertyFn* fn = registry.find(name);
    if (fn == nullptr)
        throw std::invalid_argument("replay_property: unknown property '" + std::string(name) + "'");
    Rng rng(seed);
    return (*fn)(g, rng);
}

}  // namespace cnh
