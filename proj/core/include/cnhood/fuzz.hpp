#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnhood/generators.hpp"
#include "cnhood/graph.hpp"
#include "cnhood/rng.hpp"

namespace cnh {

// A property takes a freshly generated connected graph plus a deterministic
// per-trial randomness source, and reports a human-readable violation
// (nullopt = pass). ResourceError means "instance too big", which the
// fuzzer counts separately from violations.
using PropertyFn = std::function<std::optional<std::string>(const Graph&, Rng&)>;

class PropertyRegistry {
public:
    void add(std::string name, PropertyFn fn);
    const PropertyFn* find(std::string_view name) const;
    std::vector<std::string> names() const;

private:
    std::vector<std::pair<std::string, PropertyFn>> props_;
};

// Checks for every theorem, lemma and cross-construction identity the
// library implements: theorem1, lemma2a_connected, lemma2b_tree_iff_block,
// construction_equiv, forster, eq1_bound, strictness_iff_nonblock, rayleigh,
// theorem3, caro_wei, expectation_avg, resistance_oracle.
const PropertyRegistry& builtin_properties();

struct FuzzFailure {
    std::string property;
    std::string graph;       // canonical edge-list text, ready to replay
    std::uint64_t seed = 0;  // the rng seed the property ran with
    std::string detail;
};

struct FuzzReport {
    int trials = 0;
    std::vector<FuzzFailure> failures;
    int resource_skips = 0;  // instances past a hard cap; not violations
    double elapsed_seconds = 0.0;
    std::uint64_t master_seed = 0;
};

// Runs each property against `trials` generated graphs, cycling through
// `models` and deriving every per-trial seed from (master_seed, trial), so
// identical arguments reproduce identical reports (modulo elapsed time).
FuzzReport fuzz_run(const std::vector<GenSpec>& models, int trials,
                    const std::vector<std::string>& properties, std::uint64_t master_seed,
                    const PropertyRegistry& registry = builtin_properties());

// Re-runs one property exactly as a recorded failure did.
std::optional<std::string> replay_property(std::string_view name, const Graph& g,
                                           std::uint64_t seed,
                                           const PropertyRegistry& registry = builtin_properties());

}  // namespace cnh
