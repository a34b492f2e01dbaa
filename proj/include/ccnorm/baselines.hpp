#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ccnorm/graph.hpp"
#include "ccnorm/objective.hpp"
#include "ccnorm/rounding.hpp"

namespace ccnorm {

// Repeatedly takes a uniformly random unclustered vertex together with all
// its unclustered positive neighbors as the next cluster. The random order
// is one Fisher-Yates shuffle per seed, so runs are reproducible.
Clustering pivot(const CorrelationGraph& g, std::uint64_t seed);

Clustering singletons(std::size_t n);
Clustering one_cluster(std::size_t n);

struct ExactResult {
    double best_value = 0.0;
    Clustering best_clustering;
    std::uint64_t partitions_examined = 0;
};

// Visits every partition of [0,n) exactly once as a restricted-growth
// string (labels[0] = 0, labels[i] <= max(labels[0..i-1]) + 1), in
// lexicographic order.
void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& fn);

// Exhaustive minimum of the lp-norm over all partitions; ties keep the
// first partition in enumeration order. Guarded to n <= 12.
ExactResult brute_force_opt(const CorrelationGraph& g, const NormSpec& p);

// Same enumeration shared across several norms.
std::vector<ExactResult> brute_force_opt_multi(const CorrelationGraph& g, const std::vector<NormSpec>& ps);

}  // namespace ccnorm
