#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccnorm/graph.hpp"
#include "ccnorm/metric.hpp"
#include "ccnorm/rounding.hpp"

namespace ccnorm {

struct NamedGraph {
    std::string name;  // includes generator parameters and seed for replay
    CorrelationGraph graph;
};

struct Finding {
    std::string suite;
    std::string instance;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::size_t instances = 0;
    std::vector<Finding> findings;
    double max_ratio = 0.0;  // observed maximum checked-quantity / bound-denominator, informational
    std::string max_ratio_instance;

    bool ok() const { return findings.empty(); }
};

// 50 seeded random graphs (n=60, q cycling {0.05, 0.2, 0.5} by seed) plus
// star(n) and neg_matching(n) families up to n = 60.
std::vector<NamedGraph> triangle_corpus(std::uint64_t seed_base = 0);

// Every named generator instance with n <= max_n.
std::vector<NamedGraph> named_small_graphs(std::size_t max_n);

// trials seeded random labelings with n <= max_n plus named_small_graphs.
std::vector<NamedGraph> small_corpus(std::size_t trials, std::uint64_t seed_base, std::size_t max_n);

// d is an exact semi-metric and f a 10/7-semi-metric on every instance.
SuiteReport run_triangle_suite(const std::vector<NamedGraph>& corpus, const AdjustmentConfig& cfg = {});

// Per-vertex rounding guarantee ALG(u) <= 12 * y_u(f) on every instance.
SuiteReport run_guarantee_suite(const std::vector<NamedGraph>& corpus, const AdjustmentConfig& cfg = {},
                                const RoundingParams& params = {});

// Fractional-cost ceilings against brute-force optima (instances must have
// n small enough for exhaustive search): l-infinity <= 56 OPT,
// lp <= 529 OPT for p in {1, 1.5, 2, 3}, and the l1 split
// (positive part <= 34 OPT, negative part <= 40 OPT).
SuiteReport run_cost_bounds_suite(const std::vector<NamedGraph>& corpus, const AdjustmentConfig& cfg = {});

// Dual-fitting certificate on regular_circulant instances with n <= max_n:
// bound <= brute-force edge optimum and per-edge feasibility.
SuiteReport run_dual_suite(std::size_t max_n = 8);

// End-to-end all-norms ceiling: pipeline clustering norm <= 6348 * OPT(p)
// for p in {1, 1.5, 2, 3, inf}; records the observed maximum ratio.
SuiteReport run_oracle_ratio_suite(const std::vector<NamedGraph>& corpus, const AdjustmentConfig& cfg = {},
                                   const RoundingParams& params = {});

}  // namespace ccnorm
