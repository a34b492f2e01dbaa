#pragma once

#include <cstdint>
#include <vector>

#include "ccnorm/graph.hpp"
#include "ccnorm/metric.hpp"

namespace ccnorm {

// Partition of [0,n). clusters are in creation order with ids sorted
// ascending inside each cluster; assignment maps each vertex to its
// cluster's index.
struct Clustering {
    std::size_t n = 0;
    std::vector<std::uint32_t> assignment;
    std::vector<std::vector<VertexId>> clusters;

    std::size_t cluster_count() const { return clusters.size(); }
};

// Relabels arbitrary labels into creation order (first appearance by
// vertex id becomes cluster 0, and so on).
Clustering clustering_from_labels(const std::vector<std::uint32_t>& labels);

// Throws std::invalid_argument if c is not a partition of [0,n).
void validate_partition(const Clustering& c, std::size_t n);

struct RoundingParams {
    double radius = 0.2;           // r; balls of radius r score centers, 2r forms clusters
    bool use_naive_argmax = false; // full rescan each round, for differential testing
};

// Iterative ball-growing rounding. Repeatedly picks the unclustered vertex
// maximizing L(u) = sum over unclustered v with z_uv <= r of (r - z_uv)
// (ties to the smallest id), clusters every unclustered v with z_uv <= 2r,
// and removes them. Deterministic. centers_out, when given, receives the
// chosen centers in creation order.
Clustering kmz_round(const SparseSemiMetric& z, const RoundingParams& params = {},
                     std::vector<VertexId>* centers_out = nullptr);

struct PipelineResult {
    Clustering clustering;
    SparseSemiMetric correlation;  // d
    SparseSemiMetric adjusted;     // f
    double t_metric_ms = 0.0;
    double t_adjust_ms = 0.0;
    double t_round_ms = 0.0;
};

// correlation_metric -> adjust_metric -> kmz_round. The clustering does not
// depend on any norm parameter; the adjusted metric is returned for the
// verification operations.
PipelineResult round_pipeline(const CorrelationGraph& g, const AdjustmentConfig& cfg = {},
                              const RoundingParams& params = {});

}  // namespace ccnorm
