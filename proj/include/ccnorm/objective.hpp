#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccnorm/graph.hpp"
#include "ccnorm/metric.hpp"
#include "ccnorm/rounding.hpp"

namespace ccnorm {

// Per-vertex count of incident disagreeing edges.
struct DisagreementVector {
    std::vector<std::uint32_t> y;

    std::uint64_t sum() const;
    std::uint32_t max() const;
};

// p >= 1 or infinity. JSON and the CLI spell infinity as "inf".
struct NormSpec {
    double p = 1.0;

    static NormSpec inf();
    static NormSpec parse(const std::string& token);  // throws std::invalid_argument
    bool is_inf() const;
    std::string token() const;
};

// y(u) = cut positive edges at u + internal negative edges at u; self-loops
// never count. Runs in O(sum_u Δ_u) plus cluster bookkeeping.
DisagreementVector disagreement_vector(const CorrelationGraph& g, const Clustering& c);

// Overflow-safe via max-factoring; 0 for the all-zero vector; the infinity
// spec returns the maximum entry. Rejects p < 1.
double lp_norm(const DisagreementVector& y, const NormSpec& p);
double lp_norm(const std::vector<double>& values, const NormSpec& p);

// Total disagreeing edges, i.e. sum_u y(u) / 2.
std::uint64_t edge_disagreement_count(const CorrelationGraph& g, const Clustering& c);

// Fractional per-vertex disagreements of a semi-metric z:
// y_u(z) = sum over positive neighbors of z_uv + sum over negative
// neighbors of (1 - z_uv). The negative sum only visits stored entries,
// since absent pairs contribute 1 - 1 = 0.
std::vector<double> per_vertex_fractional(const CorrelationGraph& g, const SparseSemiMetric& z);

// lp_norm of per_vertex_fractional.
double fractional_cost(const CorrelationGraph& g, const SparseSemiMetric& z, const NormSpec& p);

// Positive and negative parts of the l1 fractional cost:
// sum_u sum_{v in N_u^+} z_uv and sum_u sum_{v in N_u^-} (1 - z_uv).
struct FractionalL1Parts {
    double positive = 0.0;
    double negative = 0.0;
};
FractionalL1Parts fractional_l1_parts(const CorrelationGraph& g, const SparseSemiMetric& z);

// Vertices u whose clustering disagreements exceed factor * y_u(z) plus a
// 1e-9 relative slack. Empty result means the per-vertex rounding guarantee
// holds (factor 12 for the adjusted metric, 5 for an exact semi-metric).
std::vector<VertexId> check_rounding_guarantee(const CorrelationGraph& g, const SparseSemiMetric& z,
                                               const Clustering& c, double factor);

// Unordered distinct triples with exactly two positive edges and one
// negative edge, counted once at the apex (the vertex on both positive
// edges).
std::uint64_t bad_triangle_count(const CorrelationGraph& g);

struct DualBound {
    double value = 0.0;
    bool is_regular = false;
};

// Dual-fitting lower bound on the edge-disagreement optimum: |T| / (2δ)
// when the loop-free positive subgraph is δ-regular (certified), otherwise
// |T| / (2δ_max) as a general-graph extension.
DualBound dual_lower_bound(const CorrelationGraph& g);

// Edges whose bad-triangle load exceeds 2δ (δ_max when irregular), i.e.
// violations of dual feasibility for y_T = 1/(2δ). Scans all pairs; meant
// for small instances.
std::vector<std::pair<VertexId, VertexId>> dual_feasibility_violations(const CorrelationGraph& g);

}  // namespace ccnorm
