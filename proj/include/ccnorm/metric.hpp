#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ccnorm/graph.hpp"

namespace ccnorm {

// Symmetric pairwise distances on [0,1]. Only values < 1 are stored; an
// absent pair reads as 1 and the diagonal as 0. Rows are sorted by neighbor
// id and mirror each other exactly. Immutable once built.
class SparseSemiMetric {
public:
    struct Entry {
        VertexId v;
        double dist;
        bool operator==(const Entry&) const = default;
    };

    explicit SparseSemiMetric(std::size_t n) : rows_(n) {}

    // rows must already be symmetric, sorted by id, diagonal-free, with all
    // values in [0,1). validate() checks this; construction does not.
    explicit SparseSemiMetric(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {}

    std::size_t n() const { return rows_.size(); }

    double get(VertexId u, VertexId v) const;

    const std::vector<Entry>& row(VertexId u) const { return rows_[u]; }

    // Directed entry count (each stored pair counts twice).
    std::size_t stored_entry_count() const;

    // Throws std::logic_error if a structural invariant is broken.
    void validate() const;

    bool operator==(const SparseSemiMetric&) const = default;

private:
    std::vector<std::vector<Entry>> rows_;
};

// Pairwise construction for tests and for encoding clusterings as 0/1
// metrics. set() is write-once per pair; a value of exactly 1 is dropped
// (absent pairs already read as 1).
class SemiMetricBuilder {
public:
    explicit SemiMetricBuilder(std::size_t n) : rows_(n) {}
    void set(VertexId u, VertexId v, double dist);
    SparseSemiMetric build();

private:
    std::vector<std::vector<SparseSemiMetric::Entry>> rows_;
};

// Correlation metric: d_uv = 1 - |N_u^+ ∩ N_v^+| / |N_u^+ ∪ N_v^+|, stored
// for every pair with a common positive neighbor (all other pairs read 1).
// Pairs are found by two-hop positive-path enumeration, touching
// O(sum_u Δ_u^2) candidates, never all n^2 pairs.
SparseSemiMetric correlation_metric(const CorrelationGraph& g);

struct AdjustmentConfig {
    double round_up_threshold = 0.7;       // negative edges above this round to 1
    double singleton_factor = 10.0 / 3.0;  // near-negative count >= factor * Δ_u isolates u
};

// Adjusted correlation metric. Step 2 rounds every negative edge with
// d > round_up_threshold (strict) up to 1. Step 3 isolates each u whose
// count of negative neighbors at distance <= round_up_threshold (non-strict,
// measured on the original d in one frozen pass) reaches
// singleton_factor * Δ_u, raising row u and its mirrored entries to 1.
SparseSemiMetric adjust_metric(const CorrelationGraph& g, const SparseSemiMetric& d,
                               const AdjustmentConfig& cfg = {});

struct TriangleViolation {
    VertexId u, v, w;  // z_uv > delta * (z_uw + z_vw)
    double lhs;
    double rhs;
};

// All triples violating z_uv <= delta * (z_uw + z_vw) + 1e-12. Only triples
// with two stored distances at a common apex can violate when delta >= 1, so
// enumeration is restricted to those.
std::vector<TriangleViolation> check_delta_triangle(const SparseSemiMetric& z, double delta);

// Dump format: "<u> <v> <dist>" for stored pairs with u < v, sorted,
// 17 significant digits.
void write_metric(const SparseSemiMetric& z, std::ostream& out);

}  // namespace ccnorm
