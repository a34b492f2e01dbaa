#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ccnorm {

using VertexId = std::uint32_t;

// Complete signed graph on n vertices, stored as positive adjacency sets.
// Every vertex carries a positive self-loop: u is always in pos_neighbors(u)
// and pos_degree(u) counts it. Any distinct pair that is not positively
// adjacent is a negative edge; negative edges are never materialized.
// Immutable after construction, safe for concurrent reads.
class CorrelationGraph {
public:
    CorrelationGraph() = default;

    // positive_edges: distinct vertex pairs in any order; duplicates are
    // deduplicated. Self-pairs are rejected (self-loops are implicit).
    CorrelationGraph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& positive_edges);

    std::size_t n() const { return pos_adj_.size(); }

    // Sorted ascending, includes u itself.
    const std::vector<VertexId>& pos_neighbors(VertexId u) const { return pos_adj_[u]; }

    // |N_u^+|, self-loop included.
    std::size_t pos_degree(VertexId u) const { return pos_adj_[u].size(); }

    // Degree in the positive subgraph without the self-loop.
    std::size_t loop_free_degree(VertexId u) const { return pos_adj_[u].size() - 1; }

    // True also for u == v (the self-loop).
    bool is_positive(VertexId u, VertexId v) const;

    std::size_t max_pos_degree() const;

    // Number of distinct positive edges, self-loops excluded.
    std::size_t positive_edge_count() const;

    bool operator==(const CorrelationGraph&) const = default;

private:
    std::vector<std::vector<VertexId>> pos_adj_;
};

// Text format: '#' comment lines, then "n <N>", then one "<u> <v>" line per
// positive edge. Undeclared distinct pairs are negative. Throws
// std::runtime_error with the offending line number on malformed input,
// out-of-range vertices, or explicitly listed self-edges.
CorrelationGraph read_graph(std::istream& in);
CorrelationGraph load_graph(const std::string& path);

// Canonical form: "n <N>" then edges with u < v, sorted lexicographically.
void write_graph(const CorrelationGraph& g, std::ostream& out);
void save_graph(const CorrelationGraph& g, const std::string& path);

// Named instance families.
CorrelationGraph make_star(std::size_t n);
CorrelationGraph make_complete_positive(std::size_t n);
CorrelationGraph make_empty_positive(std::size_t n);
CorrelationGraph make_neg_matching(std::size_t n);   // n even
CorrelationGraph make_random(std::size_t n, double q, std::uint64_t seed);
CorrelationGraph make_regular_circulant(std::size_t n, std::size_t degree);  // degree even, < n

struct GeneratorParams {
    std::size_t n = 0;
    double q = 0.5;
    std::uint64_t seed = 0;
    std::size_t degree = 2;
};

// kind: star, complete_positive, empty_positive, neg_matching, random,
// regular_circulant ('-' accepted for '_'). Throws std::invalid_argument on
// unknown kinds or invalid parameters.
CorrelationGraph make_graph(const std::string& kind, const GeneratorParams& params);

}  // namespace ccnorm
