#include "ccnorm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ccnorm/rng.hpp"

namespace ccnorm {

Clustering pivot(const CorrelationGraph& g, std::uint64_t seed) {
    const std::size_t n = g.n();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(seed);
    shuffle(order, rng);

    std::vector<char> taken(n, 0);
    std::vector<std::vector<VertexId>> clusters;
    for (VertexId u : order) {
        if (taken[u]) {
            continue;
        }
        std::vector<VertexId> members;
        for (VertexId v : g.pos_neighbors(u)) {
            if (!taken[v]) {
                members.push_back(v);  // includes u via its self-loop
                taken[v] = 1;
            }
        }
        clusters.push_back(std::move(members));
    }

    Clustering c;
    c.n = n;
    c.assignment.assign(n, 0);
    for (std::size_t idx = 0; idx < clusters.size(); ++idx) {
        for (VertexId v : clusters[idx]) {
            c.assignment[v] = static_cast<std::uint32_t>(idx);
        }
    }
    c.clusters = std::move(clusters);
    return c;
}

Clustering singletons(std::size_t n) {
    Clustering c;
    c.n = n;
    c.assignment.resize(n);
    std::iota(c.assignment.begin(), c.assignment.end(), 0);
    c.clusters.resize(n);
    for (VertexId u = 0; u < n; ++u) {
        c.clusters[u] = {u};
    }
    return c;
}

Clustering one_cluster(std::size_t n) {
    Clustering c;
    c.n = n;
    c.assignment.assign(n, 0);
    c.clusters.emplace_back(n);
    std::iota(c.clusters[0].begin(), c.clusters[0].end(), 0);
    return c;
}

void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    if (n == 0) {
        return;
    }
    // Restricted-growth strings in lexicographic order: labels[0] = 0 and
    // labels[i] <= max(labels[0..i-1]) + 1, each partition visited once.
    std::vector<std::uint32_t> labels(n, 0);
    std::vector<std::uint32_t> prefix_max(n, 0);  // max(labels[0..i-1]), index 0 unused
    while (true) {
        fn(labels);
        std::size_t i = n;
        while (--i > 0) {
            if (labels[i] <= prefix_max[i]) {
                break;
            }
        }
        if (i == 0) {
            return;
        }
        ++labels[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            labels[j] = 0;
            prefix_max[j] = std::max(prefix_max[j - 1], labels[j - 1]);
        }
    }
}

namespace {

constexpr std::size_t kMaxExhaustiveN = 12;

// y for a label vector, without building a Clustering.
void disagreements_from_labels(const CorrelationGraph& g, const std::vector<std::uint32_t>& labels,
                               std::vector<std::uint32_t>& cluster_size, std::vector<std::uint32_t>& y) {
    const std::size_t n = g.n();
    std::fill(cluster_size.begin(), cluster_size.end(), 0);
    for (VertexId u = 0; u < n; ++u) {
        ++cluster_size[labels[u]];
    }
    for (VertexId u = 0; u < n; ++u) {
        std::size_t pos_internal = 0;
        for (VertexId v : g.pos_neighbors(u)) {
            if (v != u && labels[v] == labels[u]) {
                ++pos_internal;
            }
        }
        const std::size_t pos_cut = g.loop_free_degree(u) - pos_internal;
        const std::size_t neg_internal = cluster_size[labels[u]] - 1 - pos_internal;
        y[u] = static_cast<std::uint32_t>(pos_cut + neg_internal);
    }
}

double norm_of_counts(const std::vector<std::uint32_t>& y, const NormSpec& p) {
    std::uint32_t ymax = 0;
    for (std::uint32_t v : y) {
        ymax = std::max(ymax, v);
    }
    if (ymax == 0 || p.is_inf()) {
        return static_cast<double>(ymax);
    }
    if (p.p == 1.0) {
        double total = 0.0;
        for (std::uint32_t v : y) {
            total += static_cast<double>(v);
        }
        return total;
    }
    double total = 0.0;
    for (std::uint32_t v : y) {
        if (v > 0) {
            total += std::pow(static_cast<double>(v) / ymax, p.p);
        }
    }
    return ymax * std::pow(total, 1.0 / p.p);
}

}  // namespace

std::vector<ExactResult> brute_force_opt_multi(const CorrelationGraph& g, const std::vector<NormSpec>& ps) {
    const std::size_t n = g.n();
    if (n > kMaxExhaustiveN) {
        throw std::invalid_argument("n too large for exhaustive enumeration (limit 12)");
    }
    for (const auto& p : ps) {
        if (std::isnan(p.p) || p.p < 1.0) {
            throw std::invalid_argument("p >= 1 required");
        }
    }

    std::vector<double> best_value(ps.size(), std::numeric_limits<double>::infinity());
    std::vector<std::vector<std::uint32_t>> best_labels(ps.size());
    std::uint64_t examined = 0;

    std::vector<std::uint32_t> cluster_size(n), y(n);
    for_each_partition(n, [&](const std::vector<std::uint32_t>& labels) {
        ++examined;
        disagreements_from_labels(g, labels, cluster_size, y);
        for (std::size_t k = 0; k < ps.size(); ++k) {
            const double value = norm_of_counts(y, ps[k]);
            if (value < best_value[k]) {
                best_value[k] = value;
                best_labels[k] = labels;
            }
        }
    });

    std::vector<ExactResult> results;
    results.reserve(ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) {
        results.push_back({best_value[k], clustering_from_labels(best_labels[k]), examined});
    }
    return results;
}

ExactResult brute_force_opt(const CorrelationGraph& g, const NormSpec& p) {
    return brute_force_opt_multi(g, {p})[0];
}

}  // namespace ccnorm
