#include "ccnorm/rounding.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>

namespace ccnorm {

Clustering clustering_from_labels(const std::vector<std::uint32_t>& labels) {
    Clustering c;
    c.n = labels.size();
    c.assignment.assign(labels.size(), 0);
    std::vector<std::int64_t> remap;
    std::vector<std::uint32_t> seen_order;
    for (VertexId u = 0; u < labels.size(); ++u) {
        const std::uint32_t raw = labels[u];
        if (raw >= remap.size()) {
            remap.resize(raw + 1, -1);
        }
        if (remap[raw] < 0) {
            remap[raw] = static_cast<std::int64_t>(c.clusters.size());
            c.clusters.emplace_back();
        }
        const auto idx = static_cast<std::uint32_t>(remap[raw]);
        c.assignment[u] = idx;
        c.clusters[idx].push_back(u);
    }
    return c;
}

void validate_partition(const Clustering& c, std::size_t n) {
    if (c.n != n || c.assignment.size() != n) {
        throw std::invalid_argument("clustering vertex count mismatch");
    }
    std::size_t covered = 0;
    for (std::size_t idx = 0; idx < c.clusters.size(); ++idx) {
        if (c.clusters[idx].empty()) {
            throw std::invalid_argument("empty cluster");
        }
        for (VertexId u : c.clusters[idx]) {
            if (u >= n || c.assignment[u] != idx) {
                throw std::invalid_argument("assignment and clusters disagree");
            }
            ++covered;
        }
    }
    if (covered != n) {
        throw std::invalid_argument("clusters do not cover every vertex exactly once");
    }
}

namespace {

// L(u) over the currently unclustered vertices. Summation order is the row
// order, so the incremental and naive paths produce bit-identical scores.
double ball_score(const SparseSemiMetric& z, VertexId u, double r, const std::vector<char>& clustered) {
    double score = r;  // self term, z_uu = 0
    for (const auto& e : z.row(u)) {
        if (e.dist <= r && !clustered[e.v]) {
            score += r - e.dist;
        }
    }
    return score;
}

std::vector<VertexId> collect_ball(const SparseSemiMetric& z, VertexId center, double radius,
                                   const std::vector<char>& clustered) {
    std::vector<VertexId> members;
    for (const auto& e : z.row(center)) {
        if (e.dist <= radius && !clustered[e.v]) {
            members.push_back(e.v);
        }
    }
    members.push_back(center);
    std::sort(members.begin(), members.end());
    return members;
}

Clustering finish(std::size_t n, std::vector<std::vector<VertexId>> clusters) {
    Clustering c;
    c.n = n;
    c.assignment.assign(n, 0);
    for (std::size_t idx = 0; idx < clusters.size(); ++idx) {
        for (VertexId u : clusters[idx]) {
            c.assignment[u] = static_cast<std::uint32_t>(idx);
        }
    }
    c.clusters = std::move(clusters);
    return c;
}

Clustering round_naive(const SparseSemiMetric& z, double r, std::vector<VertexId>* centers_out) {
    const std::size_t n = z.n();
    std::vector<char> clustered(n, 0);
    std::vector<std::vector<VertexId>> clusters;
    std::size_t remaining = n;
    while (remaining > 0) {
        VertexId best = 0;
        double best_score = -1.0;
        for (VertexId u = 0; u < n; ++u) {
            if (clustered[u]) {
                continue;
            }
            const double score = ball_score(z, u, r, clustered);
            if (score > best_score) {
                best_score = score;
                best = u;
            }
        }
        auto members = collect_ball(z, best, 2 * r, clustered);
        for (VertexId m : members) {
            clustered[m] = 1;
        }
        remaining -= members.size();
        clusters.push_back(std::move(members));
        if (centers_out) {
            centers_out->push_back(best);
        }
    }
    return finish(n, clusters);
}

// Lazy max-heap over cached scores. Scores only decrease as vertices leave,
// so a popped entry that matches its cached value and is not dirty is the
// true argmax; stale and dirty entries are re-pushed after recomputation.
// Each stored metric entry triggers at most one recomputation, giving
// O((n + entries) log n) total heap work.
Clustering round_heap(const SparseSemiMetric& z, double r, std::vector<VertexId>* centers_out) {
    const std::size_t n = z.n();
    // Order: higher score first, then smaller id.
    struct Candidate {
        double score;
        VertexId u;
        bool operator<(const Candidate& o) const {
            if (score != o.score) {
                return score < o.score;
            }
            return u > o.u;
        }
    };
    std::vector<char> clustered(n, 0);
    std::vector<char> dirty(n, 0);
    std::vector<double> cached(n, 0.0);
    std::priority_queue<Candidate> heap;
    for (VertexId u = 0; u < n; ++u) {
        cached[u] = ball_score(z, u, r, clustered);
        heap.push({cached[u], u});
    }

    std::vector<std::vector<VertexId>> clusters;
    std::size_t remaining = n;
    while (remaining > 0) {
        const Candidate top = heap.top();
        heap.pop();
        if (clustered[top.u] || top.score != cached[top.u]) {
            continue;  // superseded entry
        }
        if (dirty[top.u]) {
            dirty[top.u] = 0;
            cached[top.u] = ball_score(z, top.u, r, clustered);
            heap.push({cached[top.u], top.u});
            continue;
        }
        auto members = collect_ball(z, top.u, 2 * r, clustered);
        for (VertexId m : members) {
            clustered[m] = 1;
        }
        remaining -= members.size();
        for (VertexId m : members) {
            for (const auto& e : z.row(m)) {
                if (e.dist <= r && !clustered[e.v]) {
                    dirty[e.v] = 1;
                }
            }
        }
        clusters.push_back(std::move(members));
        if (centers_out) {
            centers_out->push_back(top.u);
        }
    }
    return finish(n, clusters);
}

}  // namespace

Clustering kmz_round(const SparseSemiMetric& z, const RoundingParams& params,
                     std::vector<VertexId>* centers_out) {
    if (!(params.radius > 0.0 && params.radius < 0.5)) {
        throw std::invalid_argument("radius must be in (0, 1/2)");
    }
    if (centers_out) {
        centers_out->clear();
    }
    if (params.use_naive_argmax) {
        return round_naive(z, params.radius, centers_out);
    }
    return round_heap(z, params.radius, centers_out);
}

PipelineResult round_pipeline(const CorrelationGraph& g, const AdjustmentConfig& cfg,
                              const RoundingParams& params) {
    using clock = std::chrono::steady_clock;
    const auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    const auto t0 = clock::now();
    SparseSemiMetric d = correlation_metric(g);
    const auto t1 = clock::now();
    SparseSemiMetric f = adjust_metric(g, d, cfg);
    const auto t2 = clock::now();
    Clustering c = kmz_round(f, params);
    const auto t3 = clock::now();
    return PipelineResult{std::move(c), std::move(d), std::move(f), ms(t0, t1), ms(t1, t2), ms(t2, t3)};
}

}  // namespace ccnorm
