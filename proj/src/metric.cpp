#include "ccnorm/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ccnorm {

double SparseSemiMetric::get(VertexId u, VertexId v) const {
    if (u == v) {
        return 0.0;
    }
    const auto& row = rows_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Entry& e, VertexId id) { return e.v < id; });
    if (it != row.end() && it->v == v) {
        return it->dist;
    }
    return 1.0;
}

std::size_t SparseSemiMetric::stored_entry_count() const {
    std::size_t total = 0;
    for (const auto& row : rows_) {
        total += row.size();
    }
    return total;
}

void SparseSemiMetric::validate() const {
    for (VertexId u = 0; u < rows_.size(); ++u) {
        const auto& row = rows_[u];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].v == u) {
                throw std::logic_error("diagonal entry stored");
            }
            if (row[i].v >= rows_.size()) {
                throw std::logic_error("entry id out of range");
            }
            if (i > 0 && row[i - 1].v >= row[i].v) {
                throw std::logic_error("row not sorted or has duplicates");
            }
            if (!(row[i].dist >= 0.0 && row[i].dist < 1.0)) {
                throw std::logic_error("stored distance outside [0,1)");
            }
            if (get(row[i].v, u) != row[i].dist) {
                throw std::logic_error("asymmetric entry");
            }
        }
    }
}

void SemiMetricBuilder::set(VertexId u, VertexId v, double dist) {
    if (u == v) {
        throw std::invalid_argument("diagonal is fixed at 0");
    }
    if (u >= rows_.size() || v >= rows_.size()) {
        throw std::invalid_argument("vertex out of range");
    }
    if (!(dist >= 0.0 && dist <= 1.0)) {
        throw std::invalid_argument("distance must be in [0,1]");
    }
    if (dist == 1.0) {
        return;  // absent pairs already read as 1
    }
    rows_[u].push_back({v, dist});
    rows_[v].push_back({u, dist});
}

SparseSemiMetric SemiMetricBuilder::build() {
    for (auto& row : rows_) {
        std::sort(row.begin(), row.end(),
                  [](const SparseSemiMetric::Entry& a, const SparseSemiMetric::Entry& b) { return a.v < b.v; });
        for (std::size_t i = 1; i < row.size(); ++i) {
            if (row[i - 1].v == row[i].v) {
                throw std::invalid_argument("pair set twice");
            }
        }
    }
    SparseSemiMetric z(std::move(rows_));
    rows_ = {};
    return z;
}

SparseSemiMetric correlation_metric(const CorrelationGraph& g) {
    const std::size_t n = g.n();
    std::vector<std::vector<SparseSemiMetric::Entry>> rows(n);

    // Dense scratch reused across source vertices; only touched slots are
    // reset, so each row costs O(Δ_u * Δ), not O(n).
    std::vector<std::uint32_t> common(n, 0);
    std::vector<VertexId> touched;

    for (VertexId u = 0; u < n; ++u) {
        touched.clear();
        // common[v] counts w with w ∈ N_u^+ and v ∈ N_w^+, i.e. |N_u^+ ∩ N_v^+|.
        for (VertexId w : g.pos_neighbors(u)) {
            for (VertexId v : g.pos_neighbors(w)) {
                if (common[v] == 0) {
                    touched.push_back(v);
                }
                ++common[v];
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = rows[u];
        row.reserve(touched.size());
        const double du = static_cast<double>(g.pos_degree(u));
        for (VertexId v : touched) {
            if (v != u) {
                const double inter = static_cast<double>(common[v]);
                const double uni = du + static_cast<double>(g.pos_degree(v)) - inter;
                row.push_back({v, 1.0 - inter / uni});
            }
            common[v] = 0;
        }
    }
    return SparseSemiMetric(std::move(rows));
}

SparseSemiMetric adjust_metric(const CorrelationGraph& g, const SparseSemiMetric& d,
                               const AdjustmentConfig& cfg) {
    if (!(cfg.round_up_threshold > 0.0 && cfg.round_up_threshold < 1.0)) {
        throw std::invalid_argument("round_up_threshold must be in (0,1)");
    }
    if (!(cfg.singleton_factor > 0.0)) {
        throw std::invalid_argument("singleton_factor must be positive");
    }
    const std::size_t n = d.n();

    // Step 3 condition, evaluated for every vertex against the original d
    // before any removal is applied.
    std::vector<char> raised(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        std::size_t near_negative = 0;
        for (const auto& e : d.row(u)) {
            if (e.dist <= cfg.round_up_threshold && !g.is_positive(u, e.v)) {
                ++near_negative;
            }
        }
        if (static_cast<double>(near_negative) >=
            cfg.singleton_factor * static_cast<double>(g.pos_degree(u))) {
            raised[u] = 1;
        }
    }

    // Steps 2 and 3 only remove entries, so f is d filtered.
    std::vector<std::vector<SparseSemiMetric::Entry>> rows(n);
    for (VertexId u = 0; u < n; ++u) {
        if (raised[u]) {
            continue;
        }
        for (const auto& e : d.row(u)) {
            if (raised[e.v]) {
                continue;
            }
            if (e.dist > cfg.round_up_threshold && !g.is_positive(u, e.v)) {
                continue;  // Step 2 round-up
            }
            rows[u].push_back(e);
        }
    }
    return SparseSemiMetric(std::move(rows));
}

std::vector<TriangleViolation> check_delta_triangle(const SparseSemiMetric& z, double delta) {
    if (delta < 1.0) {
        throw std::invalid_argument("delta >= 1 required");
    }
    constexpr double kEps = 1e-12;
    std::vector<TriangleViolation> violations;
    // A violating triple needs z_uw < 1 and z_vw < 1 at some apex w:
    // otherwise the right side is at least delta >= 1 >= z_uv.
    for (VertexId w = 0; w < z.n(); ++w) {
        const auto& row = z.row(w);
        for (std::size_t i = 0; i < row.size(); ++i) {
            for (std::size_t j = i + 1; j < row.size(); ++j) {
                const VertexId u = row[i].v;
                const VertexId v = row[j].v;
                const double lhs = z.get(u, v);
                const double rhs = delta * (row[i].dist + row[j].dist);
                if (lhs > rhs + kEps) {
                    violations.push_back({u, v, w, lhs, rhs});
                }
            }
        }
    }
    return violations;
}

void write_metric(const SparseSemiMetric& z, std::ostream& out) {
    char buf[64];
    for (VertexId u = 0; u < z.n(); ++u) {
        for (const auto& e : z.row(u)) {
            if (e.v > u) {
                std::snprintf(buf, sizeof(buf), "%.17g", e.dist);
                out << u << " " << e.v << " " << buf << "\n";
            }
        }
    }
}

}  // namespace ccnorm
