#include "ccnorm/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ccnorm {

std::uint64_t DisagreementVector::sum() const {
    std::uint64_t total = 0;
    for (std::uint32_t v : y) {
        total += v;
    }
    return total;
}

std::uint32_t DisagreementVector::max() const {
    std::uint32_t best = 0;
    for (std::uint32_t v : y) {
        best = std::max(best, v);
    }
    return best;
}

NormSpec NormSpec::inf() {
    return NormSpec{std::numeric_limits<double>::infinity()};
}

bool NormSpec::is_inf() const {
    return std::isinf(p);
}

NormSpec NormSpec::parse(const std::string& token) {
    if (token == "inf") {
        return inf();
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a norm: " + token);
    }
    if (used != token.size() || std::isnan(value)) {
        throw std::invalid_argument("not a norm: " + token);
    }
    if (value < 1.0) {
        throw std::invalid_argument("p >= 1 required, got " + token);
    }
    return NormSpec{value};
}

std::string NormSpec::token() const {
    if (is_inf()) {
        return "inf";
    }
    if (p == static_cast<double>(static_cast<long long>(p))) {
        return std::to_string(static_cast<long long>(p));
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

DisagreementVector disagreement_vector(const CorrelationGraph& g, const Clustering& c) {
    validate_partition(c, g.n());
    const std::size_t n = g.n();
    DisagreementVector dv;
    dv.y.assign(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        const std::uint32_t cluster = c.assignment[u];
        std::size_t pos_internal = 0;
        for (VertexId v : g.pos_neighbors(u)) {
            if (v != u && c.assignment[v] == cluster) {
                ++pos_internal;
            }
        }
        const std::size_t pos_cut = g.loop_free_degree(u) - pos_internal;
        const std::size_t neg_internal = c.clusters[cluster].size() - 1 - pos_internal;
        dv.y[u] = static_cast<std::uint32_t>(pos_cut + neg_internal);
    }
    return dv;
}

namespace {

void require_valid_norm(const NormSpec& p) {
    if (std::isnan(p.p) || p.p < 1.0) {
        throw std::invalid_argument("p >= 1 required");
    }
}

double lp_norm_impl(const std::vector<double>& values, const NormSpec& p) {
    require_valid_norm(p);
    double vmax = 0.0;
    for (double v : values) {
        vmax = std::max(vmax, v);
    }
    if (vmax == 0.0 || p.is_inf()) {
        return vmax;
    }
    if (p.p == 1.0) {
        double total = 0.0;
        for (double v : values) {
            total += v;
        }
        return total;
    }
    // ||v||_p = vmax * (sum (v/vmax)^p)^(1/p) avoids overflow for large p.
    double total = 0.0;
    for (double v : values) {
        if (v > 0.0) {
            total += std::pow(v / vmax, p.p);
        }
    }
    return vmax * std::pow(total, 1.0 / p.p);
}

}  // namespace

double lp_norm(const DisagreementVector& y, const NormSpec& p) {
    std::vector<double> values(y.y.begin(), y.y.end());
    return lp_norm_impl(values, p);
}

double lp_norm(const std::vector<double>& values, const NormSpec& p) {
    return lp_norm_impl(values, p);
}

std::uint64_t edge_disagreement_count(const CorrelationGraph& g, const Clustering& c) {
    return disagreement_vector(g, c).sum() / 2;
}

std::vector<double> per_vertex_fractional(const CorrelationGraph& g, const SparseSemiMetric& z) {
    if (g.n() != z.n()) {
        throw std::invalid_argument("graph and metric size mismatch");
    }
    std::vector<double> cost(g.n(), 0.0);
    for (VertexId u = 0; u < g.n(); ++u) {
        double total = 0.0;
        for (VertexId v : g.pos_neighbors(u)) {
            if (v != u) {
                total += z.get(u, v);
            }
        }
        for (const auto& e : z.row(u)) {
            if (!g.is_positive(u, e.v)) {
                total += 1.0 - e.dist;
            }
        }
        cost[u] = total;
    }
    return cost;
}

double fractional_cost(const CorrelationGraph& g, const SparseSemiMetric& z, const NormSpec& p) {
    return lp_norm_impl(per_vertex_fractional(g, z), p);
}

FractionalL1Parts fractional_l1_parts(const CorrelationGraph& g, const SparseSemiMetric& z) {
    FractionalL1Parts parts;
    for (VertexId u = 0; u < g.n(); ++u) {
        for (VertexId v : g.pos_neighbors(u)) {
            if (v != u) {
                parts.positive += z.get(u, v);
            }
        }
        for (const auto& e : z.row(u)) {
            if (!g.is_positive(u, e.v)) {
                parts.negative += 1.0 - e.dist;
            }
        }
    }
    return parts;
}

std::vector<VertexId> check_rounding_guarantee(const CorrelationGraph& g, const SparseSemiMetric& z,
                                               const Clustering& c, double factor) {
    const DisagreementVector alg = disagreement_vector(g, c);
    const std::vector<double> frac = per_vertex_fractional(g, z);
    std::vector<VertexId> violations;
    for (VertexId u = 0; u < g.n(); ++u) {
        const double bound = factor * frac[u];
        if (static_cast<double>(alg.y[u]) > bound + 1e-9 * std::max(1.0, bound)) {
            violations.push_back(u);
        }
    }
    return violations;
}

std::uint64_t bad_triangle_count(const CorrelationGraph& g) {
    std::uint64_t count = 0;
    for (VertexId w = 0; w < g.n(); ++w) {
        const auto& nbrs = g.pos_neighbors(w);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] == w) {
                continue;
            }
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (nbrs[j] == w) {
                    continue;
                }
                if (!g.is_positive(nbrs[i], nbrs[j])) {
                    ++count;  // apex w, negative base (nbrs[i], nbrs[j])
                }
            }
        }
    }
    return count;
}

namespace {

std::size_t sorted_intersection_size(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) {
            ++count;
            ++ia;
            ++ib;
        } else if (*ia < *ib) {
            ++ia;
        } else {
            ++ib;
        }
    }
    return count;
}

// (is_regular, δ or δ_max) of the loop-free positive subgraph.
std::pair<bool, std::size_t> loop_free_regularity(const CorrelationGraph& g) {
    if (g.n() == 0) {
        return {true, 0};
    }
    std::size_t max_degree = 0;
    bool regular = true;
    const std::size_t first = g.loop_free_degree(0);
    for (VertexId u = 0; u < g.n(); ++u) {
        const std::size_t deg = g.loop_free_degree(u);
        max_degree = std::max(max_degree, deg);
        if (deg != first) {
            regular = false;
        }
    }
    return {regular, regular ? first : max_degree};
}

}  // namespace

DualBound dual_lower_bound(const CorrelationGraph& g) {
    const auto [regular, degree] = loop_free_regularity(g);
    if (degree == 0) {
        return {0.0, true};  // no positive edges, no bad triangles
    }
    const double triangles = static_cast<double>(bad_triangle_count(g));
    return {triangles / (2.0 * static_cast<double>(degree)), regular};
}

std::vector<std::pair<VertexId, VertexId>> dual_feasibility_violations(const CorrelationGraph& g) {
    const auto [regular, degree] = loop_free_regularity(g);
    std::vector<std::pair<VertexId, VertexId>> violations;
    if (degree == 0) {
        return violations;
    }
    for (VertexId u = 0; u < g.n(); ++u) {
        const auto& nu = g.pos_neighbors(u);
        for (VertexId v = u + 1; v < g.n(); ++v) {
            const auto& nv = g.pos_neighbors(v);
            std::size_t load = 0;
            if (g.is_positive(u, v)) {
                // bad triangles through a positive edge have their apex at u or v
                for (VertexId w : nu) {
                    if (w != u && w != v && !g.is_positive(w, v)) {
                        ++load;
                    }
                }
                for (VertexId w : nv) {
                    if (w != u && w != v && !g.is_positive(w, u)) {
                        ++load;
                    }
                }
            } else {
                // the negative edge is the base; every common positive neighbor is an apex
                load = sorted_intersection_size(nu, nv);
            }
            if (static_cast<double>(load) > 2.0 * static_cast<double>(degree)) {
                violations.emplace_back(u, v);
            }
        }
    }
    return violations;
}

}  // namespace ccnorm
