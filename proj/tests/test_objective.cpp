#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ccnorm/baselines.hpp"
#include "ccnorm/graph.hpp"
#include "ccnorm/metric.hpp"
#include "ccnorm/objective.hpp"
#include "ccnorm/rng.hpp"
#include "ccnorm/rounding.hpp"

using namespace ccnorm;

namespace {

CorrelationGraph bad_triangle() {
    return CorrelationGraph(3, {{0, 1}, {0, 2}});
}

// 0/1 metric of a clustering: distance 0 inside clusters, 1 across.
SparseSemiMetric cluster_indicator_metric(const Clustering& c) {
    SemiMetricBuilder builder(c.n);
    for (const auto& cluster : c.clusters) {
        for (std::size_t i = 0; i < cluster.size(); ++i) {
            for (std::size_t j = i + 1; j < cluster.size(); ++j) {
                builder.set(cluster[i], cluster[j], 0.0);
            }
        }
    }
    return builder.build();
}

Clustering random_clustering(std::size_t n, SplitMix64& rng) {
    std::vector<std::uint32_t> labels(n);
    const std::uint64_t groups = 1 + rng.next_below(n);
    for (auto& l : labels) {
        l = static_cast<std::uint32_t>(rng.next_below(groups));
    }
    return clustering_from_labels(labels);
}

}  // namespace

TEST_CASE("disagreement vector examples") {
    CHECK(disagreement_vector(make_star(5), one_cluster(5)).y ==
          std::vector<std::uint32_t>{0, 3, 3, 3, 3});
    CHECK(disagreement_vector(make_complete_positive(5), singletons(5)).y ==
          std::vector<std::uint32_t>{4, 4, 4, 4, 4});
    CHECK(disagreement_vector(bad_triangle(), one_cluster(3)).y ==
          std::vector<std::uint32_t>{0, 1, 1});
}

TEST_CASE("disagreement vector rejects partition mismatches") {
    CHECK_THROWS_AS(disagreement_vector(make_star(5), one_cluster(4)), std::invalid_argument);
}

TEST_CASE("handshake: vertex sum is twice the edge count") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.next_below(20);
        const CorrelationGraph g = make_random(n, 0.4, rng.next());
        const Clustering c = random_clustering(n, rng);
        const DisagreementVector y = disagreement_vector(g, c);
        CHECK(y.sum() % 2 == 0);
        CHECK(y.sum() == 2 * edge_disagreement_count(g, c));
    }
}

TEST_CASE("lp_norm examples") {
    DisagreementVector y;
    y.y = {0, 1, 1};
    CHECK(lp_norm(y, NormSpec{1.0}) == 2.0);
    CHECK(lp_norm(y, NormSpec{2.0}) == doctest::Approx(1.4142135623730951));
    CHECK(lp_norm(y, NormSpec::inf()) == 1.0);

    DisagreementVector zero;
    zero.y = {0, 0, 0};
    CHECK(lp_norm(zero, NormSpec{1.0}) == 0.0);
    CHECK(lp_norm(zero, NormSpec{3.5}) == 0.0);
    CHECK(lp_norm(zero, NormSpec::inf()) == 0.0);

    CHECK_THROWS_AS(lp_norm(y, NormSpec{0.5}), std::invalid_argument);
}

TEST_CASE("lp_norm survives values that would overflow without max-factoring") {
    std::vector<double> big(4, 1e300);
    CHECK(lp_norm(big, NormSpec{3.0}) == doctest::Approx(1e300 * std::pow(4.0, 1.0 / 3.0)));
}

TEST_CASE("lp_norm is non-increasing in p and bounded by the max entry") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        DisagreementVector y;
        const std::size_t n = 1 + rng.next_below(12);
        for (std::size_t i = 0; i < n; ++i) {
            y.y.push_back(static_cast<std::uint32_t>(rng.next_below(10)));
        }
        const double ps[] = {1.0, 1.5, 2.0, 3.0, 10.0};
        double previous = std::numeric_limits<double>::infinity();
        const double ymax = y.max();
        for (double p : ps) {
            const double value = lp_norm(y, NormSpec{p});
            CHECK(value <= previous * (1 + 1e-12));
            CHECK(value >= ymax - 1e-12);
            CHECK(value <= std::pow(static_cast<double>(n), 1.0 / p) * ymax + 1e-12);
            previous = value;
        }
        CHECK(lp_norm(y, NormSpec::inf()) == ymax);
    }
}

TEST_CASE("norm spec parsing") {
    CHECK(NormSpec::parse("inf").is_inf());
    CHECK(NormSpec::parse("2").p == 2.0);
    CHECK(NormSpec::parse("1.5").p == 1.5);
    CHECK_THROWS_AS(NormSpec::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(NormSpec::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(NormSpec::parse("2x"), std::invalid_argument);
    CHECK(NormSpec{2.0}.token() == "2");
    CHECK(NormSpec::inf().token() == "inf");
    CHECK(NormSpec{1.5}.token() == "1.5");
}

TEST_CASE("edge disagreement counts") {
    CHECK(edge_disagreement_count(make_star(5), one_cluster(5)) == 6);
    CHECK(edge_disagreement_count(make_star(5), singletons(5)) == 4);
    CHECK(edge_disagreement_count(bad_triangle(), one_cluster(3)) == 1);
}

TEST_CASE("fractional cost of the correlation metric") {
    const CorrelationGraph tri = bad_triangle();
    const SparseSemiMetric d = correlation_metric(tri);
    const auto frac = per_vertex_fractional(tri, d);
    for (double value : frac) {
        CHECK(value == doctest::Approx(2.0 / 3.0));
    }
    CHECK(fractional_cost(tri, d, NormSpec{1.0}) == doctest::Approx(2.0));

    const CorrelationGraph star = make_star(5);
    const SparseSemiMetric ds = correlation_metric(star);
    CHECK(fractional_cost(star, ds, NormSpec::inf()) == doctest::Approx(2.4));
}

TEST_CASE("fractional cost with the all-ones metric is the degree norm") {
    const CorrelationGraph g = make_star(5);
    const SparseSemiMetric ones(5);
    CHECK(per_vertex_fractional(g, ones) == std::vector<double>{4, 1, 1, 1, 1});
    CHECK(fractional_cost(g, ones, NormSpec{1.0}) == 8.0);
    CHECK(fractional_cost(g, ones, NormSpec::inf()) == 4.0);

    const SparseSemiMetric zeros = correlation_metric(make_complete_positive(6));
    CHECK(per_vertex_fractional(make_complete_positive(6), zeros) ==
          std::vector<double>(6, 0.0));
}

TEST_CASE("rounding guarantee checker") {
    SUBCASE("bad triangle pipeline satisfies the 12x bound") {
        const CorrelationGraph g = bad_triangle();
        const PipelineResult res = round_pipeline(g);
        CHECK(check_rounding_guarantee(g, res.adjusted, res.clustering, 12.0).empty());
    }
    SUBCASE("equality case passes at factor 5") {
        // all-ones metric and singletons: ALG(u) equals the fractional cost
        const CorrelationGraph g = make_star(5);
        const SparseSemiMetric ones(5);
        CHECK(check_rounding_guarantee(g, ones, singletons(5), 5.0).empty());
    }
    SUBCASE("constructed violation is caught") {
        const CorrelationGraph g = make_empty_positive(3);
        const SparseSemiMetric ones(3);
        const auto violations = check_rounding_guarantee(g, ones, one_cluster(3), 12.0);
        CHECK(violations == std::vector<VertexId>{0, 1, 2});  // ALG=2, fractional=0
    }
}

TEST_CASE("bad triangle counting") {
    CHECK(bad_triangle_count(bad_triangle()) == 1);
    CHECK(bad_triangle_count(make_star(5)) == 6);
    CHECK(bad_triangle_count(make_regular_circulant(4, 2)) == 4);
    CHECK(bad_triangle_count(make_complete_positive(8)) == 0);
    CHECK(bad_triangle_count(make_empty_positive(8)) == 0);
}

TEST_CASE("bad triangle count matches the brute-force triple scan") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + rng.next_below(12);
        const CorrelationGraph g = make_random(n, 0.5, rng.next());
        std::uint64_t expected = 0;
        for (VertexId a = 0; a < n; ++a) {
            for (VertexId b = a + 1; b < n; ++b) {
                for (VertexId c = b + 1; c < n; ++c) {
                    const int positives = int(g.is_positive(a, b)) + int(g.is_positive(a, c)) +
                                          int(g.is_positive(b, c));
                    if (positives == 2) {
                        ++expected;
                    }
                }
            }
        }
        CHECK(bad_triangle_count(g) == expected);
    }
}

TEST_CASE("dual lower bound examples") {
    const DualBound circulant = dual_lower_bound(make_regular_circulant(4, 2));
    CHECK(circulant.value == 1.0);  // 4 bad triangles / (2 * 2)
    CHECK(circulant.is_regular);

    const DualBound complete = dual_lower_bound(make_complete_positive(6));
    CHECK(complete.value == 0.0);
    CHECK(complete.is_regular);

    const DualBound empty = dual_lower_bound(make_empty_positive(4));
    CHECK(empty.value == 0.0);
    CHECK(empty.is_regular);

    const DualBound star = dual_lower_bound(make_star(5));
    CHECK(star.value == 0.75);  // 6 / (2 * 4) with the max loop-free degree
    CHECK_FALSE(star.is_regular);

    // bounds sit below the brute-force edge optima: 2 for the 4-cycle, 3 for star(5)
    const double circulant_opt =
        brute_force_opt(make_regular_circulant(4, 2), NormSpec{1.0}).best_value / 2.0;
    CHECK(circulant_opt == 2.0);
    CHECK(circulant.value <= circulant_opt);
    const double star_opt = brute_force_opt(make_star(5), NormSpec{1.0}).best_value / 2.0;
    CHECK(star_opt == 3.0);
    CHECK(star.value <= star_opt);
}

TEST_CASE("dual bound undercuts every clustering") {
    std::vector<CorrelationGraph> graphs = {make_regular_circulant(6, 2), make_regular_circulant(7, 4),
                                            make_star(6), make_random(7, 0.5, 2)};
    for (const auto& g : graphs) {
        const DualBound bound = dual_lower_bound(g);
        double best = std::numeric_limits<double>::infinity();
        for_each_partition(g.n(), [&](const std::vector<std::uint32_t>& labels) {
            const Clustering c = clustering_from_labels(labels);
            best = std::min(best, static_cast<double>(edge_disagreement_count(g, c)));
        });
        CHECK(bound.value <= best + 1e-9);
    }
}

TEST_CASE("dual feasibility holds edge by edge") {
    CHECK(dual_feasibility_violations(make_regular_circulant(8, 4)).empty());
    CHECK(dual_feasibility_violations(make_star(7)).empty());
    CHECK(dual_feasibility_violations(make_neg_matching(8)).empty());
    CHECK(dual_feasibility_violations(make_random(12, 0.5, 4)).empty());
}

TEST_CASE("fractional cost of a 0/1 clustering metric equals the integral norm") {
    SplitMix64 rng(17);
    const NormSpec ps[] = {NormSpec{1.0}, NormSpec{2.0}, NormSpec::inf()};
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng.next_below(12);
        const CorrelationGraph g = make_random(n, 0.4, rng.next());
        const Clustering c = random_clustering(n, rng);
        const SparseSemiMetric z = cluster_indicator_metric(c);
        const DisagreementVector y = disagreement_vector(g, c);
        for (const auto& p : ps) {
            CHECK(fractional_cost(g, z, p) == doctest::Approx(lp_norm(y, p)).epsilon(1e-9));
        }
    }
}

TEST_CASE("fractional l1 parts sum to the l1 fractional cost") {
    const CorrelationGraph g = make_random(20, 0.3, 1);
    const SparseSemiMetric d = correlation_metric(g);
    const SparseSemiMetric f = adjust_metric(g, d);
    const FractionalL1Parts parts = fractional_l1_parts(g, f);
    CHECK(parts.positive + parts.negative ==
          doctest::Approx(fractional_cost(g, f, NormSpec{1.0})));
    CHECK(parts.positive >= 0.0);
    CHECK(parts.negative >= 0.0);
}
