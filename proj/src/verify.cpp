#include "ccnorm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "ccnorm/baselines.hpp"
#include "ccnorm/objective.hpp"

namespace ccnorm {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void track_ratio(SuiteReport& report, double ratio, const std::string& instance) {
    if (ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.max_ratio_instance = instance;
    }
}

}  // namespace

std::vector<NamedGraph> triangle_corpus(std::uint64_t seed_base) {
    std::vector<NamedGraph> corpus;
    const double qs[3] = {0.05, 0.2, 0.5};
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::uint64_t seed = seed_base + i;
        const double q = qs[seed % 3];
        corpus.push_back({"random(n=60,q=" + fmt_double(q) + ",seed=" + std::to_string(seed) + ")",
                          make_random(60, q, seed)});
    }
    for (std::size_t n = 2; n <= 60; ++n) {
        corpus.push_back({"star(n=" + std::to_string(n) + ")", make_star(n)});
    }
    for (std::size_t n = 2; n <= 60; n += 2) {
        corpus.push_back({"neg_matching(n=" + std::to_string(n) + ")", make_neg_matching(n)});
    }
    return corpus;
}

std::vector<NamedGraph> named_small_graphs(std::size_t max_n) {
    std::vector<NamedGraph> corpus;
    for (std::size_t n = 2; n <= max_n; ++n) {
        corpus.push_back({"star(n=" + std::to_string(n) + ")", make_star(n)});
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        corpus.push_back({"complete_positive(n=" + std::to_string(n) + ")", make_complete_positive(n)});
        corpus.push_back({"empty_positive(n=" + std::to_string(n) + ")", make_empty_positive(n)});
    }
    for (std::size_t n = 2; n <= max_n; n += 2) {
        corpus.push_back({"neg_matching(n=" + std::to_string(n) + ")", make_neg_matching(n)});
    }
    for (std::size_t n = 3; n <= max_n; ++n) {
        for (std::size_t degree = 2; degree < n; degree += 2) {
            corpus.push_back({"regular_circulant(n=" + std::to_string(n) + ",degree=" + std::to_string(degree) + ")",
                              make_regular_circulant(n, degree)});
        }
    }
    return corpus;
}

std::vector<NamedGraph> small_corpus(std::size_t trials, std::uint64_t seed_base, std::size_t max_n) {
    if (max_n < 2) {
        throw std::invalid_argument("small_corpus: max_n >= 2 required");
    }
    std::vector<NamedGraph> corpus;
    const double qs[5] = {0.1, 0.3, 0.5, 0.7, 0.9};
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 2 + t % (max_n - 1);
        const double q = qs[t % 5];
        const std::uint64_t seed = seed_base + t;
        corpus.push_back({"random(n=" + std::to_string(n) + ",q=" + fmt_double(q) + ",seed=" + std::to_string(seed) + ")",
                          make_random(n, q, seed)});
    }
    auto named = named_small_graphs(max_n);
    corpus.insert(corpus.end(), std::make_move_iterator(named.begin()), std::make_move_iterator(named.end()));
    return corpus;
}

SuiteReport run_triangle_suite(const std::vector<NamedGraph>& corpus, const AdjustmentConfig& cfg) {
    SuiteReport report;
    report.suite = "triangle";
    for (const auto& [name, g] : corpus) {
        ++report.instances;
        const SparseSemiMetric d = correlation_metric(g);
        for (const auto& v : check_delta_triangle(d, 1.0)) {
            report.findings.push_back({report.suite, name,
                                       "d violates exact triangle inequality at (" + std::to_string(v.u) + "," +
                                           std::to_string(v.v) + "," + std::to_string(v.w) + "): " + fmt_double(v.lhs) +
                                           " > " + fmt_double(v.rhs)});
        }
        const SparseSemiMetric f = adjust_metric(g, d, cfg);
        for (const auto& v : check_delta_triangle(f, 10.0 / 7.0)) {
            report.findings.push_back({report.suite, name,
                                       "f violates 10/7 triangle inequality at (" + std::to_string(v.u) + "," +
                                           std::to_string(v.v) + "," + std::to_string(v.w) + "): " + fmt_double(v.lhs) +
                                           " > " + fmt_double(v.rhs)});
        }
    }
    return report;
}

SuiteReport run_guarantee_suite(const std::vector<NamedGraph>& corpus, const AdjustmentConfig& cfg,
                                const RoundingParams& params) {
    SuiteReport report;
    report.suite = "guarantee";
    for (const auto& [name, g] : corpus) {
        ++report.instances;
        const PipelineResult res = round_pipeline(g, cfg, params);
        for (VertexId u : check_rounding_guarantee(g, res.adjusted, res.clustering, 12.0)) {
            report.findings.push_back({report.suite, name,
                                       "ALG(" + std::to_string(u) + ") exceeds 12 * fractional cost"});
        }
    }
    return report;
}

SuiteReport run_cost_bounds_suite(const std::vector<NamedGraph>& corpus, const AdjustmentConfig& cfg) {
    SuiteReport report;
    report.suite = "cost-bounds";
    const std::vector<NormSpec> finite_ps = {NormSpec{1.0}, NormSpec{1.5}, NormSpec{2.0}, NormSpec{3.0}};
    constexpr double kEps = 1e-9;
    for (const auto& [name, g] : corpus) {
        ++report.instances;
        const SparseSemiMetric d = correlation_metric(g);
        const SparseSemiMetric f = adjust_metric(g, d, cfg);

        std::vector<NormSpec> all_ps = finite_ps;
        all_ps.push_back(NormSpec::inf());
        const auto opts = brute_force_opt_multi(g, all_ps);

        // l-infinity ceiling
        const double frac_inf = fractional_cost(g, f, NormSpec::inf());
        const double opt_inf = opts.back().best_value;
        if (frac_inf > 56.0 * opt_inf + kEps) {
            report.findings.push_back({report.suite, name,
                                       "linf fractional cost " + fmt_double(frac_inf) + " > 56 * OPT " +
                                           fmt_double(opt_inf)});
        }
        if (opt_inf > 0.0) {
            track_ratio(report, frac_inf / opt_inf, name + " [linf]");
        }

        // finite-p ceilings
        for (std::size_t k = 0; k < finite_ps.size(); ++k) {
            const double frac = fractional_cost(g, f, finite_ps[k]);
            const double opt = opts[k].best_value;
            if (frac > 529.0 * opt + kEps) {
                report.findings.push_back({report.suite, name,
                                           "l" + finite_ps[k].token() + " fractional cost " + fmt_double(frac) +
                                               " > 529 * OPT " + fmt_double(opt)});
            }
            if (opt > 0.0) {
                track_ratio(report, frac / opt, name + " [l" + finite_ps[k].token() + "]");
            }
        }

        // l1 split ceilings
        const FractionalL1Parts parts = fractional_l1_parts(g, f);
        const double opt1 = opts[0].best_value;
        if (parts.positive > 34.0 * opt1 + kEps) {
            report.findings.push_back({report.suite, name,
                                       "positive l1 part " + fmt_double(parts.positive) + " > 34 * OPT " +
                                           fmt_double(opt1)});
        }
        if (parts.negative > 40.0 * opt1 + kEps) {
            report.findings.push_back({report.suite, name,
                                       "negative l1 part " + fmt_double(parts.negative) + " > 40 * OPT " +
                                           fmt_double(opt1)});
        }
    }
    return report;
}

SuiteReport run_dual_suite(std::size_t max_n) {
    SuiteReport report;
    report.suite = "dual";
    constexpr double kEps = 1e-9;
    for (std::size_t n = 3; n <= max_n; ++n) {
        for (std::size_t degree = 2; degree < n; degree += 2) {
            const std::string name =
                "regular_circulant(n=" + std::to_string(n) + ",degree=" + std::to_string(degree) + ")";
            ++report.instances;
            const CorrelationGraph g = make_regular_circulant(n, degree);
            const DualBound bound = dual_lower_bound(g);
            if (!bound.is_regular) {
                report.findings.push_back({report.suite, name, "circulant not detected as regular"});
            }
            const ExactResult opt = brute_force_opt(g, NormSpec{1.0});
            const double opt_edges = opt.best_value / 2.0;  // l1 vertex sum counts both endpoints
            if (bound.value > opt_edges + kEps) {
                report.findings.push_back({report.suite, name,
                                           "dual bound " + fmt_double(bound.value) + " exceeds edge optimum " +
                                               fmt_double(opt_edges)});
            }
            if (opt_edges > 0.0) {
                track_ratio(report, bound.value / opt_edges, name);
            }
            for (const auto& [u, v] : dual_feasibility_violations(g)) {
                report.findings.push_back({report.suite, name,
                                           "dual infeasible at edge (" + std::to_string(u) + "," +
                                               std::to_string(v) + ")"});
            }
        }
    }
    return report;
}

SuiteReport run_oracle_ratio_suite(const std::vector<NamedGraph>& corpus, const AdjustmentConfig& cfg,
                                   const RoundingParams& params) {
    SuiteReport report;
    report.suite = "oracle-ratios";
    const std::vector<NormSpec> ps = {NormSpec{1.0}, NormSpec{1.5}, NormSpec{2.0}, NormSpec{3.0}, NormSpec::inf()};
    constexpr double kEps = 1e-9;
    for (const auto& [name, g] : corpus) {
        ++report.instances;
        const PipelineResult res = round_pipeline(g, cfg, params);
        const DisagreementVector y = disagreement_vector(g, res.clustering);
        const auto opts = brute_force_opt_multi(g, ps);
        for (std::size_t k = 0; k < ps.size(); ++k) {
            const double alg = lp_norm(y, ps[k]);
            const double opt = opts[k].best_value;
            if (alg > 6348.0 * opt + kEps) {
                report.findings.push_back({report.suite, name,
                                           "l" + ps[k].token() + " norm " + fmt_double(alg) + " > 6348 * OPT " +
                                               fmt_double(opt)});
            }
            if (opt > 0.0) {
                track_ratio(report, alg / opt, name + " [l" + ps[k].token() + "]");
            }
        }
    }
    return report;
}

}  // namespace ccnorm
