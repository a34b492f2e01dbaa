#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccnorm/baselines.hpp"
#include "ccnorm/graph.hpp"
#include "ccnorm/json_io.hpp"
#include "ccnorm/metric.hpp"
#include "ccnorm/objective.hpp"
#include "ccnorm/rounding.hpp"
#include "ccnorm/verify.hpp"

// Exit codes: 0 ok, 1 invariant violation, 2 usage/parse/IO error.

namespace {

using namespace ccnorm;

std::vector<NormSpec> parse_norms(const std::vector<std::string>& tokens) {
    std::vector<NormSpec> ps;
    for (const auto& raw : tokens) {
        std::stringstream ss(raw);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) {
                ps.push_back(NormSpec::parse(part));
            }
        }
    }
    if (ps.empty()) {
        throw std::invalid_argument("p-list must not be empty");
    }
    return ps;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(out_path, content);
    }
}

ordered_json norm_table(const CorrelationGraph& g, const Clustering& alg, const Clustering& piv,
                        const SparseSemiMetric& d, const SparseSemiMetric& f,
                        const std::vector<NormSpec>& ps) {
    const DisagreementVector y_alg = disagreement_vector(g, alg);
    const DisagreementVector y_piv = disagreement_vector(g, piv);
    const DisagreementVector y_single = disagreement_vector(g, singletons(g.n()));
    const DisagreementVector y_one = disagreement_vector(g, one_cluster(g.n()));
    ordered_json rows = ordered_json::array();
    for (const auto& p : ps) {
        ordered_json row;
        row["p"] = norm_token_json(p);
        row["alg"] = lp_norm(y_alg, p);
        row["pivot"] = lp_norm(y_piv, p);
        row["singletons"] = lp_norm(y_single, p);
        row["one_cluster"] = lp_norm(y_one, p);
        row["fractional_d"] = fractional_cost(g, d, p);
        row["fractional_f"] = fractional_cost(g, f, p);
        rows.push_back(row);
    }
    return rows;
}

int cmd_gen(const std::string& kind, const GeneratorParams& params, const std::string& out) {
    const CorrelationGraph g = make_graph(kind, params);
    save_graph(g, out);
    return 0;
}

int cmd_cluster(const std::string& input, const std::vector<std::string>& p_tokens,
                const std::string& out, const std::string& report_path, const AdjustmentConfig& cfg,
                const RoundingParams& params, std::uint64_t seed) {
    if ((!out.empty() && out == input) || (!report_path.empty() && report_path == input) ||
        (!out.empty() && out == report_path)) {
        throw std::invalid_argument("input, output, and report paths must be distinct");
    }
    const CorrelationGraph g = load_graph(input);
    const PipelineResult res = round_pipeline(g, cfg, params);

    // The clustering is written before the p-list is even parsed: its bytes
    // cannot depend on which norms are evaluated afterwards.
    const std::string clustering_bytes = canonical_dump(clustering_json(res.clustering));
    emit(out, clustering_bytes);

    if (!report_path.empty()) {
        const std::vector<NormSpec> ps = parse_norms(p_tokens);
        const Clustering piv = pivot(g, seed);
        const DisagreementVector y = disagreement_vector(g, res.clustering);
        const DualBound dual = dual_lower_bound(g);
        const FractionalL1Parts parts = fractional_l1_parts(g, res.adjusted);

        ordered_json report;
        report["graph"] = {{"path", input},
                           {"n", g.n()},
                           {"positive_edges", g.positive_edge_count()},
                           {"max_pos_degree", g.max_pos_degree()}};
        report["config"] = {{"round_up_threshold", cfg.round_up_threshold},
                            {"singleton_factor", cfg.singleton_factor},
                            {"radius", params.radius},
                            {"pivot_seed", seed}};
        report["clusters"] = res.clustering.cluster_count();
        report["norms"] = norm_table(g, res.clustering, piv, res.correlation, res.adjusted, ps);
        report["l1_vertex"] = y.sum();
        report["edge_disagreements"] = edge_disagreement_count(g, res.clustering);
        report["fractional_l1_parts"] = {{"positive", parts.positive}, {"negative", parts.negative}};
        report["dual_lower_bound"] = {{"value", dual.value}, {"is_regular", dual.is_regular}};
        report["bad_triangles"] = bad_triangle_count(g);
        report["timings_ms"] = {{"metric", res.t_metric_ms},
                                {"adjust", res.t_adjust_ms},
                                {"round", res.t_round_ms}};
        emit(report_path, canonical_dump(report));
    }
    return 0;
}

int cmd_eval(const std::string& input, const std::string& clustering_path,
             const std::vector<std::string>& p_tokens, const std::string& out) {
    const CorrelationGraph g = load_graph(input);
    const Clustering c = clustering_from_json(ordered_json::parse(read_text_file(clustering_path)));
    const std::vector<NormSpec> ps = parse_norms(p_tokens);
    const DisagreementVector y = disagreement_vector(g, c);

    ordered_json report;
    report["n"] = g.n();
    report["clusters"] = c.cluster_count();
    ordered_json rows = ordered_json::array();
    for (const auto& p : ps) {
        rows.push_back({{"p", norm_token_json(p)}, {"value", lp_norm(y, p)}});
    }
    report["norms"] = rows;
    report["l1_vertex"] = y.sum();
    report["edge_disagreements"] = edge_disagreement_count(g, c);
    emit(out, canonical_dump(report));
    return 0;
}

int cmd_exact(const std::string& input, const std::string& p_token, const std::string& out) {
    const CorrelationGraph g = load_graph(input);
    const NormSpec p = NormSpec::parse(p_token);
    const ExactResult res = brute_force_opt(g, p);
    ordered_json j;
    j["exact"] = {{"p", norm_token_json(p)},
                  {"value", res.best_value},
                  {"clustering", clustering_json(res.best_clustering)["clusters"]},
                  {"partitions", res.partitions_examined}};
    emit(out, canonical_dump(j));
    return 0;
}

int cmd_metric(const std::string& input, bool adjusted, const AdjustmentConfig& cfg, const std::string& out) {
    const CorrelationGraph g = load_graph(input);
    SparseSemiMetric z = correlation_metric(g);
    if (adjusted) {
        z = adjust_metric(g, z, cfg);
    }
    std::ostringstream buf;
    write_metric(z, buf);
    emit(out, buf.str());
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed, std::size_t trials,
               std::size_t max_n, const std::string& out) {
    const std::vector<std::string> known = {"triangle", "guarantee", "cost-bounds", "dual", "oracle-ratios"};
    for (const auto& s : suites) {
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            throw std::invalid_argument("unknown suite: " + s);
        }
    }
    std::vector<SuiteReport> reports;
    for (const auto& s : suites) {
        if (s == "triangle") {
            reports.push_back(run_triangle_suite(triangle_corpus(seed)));
        } else if (s == "guarantee") {
            reports.push_back(run_guarantee_suite(triangle_corpus(seed)));
        } else if (s == "cost-bounds") {
            reports.push_back(run_cost_bounds_suite(small_corpus(trials, seed, max_n)));
        } else if (s == "dual") {
            reports.push_back(run_dual_suite(8));
        } else if (s == "oracle-ratios") {
            reports.push_back(run_oracle_ratio_suite(small_corpus(trials, seed, max_n)));
        }
    }

    bool ok = true;
    ordered_json j;
    j["suites"] = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json sj;
        sj["suite"] = r.suite;
        sj["instances"] = r.instances;
        sj["max_ratio"] = r.max_ratio;
        sj["max_ratio_instance"] = r.max_ratio_instance;
        sj["findings"] = ordered_json::array();
        for (const auto& f : r.findings) {
            sj["findings"].push_back({{"instance", f.instance}, {"detail", f.detail}});
            ok = false;
        }
        j["suites"].push_back(sj);
    }
    j["ok"] = ok;
    emit(out, canonical_dump(j));
    return ok ? 0 : 1;
}

int cmd_bench(std::vector<std::size_t> sizes, std::size_t delta, std::size_t trials,
              std::uint64_t seed_base, const std::string& csv_path) {
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw std::invalid_argument("sizes must be ascending");
    }
    std::ostringstream csv;
    csv << "n,delta,seed,t_metric_ms,t_adjust_ms,t_round_ms,l1,l2,linf,pivot_l1,dual_lb\n";
    char buf[64];
    const auto num = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };
    for (std::size_t n : sizes) {
        if (delta >= n) {
            throw std::invalid_argument("delta must be < n");
        }
        for (std::size_t t = 0; t < trials; ++t) {
            const std::uint64_t seed = seed_base + t;
            // one regular and one random instance per (n, trial), same columns
            const double q = static_cast<double>(delta) / static_cast<double>(n - 1);
            const CorrelationGraph graphs[2] = {make_regular_circulant(n, delta), make_random(n, q, seed)};
            for (const auto& g : graphs) {
                const PipelineResult res = round_pipeline(g);
                const DisagreementVector y = disagreement_vector(g, res.clustering);
                const DisagreementVector y_piv = disagreement_vector(g, pivot(g, seed));
                const DualBound dual = dual_lower_bound(g);
                csv << n << "," << delta << "," << seed << "," << num(res.t_metric_ms) << ","
                    << num(res.t_adjust_ms) << "," << num(res.t_round_ms) << ","
                    << num(lp_norm(y, NormSpec{1.0})) << "," << num(lp_norm(y, NormSpec{2.0})) << ","
                    << num(lp_norm(y, NormSpec::inf())) << "," << num(lp_norm(y_piv, NormSpec{1.0})) << ","
                    << num(dual.value) << "\n";
            }
        }
    }
    emit(csv_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"All-norms correlation clustering toolkit"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind, gen_out;
    GeneratorParams gen_params;
    auto* gen = app.add_subcommand("gen", "Generate a graph file");
    gen->add_option("kind", gen_kind,
                    "star | complete-positive | empty-positive | neg-matching | random | regular-circulant")
        ->required();
    gen->add_option("--n", gen_params.n, "vertex count")->required();
    gen->add_option("--q", gen_params.q, "positive-edge probability (random)");
    gen->add_option("--seed", gen_params.seed, "generator seed (random)");
    gen->add_option("--degree", gen_params.degree, "positive degree (regular-circulant)");
    gen->add_option("-o,--out", gen_out, "output graph file")->required();

    // cluster
    std::string cl_input, cl_out, cl_report;
    std::vector<std::string> cl_ps = {"1", "2", "inf"};
    AdjustmentConfig cl_cfg;
    RoundingParams cl_params;
    std::uint64_t cl_seed = 0;
    auto* cluster = app.add_subcommand("cluster", "Run the all-norms pipeline on a graph");
    cluster->add_option("-i,--input", cl_input, "graph file")->required();
    cluster->add_option("-o,--out", cl_out, "clustering JSON (stdout if omitted)");
    cluster->add_option("--report", cl_report, "evaluation report JSON");
    cluster->add_option("-p,--p", cl_ps, "norms to report, e.g. -p 1,2,inf");
    cluster->add_option("--round-up-threshold", cl_cfg.round_up_threshold, "adjustment round-up threshold");
    cluster->add_option("--singleton-factor", cl_cfg.singleton_factor, "adjustment singleton factor");
    cluster->add_option("--radius", cl_params.radius, "rounding ball radius");
    cluster->add_option("--seed", cl_seed, "pivot baseline seed (report only)");

    // eval
    std::string ev_input, ev_clustering, ev_out;
    std::vector<std::string> ev_ps = {"1", "2", "inf"};
    auto* eval = app.add_subcommand("eval", "Evaluate a clustering JSON against a graph");
    eval->add_option("-i,--input", ev_input, "graph file")->required();
    eval->add_option("-c,--clustering", ev_clustering, "clustering JSON file")->required();
    eval->add_option("-p,--p", ev_ps, "norms to report");
    eval->add_option("-o,--out", ev_out, "report JSON (stdout if omitted)");

    // exact
    std::string ex_input, ex_p = "1", ex_out;
    auto* exact = app.add_subcommand("exact", "Brute-force optimum for small graphs (n <= 12)");
    exact->add_option("-i,--input", ex_input, "graph file")->required();
    exact->add_option("-p,--p", ex_p, "norm (number or inf)");
    exact->add_option("-o,--out", ex_out, "result JSON (stdout if omitted)");

    // metric
    std::string me_input, me_out;
    bool me_adjusted = false;
    AdjustmentConfig me_cfg;
    auto* metric = app.add_subcommand("metric", "Dump the correlation metric");
    metric->add_option("-i,--input", me_input, "graph file")->required();
    metric->add_flag("--adjusted", me_adjusted, "dump the adjusted metric instead of d");
    metric->add_option("--round-up-threshold", me_cfg.round_up_threshold, "adjustment round-up threshold");
    metric->add_option("--singleton-factor", me_cfg.singleton_factor, "adjustment singleton factor");
    metric->add_option("-o,--out", me_out, "output file (stdout if omitted)");

    // verify
    std::vector<std::string> vf_suites;
    std::uint64_t vf_seed = 0;
    std::size_t vf_trials = 200, vf_max_n = 7;
    std::string vf_out;
    auto* verify = app.add_subcommand("verify", "Run invariant suites; nonzero exit on violations");
    verify->add_option("--suite", vf_suites, "triangle | guarantee | cost-bounds | dual | oracle-ratios")
        ->required()
        ->delimiter(',');
    verify->add_option("--seed", vf_seed, "base seed for generated instances");
    verify->add_option("--trials", vf_trials, "random instances for the small-graph suites");
    verify->add_option("--max-n", vf_max_n, "size cap for brute-force suites");
    verify->add_option("-o,--out", vf_out, "findings JSON (stdout if omitted)");

    // bench
    std::vector<std::size_t> be_sizes;
    std::size_t be_delta = 16, be_trials = 1;
    std::uint64_t be_seed = 0;
    std::string be_csv;
    auto* bench = app.add_subcommand("bench", "Pipeline timings and ratios over instance sweeps");
    bench->add_option("--sizes", be_sizes, "ascending vertex counts, e.g. --sizes 1000,2000")
        ->required()
        ->delimiter(',');
    bench->add_option("--delta", be_delta, "target positive degree");
    bench->add_option("--trials", be_trials, "trials per size");
    bench->add_option("--seed", be_seed, "base seed");
    bench->add_option("--csv", be_csv, "CSV output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            return cmd_gen(gen_kind, gen_params, gen_out);
        }
        if (*cluster) {
            return cmd_cluster(cl_input, cl_ps, cl_out, cl_report, cl_cfg, cl_params, cl_seed);
        }
        if (*eval) {
            return cmd_eval(ev_input, ev_clustering, ev_ps, ev_out);
        }
        if (*exact) {
            return cmd_exact(ex_input, ex_p, ex_out);
        }
        if (*metric) {
            return cmd_metric(me_input, me_adjusted, me_cfg, me_out);
        }
        if (*verify) {
            return cmd_verify(vf_suites, vf_seed, vf_trials, vf_max_n, vf_out);
        }
        if (*bench) {
            return cmd_bench(be_sizes, be_delta, be_trials, be_seed, be_csv);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
