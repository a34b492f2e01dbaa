#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "ccnorm/json_io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = CCNORM_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ccnorm_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    return ccnorm::read_text_file(path);
}

}  // namespace

TEST_CASE("gen writes the expected edge counts") {
    TempDir tmp;
    REQUIRE(run("gen star --n 9 -o " + tmp.file("star9.txt")) == 0);
    const std::string star = slurp(tmp.file("star9.txt"));
    CHECK(std::count(star.begin(), star.end(), '\n') == 9);  // header + 8 edges

    REQUIRE(run("gen neg-matching --n 6 -o " + tmp.file("m6.txt")) == 0);
    const std::string matching = slurp(tmp.file("m6.txt"));
    CHECK(std::count(matching.begin(), matching.end(), '\n') == 13);  // header + 12 edges
}

TEST_CASE("gen is deterministic for a fixed seed") {
    TempDir tmp;
    REQUIRE(run("gen random --n 100 --q 0.1 --seed 7 -o " + tmp.file("a.txt")) == 0);
    REQUIRE(run("gen random --n 100 --q 0.1 --seed 7 -o " + tmp.file("b.txt")) == 0);
    CHECK(slurp(tmp.file("a.txt")) == slurp(tmp.file("b.txt")));
}

TEST_CASE("cluster emits the clustering and the norm report") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("tri.txt"));
        out << "n 3\n0 1\n0 2\n";
    }
    REQUIRE(run("cluster -i " + tmp.file("tri.txt") + " -o " + tmp.file("c.json") +
                " --report " + tmp.file("r.json") + " -p 1,2,inf") == 0);

    const auto clustering = nlohmann::json::parse(slurp(tmp.file("c.json")));
    CHECK(clustering["n"] == 3);
    CHECK(clustering["clusters"] == nlohmann::json::parse("[[0,1,2]]"));

    const auto report = nlohmann::json::parse(slurp(tmp.file("r.json")));
    REQUIRE(report["norms"].size() == 3);
    CHECK(report["norms"][0]["p"] == 1.0);
    CHECK(report["norms"][0]["alg"] == doctest::Approx(2.0));
    CHECK(report["norms"][1]["alg"] == doctest::Approx(1.4142135623730951));
    CHECK(report["norms"][2]["p"] == "inf");
    CHECK(report["norms"][2]["alg"] == doctest::Approx(1.0));
    CHECK(report["edge_disagreements"] == 1);
    CHECK(report["l1_vertex"] == 2);
    CHECK(report["bad_triangles"] == 1);
}

TEST_CASE("cluster on star9 reports 9 singletons") {
    TempDir tmp;
    REQUIRE(run("gen star --n 9 -o " + tmp.file("star9.txt")) == 0);
    REQUIRE(run("cluster -i " + tmp.file("star9.txt") + " -o " + tmp.file("c.json") +
                " --report " + tmp.file("r.json") + " -p 1,inf") == 0);
    const auto clustering = nlohmann::json::parse(slurp(tmp.file("c.json")));
    CHECK(clustering["clusters"].size() == 9);
    const auto report = nlohmann::json::parse(slurp(tmp.file("r.json")));
    CHECK(report["norms"][0]["alg"] == doctest::Approx(16.0));
    CHECK(report["norms"][1]["alg"] == doctest::Approx(8.0));
}

TEST_CASE("cluster on the all-negative graph is free") {
    TempDir tmp;
    REQUIRE(run("gen empty-positive --n 4 -o " + tmp.file("e4.txt")) == 0);
    REQUIRE(run("cluster -i " + tmp.file("e4.txt") + " -o " + tmp.file("c.json") +
                " --report " + tmp.file("r.json") + " -p 1,2,inf") == 0);
    const auto clustering = nlohmann::json::parse(slurp(tmp.file("c.json")));
    CHECK(clustering["clusters"].size() == 4);
    const auto report = nlohmann::json::parse(slurp(tmp.file("r.json")));
    for (const auto& row : report["norms"]) {
        CHECK(row["alg"] == doctest::Approx(0.0));
    }
}

TEST_CASE("eval and exact agree with cluster on the bad triangle") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("tri.txt"));
        out << "n 3\n0 1\n0 2\n";
    }
    REQUIRE(run("cluster -i " + tmp.file("tri.txt") + " -o " + tmp.file("c.json")) == 0);
    REQUIRE(run("eval -i " + tmp.file("tri.txt") + " -c " + tmp.file("c.json") + " -p 1 -o " +
                tmp.file("e.json")) == 0);
    const auto eval = nlohmann::json::parse(slurp(tmp.file("e.json")));
    CHECK(eval["norms"][0]["value"] == doctest::Approx(2.0));

    REQUIRE(run("exact -i " + tmp.file("tri.txt") + " -p 1 -o " + tmp.file("x.json")) == 0);
    const auto exact = nlohmann::json::parse(slurp(tmp.file("x.json")));
    CHECK(exact["exact"]["value"] == doctest::Approx(2.0));
    CHECK(exact["exact"]["partitions"] == 5);
}

TEST_CASE("metric dump matches the documented format") {
    TempDir tmp;
    REQUIRE(run("gen star --n 3 -o " + tmp.file("s3.txt")) == 0);
    REQUIRE(run("metric -i " + tmp.file("s3.txt") + " -o " + tmp.file("d.txt")) == 0);
    std::istringstream in(slurp(tmp.file("d.txt")));
    unsigned u, v;
    double dist;
    int lines = 0;
    while (in >> u >> v >> dist) {
        CHECK(u < v);
        CHECK(dist > 0.0);
        CHECK(dist < 1.0);
        ++lines;
    }
    CHECK(lines == 3);
}

TEST_CASE("verify runs the cheap suites cleanly") {
    TempDir tmp;
    CHECK(run("verify --suite dual -o " + tmp.file("v.json")) == 0);
    const auto findings = nlohmann::json::parse(slurp(tmp.file("v.json")));
    CHECK(findings["ok"] == true);
    CHECK(findings["suites"][0]["suite"] == "dual");
}

TEST_CASE("verify triangle and guarantee suites pass with a shifted seed") {
    TempDir tmp;
    CHECK(run("verify --suite triangle,guarantee --seed 42 -o " + tmp.file("v.json")) == 0);
    const auto findings = nlohmann::json::parse(slurp(tmp.file("v.json")));
    CHECK(findings["ok"] == true);
    CHECK(findings["suites"].size() == 2);
}

TEST_CASE("verify cost-bounds and oracle-ratios suites pass on a reduced corpus") {
    TempDir tmp;
    CHECK(run("verify --suite cost-bounds,oracle-ratios --max-n 6 --trials 50 -o " +
              tmp.file("v.json")) == 0);
    const auto findings = nlohmann::json::parse(slurp(tmp.file("v.json")));
    CHECK(findings["ok"] == true);
    for (const auto& suite : findings["suites"]) {
        CHECK(suite["max_ratio"].get<double>() < 56.0);
    }
}

TEST_CASE("bench emits the fixed CSV schema") {
    TempDir tmp;
    REQUIRE(run("bench --sizes 60,80 --delta 4 --trials 1 --csv " + tmp.file("b.csv")) == 0);
    std::istringstream in(slurp(tmp.file("b.csv")));
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,delta,seed,t_metric_ms,t_adjust_ms,t_round_ms,l1,l2,linf,pivot_l1,dual_lb");
    int rows = 0;
    std::string row;
    while (std::getline(in, row)) {
        if (row.empty()) {
            continue;
        }
        CHECK(std::count(row.begin(), row.end(), ',') == 10);
        // columns: n,delta,seed,t_metric,t_adjust,t_round,l1,l2,linf,pivot_l1,dual_lb
        std::istringstream fields(row);
        std::vector<double> values;
        std::string field;
        while (std::getline(fields, field, ',')) {
            values.push_back(std::stod(field));
        }
        REQUIRE(values.size() == 11);
        const double l1 = values[6], pivot_l1 = values[9], dual_lb = values[10];
        CHECK(dual_lb <= l1 / 2.0 + 1e-9);        // lower bound on edge disagreements
        CHECK(dual_lb <= pivot_l1 / 2.0 + 1e-9);  // of every reported clustering
        ++rows;
    }
    CHECK(rows == 4);  // 2 sizes x 1 trial x 2 instance kinds
}

TEST_CASE("usage errors exit with code 2") {
    TempDir tmp;
    CHECK(run("gen ring --n 5 -o " + tmp.file("x.txt")) == 2);      // unknown kind
    CHECK(run("verify --suite bogus") == 2);                        // unknown suite
    CHECK(run("cluster -i " + tmp.file("missing.txt")) == 2);       // unreadable input
    CHECK(run("bench --sizes 100,50 --csv " + tmp.file("b.csv")) == 2);  // not ascending
    CHECK(run("frobnicate") == 2);                                  // unknown subcommand
}
