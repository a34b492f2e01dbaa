#include "ccnorm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ccnorm/rng.hpp"

namespace ccnorm {

CorrelationGraph::CorrelationGraph(std::size_t n,
                                   const std::vector<std::pair<VertexId, VertexId>>& positive_edges) {
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    pos_adj_.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        pos_adj_[u].push_back(static_cast<VertexId>(u));  // self-loop
    }
    for (const auto& [u, v] : positive_edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("explicit self-edge; self-loops are implicit");
        }
        pos_adj_[u].push_back(v);
        pos_adj_[v].push_back(u);
    }
    for (auto& row : pos_adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
}

bool CorrelationGraph::is_positive(VertexId u, VertexId v) const {
    const auto& row = pos_adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::size_t CorrelationGraph::max_pos_degree() const {
    std::size_t best = 0;
    for (const auto& row : pos_adj_) {
        best = std::max(best, row.size());
    }
    return best;
}

std::size_t CorrelationGraph::positive_edge_count() const {
    std::size_t total = 0;
    for (const auto& row : pos_adj_) {
        total += row.size() - 1;  // drop the self-loop
    }
    return total / 2;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
    throw std::runtime_error("graph parse error at line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

CorrelationGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<std::pair<VertexId, VertexId>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            long long count = -1;
            if (!(ls >> tag >> count) || tag != "n" || count < 1) {
                parse_fail(line_no, "expected header \"n <N>\" with N >= 1");
            }
            n = static_cast<std::size_t>(count);
            have_header = true;
            continue;
        }
        long long u = -1, v = -1;
        if (!(ls >> u >> v) || u < 0 || v < 0) {
            parse_fail(line_no, "expected edge line \"<u> <v>\"");
        }
        if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            parse_fail(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            parse_fail(line_no, "self-edge listed explicitly; self-loops are implicit");
        }
        edges.emplace_back(static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v)));
    }
    if (!have_header) {
        parse_fail(line_no, "missing \"n <N>\" header");
    }
    return CorrelationGraph(n, edges);
}

CorrelationGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph file: " + path);
    }
    return read_graph(in);
}

void write_graph(const CorrelationGraph& g, std::ostream& out) {
    out << "n " << g.n() << "\n";
    for (VertexId u = 0; u < g.n(); ++u) {
        for (VertexId v : g.pos_neighbors(u)) {
            if (v > u) {
                out << u << " " << v << "\n";
            }
        }
    }
}

void save_graph(const CorrelationGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path);
    }
    write_graph(g, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

CorrelationGraph make_star(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("star: n >= 1 required");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v < n; ++v) {
        edges.emplace_back(0, v);
    }
    return CorrelationGraph(n, edges);
}

CorrelationGraph make_complete_positive(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("complete_positive: n >= 1 required");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return CorrelationGraph(n, edges);
}

CorrelationGraph make_empty_positive(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("empty_positive: n >= 1 required");
    }
    return CorrelationGraph(n, {});
}

CorrelationGraph make_neg_matching(std::size_t n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("neg_matching: n must be even and >= 2");
    }
    const std::size_t half = n / 2;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (v != u + half) {
                edges.emplace_back(u, v);
            }
        }
    }
    return CorrelationGraph(n, edges);
}

CorrelationGraph make_random(std::size_t n, double q, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("random: n >= 1 required");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("random: q must be in [0,1]");
    }
    SplitMix64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    // Pair order is fixed (u ascending, then v) so the stream of draws, and
    // hence the graph, is identical for a given seed.
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (rng.next_double() < q) {
                edges.emplace_back(u, v);
            }
        }
    }
    return CorrelationGraph(n, edges);
}

CorrelationGraph make_regular_circulant(std::size_t n, std::size_t degree) {
    if (n < 1) {
        throw std::invalid_argument("regular_circulant: n >= 1 required");
    }
    if (degree % 2 != 0 || degree >= n) {
        throw std::invalid_argument("regular_circulant: degree must be even and < n");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (std::size_t k = 1; k <= degree / 2; ++k) {
            edges.emplace_back(u, static_cast<VertexId>((u + k) % n));
        }
    }
    return CorrelationGraph(n, edges);
}

CorrelationGraph make_graph(const std::string& kind, const GeneratorParams& params) {
    std::string name = kind;
    std::replace(name.begin(), name.end(), '-', '_');
    if (name == "star") return make_star(params.n);
    if (name == "complete_positive") return make_complete_positive(params.n);
    if (name == "empty_positive") return make_empty_positive(params.n);
    if (name == "neg_matching") return make_neg_matching(params.n);
    if (name == "random") return make_random(params.n, params.q, params.seed);
    if (name == "regular_circulant") return make_regular_circulant(params.n, params.degree);
    throw std::invalid_argument("unknown generator kind: " + kind);
}

}  // namespace ccnorm
