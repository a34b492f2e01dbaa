#include "ccnorm/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccnorm {

ordered_json clustering_json(const Clustering& c) {
    ordered_json j;
    j["n"] = c.n;
    j["clusters"] = ordered_json::array();
    for (const auto& cluster : c.clusters) {
        j["clusters"].push_back(cluster);
    }
    return j;
}

Clustering clustering_from_json(const ordered_json& j) {
    Clustering c;
    c.n = j.at("n").get<std::size_t>();
    c.assignment.assign(c.n, 0);
    for (const auto& cluster : j.at("clusters")) {
        std::vector<VertexId> members = cluster.get<std::vector<VertexId>>();
        for (VertexId u : members) {
            if (u >= c.n) {
                throw std::invalid_argument("clustering JSON: vertex out of range");
            }
            c.assignment[u] = static_cast<std::uint32_t>(c.clusters.size());
        }
        c.clusters.push_back(std::move(members));
    }
    validate_partition(c, c.n);
    return c;
}

std::string canonical_dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

ordered_json norm_token_json(const NormSpec& p) {
    if (p.is_inf()) {
        return ordered_json("inf");
    }
    return ordered_json(p.p);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace ccnorm
