#pragma once

#include <string>

#include <json.hpp>

#include "ccnorm/objective.hpp"
#include "ccnorm/rounding.hpp"

namespace ccnorm {

using ordered_json = nlohmann::ordered_json;

// {"n": N, "clusters": [[ids...], ...]} with clusters in creation order and
// ids ascending within each cluster.
ordered_json clustering_json(const Clustering& c);
Clustering clustering_from_json(const ordered_json& j);

// Canonical bytes for a JSON document (2-space indent, trailing newline).
std::string canonical_dump(const ordered_json& j);

// p as a JSON value: a number, or the string "inf" (JSON has no infinity
// literal).
ordered_json norm_token_json(const NormSpec& p);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ccnorm
