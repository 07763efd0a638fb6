#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "turan/graph.hpp"

namespace turan {

/// Standard graph6 encoding (upper triangle, column order, 6-bit groups + 63).
/// Orders up to 62 use the one-byte header; up to 258047 the four-byte form.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. Throws std::invalid_argument on a malformed
/// header, wrong length, characters outside 63..126, or nonzero padding.
Graph graph6_decode(std::string_view text);

/// {"n": int, "edges": [[u, v], ...]} with u < v in lexicographic order.
nlohmann::json to_edge_list_json(const Graph& g);
Graph from_edge_list_json(const nlohmann::json& j);

}  // namespace turan
