#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "turan/canonical.hpp"
#include "turan/detectors.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Largest order the exhaustive search accepts.
inline constexpr std::size_t kOracleMaxOrder = 11;

struct EnumerationOptions {
    /// OpenMP worker count for the level-parallel kernel.
    std::size_t jobs = 1;
};

struct ExtremalRecord {
    std::size_t n = 0;
    ForbiddenFamily family;
    std::size_t ex_value = 0;
    /// Canonical graph6 strings of all extremal classes, sorted.
    std::vector<std::string> extremal_graphs;
    std::uint64_t graphs_visited = 0;
    double elapsed_seconds = 0.0;

    /// Equality of everything except the elapsed time.
    bool same_result(const ExtremalRecord& other) const;
};

nlohmann::json to_json(const ExtremalRecord& r);
ExtremalRecord record_from_json(const nlohmann::json& j);

/// One canonical form per isomorphism class of F-free graphs on n vertices,
/// ordered by (edge count, form). Classes are grown edge by edge through
/// canonical deletion; each level is expanded in parallel.
std::vector<CanonicalForm> enumerate_free_classes(std::size_t n, const ForbiddenFamily& f,
                                                  const EnumerationOptions& options = {});

/// Depth-first serial version of the same generation rule; reference for tests
/// and benchmarks.
std::vector<CanonicalForm> enumerate_free_classes_serial(std::size_t n, const ForbiddenFamily& f);

std::vector<Graph> enumerate_free_graphs(std::size_t n, const ForbiddenFamily& f,
                                         const EnumerationOptions& options = {});

ExtremalRecord brute_force_ex(std::size_t n, const ForbiddenFamily& f, const EnumerationOptions& options = {});

std::vector<Graph> enumerate_extremal(std::size_t n, const ForbiddenFamily& f,
                                      const EnumerationOptions& options = {});

struct G1Family {
    std::size_t s;
    std::size_t l;
};
struct G2Family {
    std::size_t s;
    std::size_t l;
};
struct CompleteBipartiteFamily {
    std::size_t s;
};
using FamilyDescriptor = std::variant<G1Family, G2Family, CompleteBipartiteFamily>;

/// Structural membership test; n <= 16.
bool family_membership(const Graph& g, const FamilyDescriptor& family);

}  // namespace turan
