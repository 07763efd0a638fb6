#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct CliquePattern {
    std::size_t order;  // K_r
    friend auto operator<=>(const CliquePattern&, const CliquePattern&) = default;
};

struct StarForestPattern {
    std::size_t copies;  // number of vertex-disjoint stars
    std::size_t leaves;  // S_l has l leaves
    friend auto operator<=>(const StarForestPattern&, const StarForestPattern&) = default;
};

struct MatchingPattern {
    std::size_t edges;  // M_s
    friend auto operator<=>(const MatchingPattern&, const MatchingPattern&) = default;
};

using Pattern = std::variant<CliquePattern, StarForestPattern, MatchingPattern>;

std::string to_string(const Pattern& p);

/// A non-empty set of forbidden patterns, kept sorted and deduplicated so that
/// `to_string()` is a canonical key.
class ForbiddenFamily {
public:
    explicit ForbiddenFamily(std::vector<Pattern> patterns);

    /// Comma list of `clique:R`, `matching:S`, `starforest:CxL`.
    static ForbiddenFamily parse(std::string_view spec);

    const std::vector<Pattern>& patterns() const { return patterns_; }
    std::string to_string() const;

    friend bool operator==(const ForbiddenFamily&, const ForbiddenFamily&) = default;

private:
    std::vector<Pattern> patterns_;
};

bool contains_clique(const Graph& g, std::size_t r);
std::size_t clique_number(const Graph& g);

std::size_t max_matching_size(const Graph& g);

/// True iff g has `copies` vertex-disjoint copies of the star S_leaves.
bool contains_star_forest(const Graph& g, std::size_t copies, std::size_t leaves);

/// Maximum independent set size; n <= 64.
std::size_t independence_number(const Graph& g);

bool contains_pattern(const Graph& g, const Pattern& p);
bool is_family_free(const Graph& g, const ForbiddenFamily& f);

namespace detail {

inline constexpr std::size_t kExhaustiveMatchingMaxOrder = 12;

/// Edmonds' augmenting-path algorithm with blossom contraction.
std::size_t max_matching_blossom(const Graph& g);
/// Branching over the lowest unmatched vertex; n <= 64.
std::size_t max_matching_exhaustive(const Graph& g);

}  // namespace detail

}  // namespace turan
