#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "turan/graph.hpp"

namespace turan {

/// Largest order accepted by the exact canonicalizer.
inline constexpr std::size_t kCanonicalCap = 16;

using SmallRows = std::array<std::uint16_t, kCanonicalCap>;

/// Canonical representative of an isomorphism class: the adjacency rows of the
/// graph relabeled by its canonical labeling. Two graphs have equal forms iff
/// they are isomorphic.
struct CanonicalForm {
    std::uint8_t order = 0;
    SmallRows rows{};

    std::size_t edge_count() const;
    Graph to_graph() const;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// vertex_at[i] is the original vertex placed at canonical position i.
    std::array<std::uint8_t, kCanonicalCap> vertex_at{};
};

/// Individualization-refinement canonical labeling on 16-bit rows.
CanonicalLabeling canonical_labeling(std::size_t n, const SmallRows& rows);

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

SmallRows to_small_rows(const Graph& g);

}  // namespace turan
