#pragma once

#include <cstddef>
#include <optional>

#include "turan/graph.hpp"

namespace turan {

/// Good partition (V1, V2) of the regular triangle-free graph, plus the exceptional vertex
/// v0 in V2 when the order is odd.
struct PartitionCertificate {
    VertexSet v1;
    VertexSet v2;
    std::optional<Vertex> exceptional;
};

/// Checks every PartitionCertificate invariant against its host graph.
bool certificate_holds(const Graph& g, const PartitionCertificate& cert);

struct RegularConstruction {
    Graph graph;
    PartitionCertificate certificate;
};

struct BipartiteConstruction {
    Graph graph;
    VertexSet s_side;
    VertexSet t_side;
};

/// Balanced complete k-partite graph; vertex v lies in part v mod k.
Graph turan_graph(std::size_t n, std::size_t k);

/// K_{a,b} with vertices 0..a-1 on the first side.
Graph complete_bipartite(std::size_t a, std::size_t b);

/// K3-free l-regular (or almost l-regular) graph with a good partition,
/// built by block wiring plus edge swaps. Requires n >= l^2 + 2.
RegularConstruction good_partition_regular(std::size_t n, std::size_t l);

/// Bipartite S|T graph on m vertices, |S| = ceil(m/2), every T-vertex of
/// degree l-1, every S-vertex of degree <= l-1 (round-robin wiring).
BipartiteConstruction r1_bipartite(std::size_t m, std::size_t l);

/// Member of G1(s): T2(s) joined to the good partition of the (l-1)-regular
/// triangle-free graph on n-s vertices. Vertices 0..s-1 carry T2(s).
Graph g1(std::size_t n, std::size_t s, std::size_t l);

/// Member of G2(s): T2(s) joined to an R1 bipartite graph on n-s vertices.
Graph g2(std::size_t n, std::size_t s, std::size_t l);

/// G(n,k) = T_{k-1}(s) joined with an independent set of n-s vertices.
Graph alon_frankl_extremal(std::size_t n, std::size_t k, std::size_t s);

/// T_{k-2}(s) joined with the (l-1)-regular triangle-free graph on n-s vertices.
Graph main_extremal(std::size_t n, std::size_t k, std::size_t s, std::size_t l);

}  // namespace turan
