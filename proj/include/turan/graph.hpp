#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace turan {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Bitmask over the vertex indices 0..universe-1 of a host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    static VertexSet all(std::size_t universe);
    static VertexSet range(std::size_t universe, Vertex first, Vertex last);
    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);

    std::size_t universe() const { return universe_; }
    std::size_t size() const;
    bool empty() const;
    bool contains(Vertex v) const;

    void insert(Vertex v);
    void erase(Vertex v);

    std::vector<Vertex> elements() const;
    std::span<const std::uint64_t> words() const { return words_; }

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

class GraphBuilder;

/// Simple undirected graph stored as symmetric bit rows.
///
/// A Graph is an immutable value; every structural operation returns a new
/// graph. Rows are packed into 64-bit words, one stride per vertex, so small
/// graphs (n <= 64) cost a single word per row.
class Graph {
public:
    static constexpr std::size_t kMaxVertices = std::size_t{1} << 16;

    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const { return edges_; }
    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Raw neighbour row of `v`; `stride()` words, bits >= n are zero.
    std::span<const std::uint64_t> row(Vertex v) const;
    std::size_t stride() const { return stride_; }
    VertexSet neighbors(Vertex v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    std::vector<std::size_t> degree_sequence() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    std::uint64_t* mutable_row(Vertex v) { return bits_.data() + v * stride_; }

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    std::size_t order() const { return g_.order(); }
    bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
    std::size_t degree(Vertex v) const { return g_.degree(v); }

    /// Adds {u, v}; returns false when the edge was already present.
    bool add_edge(Vertex u, Vertex v);
    /// Removes {u, v}; returns false when the edge was absent.
    bool remove_edge(Vertex u, Vertex v);
    void add_all_between(const VertexSet& a, const VertexSet& b);

    const Graph& peek() const { return g_; }
    Graph build() && { return std::move(g_); }

private:
    void check_pair(Vertex u, Vertex v) const;

    Graph g_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);
Graph build_graph(std::size_t n, std::initializer_list<Edge> edges);

Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
/// Graph with the edges of `g` minus all edges incident to the vertices of `s`
/// (vertex labels kept).
Graph isolate_vertices(const Graph& g, const VertexSet& s);

/// Replaces the neighbourhood of `u` by the neighbourhood of `v`.
/// Defined only for distinct non-adjacent u, v.
Graph symmetrize(const Graph& g, Vertex u, Vertex v);

/// Vertices u, v are equivalent iff N(u) = N(v). Classes in ascending order of
/// their smallest member.
std::vector<std::vector<Vertex>> equivalence_classes(const Graph& g);

/// Relabels vertex v to perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// True iff the subgraph induced by `within` has no odd cycle.
bool is_bipartite(const Graph& g, const VertexSet& within);
/// True iff no edge of `g` has both endpoints in `a` or both in `b`.
bool is_bipartition(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace turan
