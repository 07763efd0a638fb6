#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_order(std::size_t n) {
    if (n > Graph::kMaxVertices) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds " +
                                    std::to_string(Graph::kMaxVertices));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

VertexSet VertexSet::all(std::size_t universe) { return range(universe, 0, universe); }

VertexSet VertexSet::range(std::size_t universe, Vertex first, Vertex last) {
    VertexSet s(universe);
    for (Vertex v = first; v < last; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

std::size_t VertexSet::size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::contains(Vertex v) const {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) throw std::out_of_range("vertex outside set universe");
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<Vertex> VertexSet::elements() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (auto w = words_[i]; w != 0; w &= w - 1) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    }
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (other.universe_ > universe_) throw std::invalid_argument("vertex set universe mismatch");
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n) : n_(n), stride_(words_for(n)) {
    check_order(n);
    bits_.assign(n_ * stride_, 0);
}

std::size_t Graph::degree(Vertex v) const {
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    return ((bits_[u * stride_ + v / 64] >> (v % 64)) & 1U) != 0;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex out of range");
    return {bits_.data() + v * stride_, stride_};
}

VertexSet Graph::neighbors(Vertex v) const {
    VertexSet s(n_);
    auto r = row(v);
    for (Vertex u = 0; u < n_; ++u) {
        if ((r[u / 64] >> (u % 64)) & 1U) s.insert(u);
    }
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u) {
        auto r = row(u);
        for (std::size_t i = u / 64; i < stride_; ++i) {
            auto w = r[i];
            if (i == u / 64) w &= ~((std::uint64_t{2} << (u % 64)) - 1);
            for (; w != 0; w &= w - 1) {
                out.emplace_back(u, i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            }
        }
    }
    return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
    std::vector<std::size_t> out(n_);
    for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
    if (u >= g_.n_ || v >= g_.n_) {
        throw std::out_of_range("edge endpoint out of range: {" + std::to_string(u) + "," +
                                std::to_string(v) + "} with n=" + std::to_string(g_.n_));
    }
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (g_.adjacent(u, v)) return false;
    g_.mutable_row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
    g_.mutable_row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
    ++g_.edges_;
    return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (!g_.adjacent(u, v)) return false;
    g_.mutable_row(u)[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    g_.mutable_row(v)[u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --g_.edges_;
    return true;
}

void GraphBuilder::add_all_between(const VertexSet& a, const VertexSet& b) {
    for (Vertex u : a.elements()) {
        for (Vertex v : b.elements()) {
            if (u != v) add_edge(u, v);
        }
    }
}

// ---------------------------------------------------------------------------
// Operations

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph join(const Graph& g, const Graph& h) {
    const std::size_t ng = g.order();
    GraphBuilder b(ng + h.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(u + ng, v + ng);
    for (Vertex u = 0; u < ng; ++u) {
        for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, v + ng);
    }
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const std::size_t ng = g.order();
    GraphBuilder b(ng + h.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(u + ng, v + ng);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    const auto members = s.elements();
    for (Vertex v : members) {
        if (v >= g.order()) throw std::out_of_range("induced subset contains a non-vertex");
    }
    GraphBuilder b(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (g.adjacent(members[i], members[j])) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph isolate_vertices(const Graph& g, const VertexSet& s) {
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) {
        if (!s.contains(u) && !s.contains(v)) b.add_edge(u, v);
    }
    return std::move(b).build();
}

Graph symmetrize(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.order() || v >= g.order()) throw std::out_of_range("symmetrize: vertex out of range");
    if (u == v) throw std::invalid_argument("symmetrize: u and v must differ");
    if (g.adjacent(u, v)) throw std::invalid_argument("symmetrize: u and v are adjacent");
    GraphBuilder b(g);
    for (Vertex w : g.neighbors(u).elements()) b.remove_edge(u, w);
    for (Vertex w : g.neighbors(v).elements()) b.add_edge(u, w);
    return std::move(b).build();
}

std::vector<std::vector<Vertex>> equivalence_classes(const Graph& g) {
    std::map<std::vector<std::uint64_t>, std::size_t> index;
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto r = g.row(v);
        std::vector<std::uint64_t> key(r.begin(), r.end());
        auto [it, fresh] = index.try_emplace(std::move(key), classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(v);
    }
    return classes;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

bool is_bipartite(const Graph& g, const VertexSet& within) {
    std::vector<int> colour(g.order(), -1);
    std::vector<Vertex> stack;
    for (Vertex root : within.elements()) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : (g.neighbors(x) & within).elements()) {
                if (colour[y] == -1) {
                    colour[y] = 1 - colour[x];
                    stack.push_back(y);
                } else if (colour[y] == colour[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_bipartition(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (Vertex v : a.elements()) {
        if (!(g.neighbors(v) & a).empty()) return false;
    }
    for (Vertex v : b.elements()) {
        if (!(g.neighbors(v) & b).empty()) return false;
    }
    return true;
}

}  // namespace turan
