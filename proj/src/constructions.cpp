#include "turan/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "turan/detectors.hpp"

namespace turan {

namespace {

[[noreturn]] void precondition(const std::string& what) { throw std::invalid_argument(what); }

// Block layout of the regular triangle-free construction on n vertices with degree d.
// V1 = 0..h-1 and V2 = h..n-1 (h = floor(n/2)); each side holds `blocks`
// blocks of d vertices followed by a remainder a_1..a_r (V1) and
// b_1..b_r [, v0] (V2).
class RegularBuilder {
public:
    RegularBuilder(std::size_t n, std::size_t degree)
        : n_(n), d_(degree), half_(n / 2), blocks_(degree == 0 ? 0 : half_ / degree),
          rem_(degree == 0 ? half_ : half_ % degree), b_(n) {}

    RegularConstruction build() {
        if (d_ > 0) {
            wire_blocks();
            for (std::size_t i = 0; i < rem_; ++i) {
                for (std::size_t t = rem_; t < d_; ++t) repair_swap(i);
            }
            if (n_ % 2 == 1) {
                std::vector<bool> used(blocks_, false);
                for (std::size_t j = 0; j < d_ / 2; ++j) exceptional_swap(used);
            }
        }
        RegularConstruction out{std::move(b_).build(), {}};
        out.certificate.v1 = VertexSet::range(n_, 0, half_);
        out.certificate.v2 = VertexSet::range(n_, half_, n_);
        if (n_ % 2 == 1) out.certificate.exceptional = n_ - 1;
        return out;
    }

private:
    Vertex left(std::size_t block, std::size_t i) const { return block * d_ + i; }
    Vertex right(std::size_t block, std::size_t i) const { return half_ + block * d_ + i; }
    Vertex a(std::size_t i) const { return blocks_ * d_ + i; }
    Vertex b(std::size_t i) const { return half_ + blocks_ * d_ + i; }
    Vertex v0() const { return n_ - 1; }

    void wire_blocks() {
        for (std::size_t t = 0; t < blocks_; ++t) {
            for (std::size_t i = 0; i < d_; ++i) {
                for (std::size_t j = 0; j < d_; ++j) b_.add_edge(left(t, i), right(t, j));
            }
        }
        for (std::size_t i = 0; i < rem_; ++i) {
            for (std::size_t j = 0; j < rem_; ++j) b_.add_edge(a(i), b(j));
        }
    }

    // Delete a block edge xy, add x-b_i and y-a_i: raises a_i and b_i by one.
    void repair_swap(std::size_t i) {
        for (std::size_t t = 0; t < blocks_; ++t) {
            for (std::size_t p = 0; p < d_; ++p) {
                for (std::size_t q = 0; q < d_; ++q) {
                    const Vertex x = left(t, p);
                    const Vertex y = right(t, q);
                    if (!b_.adjacent(x, y) || b_.adjacent(x, b(i)) || b_.adjacent(y, a(i))) continue;
                    b_.remove_edge(x, y);
                    b_.add_edge(x, b(i));
                    b_.add_edge(y, a(i));
                    check_triangle_free();
                    return;
                }
            }
        }
        throw std::logic_error("good_partition_regular: no eligible swap edge for a_" + std::to_string(i));
    }

    // Delete a block edge xy in a block not used before, add x-v0 and y-v0.
    void exceptional_swap(std::vector<bool>& used) {
        for (std::size_t t = 0; t < blocks_; ++t) {
            if (used[t]) continue;
            for (std::size_t p = 0; p < d_; ++p) {
                for (std::size_t q = 0; q < d_; ++q) {
                    const Vertex x = left(t, p);
                    const Vertex y = right(t, q);
                    if (!b_.adjacent(x, y) || b_.adjacent(x, v0()) || b_.adjacent(y, v0())) continue;
                    b_.remove_edge(x, y);
                    b_.add_edge(x, v0());
                    b_.add_edge(y, v0());
                    used[t] = true;
                    check_triangle_free();
                    return;
                }
            }
        }
        throw std::logic_error("good_partition_regular: no free block for the exceptional vertex");
    }

    void check_triangle_free() const {
        if (contains_clique(b_.peek(), 3)) {
            throw std::logic_error("good_partition_regular: swap created a triangle");
        }
    }

    std::size_t n_;
    std::size_t d_;
    std::size_t half_;
    std::size_t blocks_;
    std::size_t rem_;
    GraphBuilder b_;
};

RegularConstruction lemma_graph(std::size_t n, std::size_t degree) {
    return RegularBuilder(n, degree).build();
}

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

// T2(s) on 0..s-1: larger part = even labels (joined to `first`), other part =
// odd labels (joined to `second`); `host` vertices are shifted by s.
Graph attach_t2(std::size_t s, const Graph& host, const VertexSet& first, const VertexSet& second) {
    GraphBuilder b(s + host.order());
    for (Vertex u = 0; u < s; u += 2) {
        for (Vertex v = 1; v < s; v += 2) b.add_edge(u, v);
    }
    for (auto [u, v] : host.edges()) b.add_edge(u + s, v + s);
    for (Vertex u = 0; u < s; ++u) {
        const auto& side = u % 2 == 0 ? first : second;
        for (Vertex w : side.elements()) b.add_edge(u, w + s);
    }
    return std::move(b).build();
}

}  // namespace

bool certificate_holds(const Graph& g, const PartitionCertificate& cert) {
    const std::size_t n = g.order();
    if (cert.v1.universe() != n || cert.v2.universe() != n) return false;
    if (!(cert.v1 & cert.v2).empty()) return false;
    if ((cert.v1 | cert.v2) != VertexSet::all(n)) return false;
    if (cert.v1.size() != n / 2 || cert.v2.size() != ceil_half(n)) return false;
    VertexSet rest2 = cert.v2;
    if (cert.exceptional) {
        if (!cert.v2.contains(*cert.exceptional) || n % 2 == 0) return false;
        rest2.erase(*cert.exceptional);
    }
    return is_bipartition(g, cert.v1, rest2);
}

Graph turan_graph(std::size_t n, std::size_t k) {
    if (k == 0) {
        if (n > 0) precondition("turan_graph: k = 0 with n > 0");
        return Graph(0);
    }
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (u % k != v % k) b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    return join(Graph(a), Graph(b));
}

RegularConstruction good_partition_regular(std::size_t n, std::size_t l) {
    if (l == 0) precondition("good_partition_regular: l must be >= 1");
    if (n < l * l + 2) {
        precondition("good_partition_regular: need n >= l^2 + 2 (n=" + std::to_string(n) +
                     ", l=" + std::to_string(l) + ")");
    }
    return lemma_graph(n, l);
}

BipartiteConstruction r1_bipartite(std::size_t m, std::size_t l) {
    if (m == 0 || l == 0) precondition("r1_bipartite: need m >= 1 and l >= 1");
    const std::size_t s_size = ceil_half(m);
    const std::size_t t_size = m / 2;
    if (s_size < l - 1) precondition("r1_bipartite: need ceil(m/2) >= l - 1");
    GraphBuilder b(m);
    for (std::size_t i = 0; i < t_size; ++i) {
        for (std::size_t j = 0; j + 1 < l; ++j) b.add_edge(s_size + i, (i * (l - 1) + j) % s_size);
    }
    return {std::move(b).build(), VertexSet::range(m, 0, s_size), VertexSet::range(m, s_size, m)};
}

Graph g1(std::size_t n, std::size_t s, std::size_t l) {
    if (l == 0 || n < s) precondition("g1: need l >= 1 and n >= s");
    const std::size_t m = n - s;
    if (m < (l - 1) * (l - 1) + 2) precondition("g1: need n - s >= (l-1)^2 + 2");
    auto r = lemma_graph(m, l - 1);
    VertexSet second = r.certificate.v2;
    if (r.certificate.exceptional) second.erase(*r.certificate.exceptional);
    return attach_t2(s, r.graph, r.certificate.v1, second);
}

Graph g2(std::size_t n, std::size_t s, std::size_t l) {
    if (l == 0 || n < s) precondition("g2: need l >= 1 and n >= s");
    const std::size_t m = n - s;
    if (m % 2 == 0 && m >= (l - 1) * (l - 1) + 2) {
        // an (l-1)-regular balanced bipartite R1: take the regular triangle-free graph
        auto r = lemma_graph(m, l - 1);
        return attach_t2(s, r.graph, r.certificate.v1, r.certificate.v2);
    }
    auto r1 = r1_bipartite(m, l);
    return attach_t2(s, r1.graph, r1.s_side, r1.t_side);
}

Graph alon_frankl_extremal(std::size_t n, std::size_t k, std::size_t s) {
    if (k < 2 || n < s) precondition("alon_frankl_extremal: need k >= 2 and n >= s");
    return join(turan_graph(s, k - 1), Graph(n - s));
}

Graph main_extremal(std::size_t n, std::size_t k, std::size_t s, std::size_t l) {
    if (k < 3 || l < 2 || n < s) precondition("main_extremal: need k >= 3, l >= 2, n >= s");
    if (n - s < (l - 1) * (l - 1) + 2) precondition("main_extremal: need n - s >= (l-1)^2 + 2");
    return join(turan_graph(s, k - 2), lemma_graph(n - s, l - 1).graph);
}

}  // namespace turan
