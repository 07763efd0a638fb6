#include "turan/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/graph_io.hpp"

namespace turan {

namespace {

void check_oracle_order(std::size_t n) {
    if (n > kOracleMaxOrder) {
        throw std::invalid_argument("oracle order " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(kOracleMaxOrder));
    }
}

Graph rows_to_graph(std::size_t n, const SmallRows& rows) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto m = static_cast<unsigned>(rows[i] >> (i + 1)); m != 0; m &= m - 1) {
            b.add_edge(i, i + 1 + static_cast<std::size_t>(std::countr_zero(m)));
        }
    }
    return std::move(b).build();
}

bool has_clique_in(const SmallRows& rows, std::uint32_t candidates, std::size_t need) {
    if (need == 0) return true;
    if (static_cast<std::size_t>(std::popcount(candidates)) < need) return false;
    for (auto m = candidates; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        const std::uint32_t later = m & ~((2U << v) - 1U);
        if (has_clique_in(rows, later & rows[v], need - 1)) return true;
    }
    return false;
}

// Grows canonical parents by one edge. A child G = P + e is kept iff deleting
// the canonical edge of G gives back the class of P, so every class has exactly
// one parent class; duplicates from one parent are merged locally.
class Expander {
public:
    Expander(std::size_t n, const ForbiddenFamily& f) : n_(n), family_(f) {
        for (const auto& p : family_.patterns()) {
            if (!std::holds_alternative<CliquePattern>(p)) needs_full_check_ = true;
        }
    }

    std::vector<CanonicalForm> children(const CanonicalForm& parent) const {
        std::vector<CanonicalForm> out;
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = u + 1; v < n_; ++v) {
                if ((parent.rows[u] >> v) & 1U) continue;
                SmallRows rows = parent.rows;
                rows[u] |= static_cast<std::uint16_t>(1U << v);
                rows[v] |= static_cast<std::uint16_t>(1U << u);
                if (!free_after_adding(rows, u, v)) continue;

                const auto lab = canonical_labeling(n_, rows);
                const auto [ci, cj] = canonical_edge(lab.form);
                const std::size_t x = lab.vertex_at[ci];
                const std::size_t y = lab.vertex_at[cj];
                if (!((x == u && y == v) || (x == v && y == u))) {
                    SmallRows back = rows;
                    back[x] &= static_cast<std::uint16_t>(~(1U << y));
                    back[y] &= static_cast<std::uint16_t>(~(1U << x));
                    if (canonical_labeling(n_, back).form != parent) continue;
                }
                out.push_back(lab.form);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    CanonicalForm root() const {
        CanonicalForm f;
        f.order = static_cast<std::uint8_t>(n_);
        return f;
    }

    bool root_is_free() const { return is_family_free(Graph(n_), family_); }

private:
    // Largest (j, i) edge of the canonical graph, i < j.
    static std::pair<std::size_t, std::size_t> canonical_edge(const CanonicalForm& form) {
        for (std::size_t j = form.order; j-- > 1;) {
            const unsigned below = form.rows[j] & ((1U << j) - 1U);
            if (below != 0) return {static_cast<std::size_t>(std::bit_width(below) - 1), j};
        }
        throw std::logic_error("canonical_edge on an edgeless graph");
    }

    bool free_after_adding(const SmallRows& rows, std::size_t u, std::size_t v) const {
        for (const auto& p : family_.patterns()) {
            if (const auto* c = std::get_if<CliquePattern>(&p)) {
                // a new K_r must use the new edge
                const std::uint32_t common = rows[u] & rows[v];
                if (has_clique_in(rows, common, c->order - 2)) return false;
            }
        }
        if (!needs_full_check_) return true;
        const Graph g = rows_to_graph(n_, rows);
        for (const auto& p : family_.patterns()) {
            if (!std::holds_alternative<CliquePattern>(p) && contains_pattern(g, p)) return false;
        }
        return true;
    }

    std::size_t n_;
    const ForbiddenFamily& family_;
    bool needs_full_check_ = false;
};

bool form_less(const CanonicalForm& a, const CanonicalForm& b) {
    const auto ea = a.edge_count();
    const auto eb = b.edge_count();
    return ea != eb ? ea < eb : a < b;
}

void serial_visit(const Expander& ex, const CanonicalForm& g, std::vector<CanonicalForm>& out) {
    out.push_back(g);
    for (const auto& child : ex.children(g)) serial_visit(ex, child, out);
}

}  // namespace

bool ExtremalRecord::same_result(const ExtremalRecord& other) const {
    return n == other.n && family == other.family && ex_value == other.ex_value &&
           extremal_graphs == other.extremal_graphs && graphs_visited == other.graphs_visited;
}

nlohmann::json to_json(const ExtremalRecord& r) {
    return {{"n", r.n},
            {"family", r.family.to_string()},
            {"ex", r.ex_value},
            {"extremal", r.extremal_graphs},
            {"graphs_visited", r.graphs_visited},
            {"elapsed_seconds", r.elapsed_seconds}};
}

ExtremalRecord record_from_json(const nlohmann::json& j) {
    return ExtremalRecord{.n = j.at("n").get<std::size_t>(),
                          .family = ForbiddenFamily::parse(j.at("family").get<std::string>()),
                          .ex_value = j.at("ex").get<std::size_t>(),
                          .extremal_graphs = j.at("extremal").get<std::vector<std::string>>(),
                          .graphs_visited = j.at("graphs_visited").get<std::uint64_t>(),
                          .elapsed_seconds = j.value("elapsed_seconds", 0.0)};
}

std::vector<CanonicalForm> enumerate_free_classes(std::size_t n, const ForbiddenFamily& f,
                                                  const EnumerationOptions& options) {
    check_oracle_order(n);
    const Expander ex(n, f);
    if (!ex.root_is_free()) return {};

    std::vector<CanonicalForm> all{ex.root()};
    std::vector<CanonicalForm> level = all;
    const int jobs = static_cast<int>(std::max<std::size_t>(1, options.jobs));
    while (!level.empty()) {
        std::vector<std::vector<CanonicalForm>> kids(level.size());
        const auto count = static_cast<std::int64_t>(level.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
        for (std::int64_t i = 0; i < count; ++i) {
            kids[static_cast<std::size_t>(i)] = ex.children(level[static_cast<std::size_t>(i)]);
        }
        std::vector<CanonicalForm> next;
        for (auto& k : kids) next.insert(next.end(), k.begin(), k.end());
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

std::vector<CanonicalForm> enumerate_free_classes_serial(std::size_t n, const ForbiddenFamily& f) {
    check_oracle_order(n);
    const Expander ex(n, f);
    std::vector<CanonicalForm> out;
    if (ex.root_is_free()) serial_visit(ex, ex.root(), out);
    std::sort(out.begin(), out.end(), form_less);
    return out;
}

std::vector<Graph> enumerate_free_graphs(std::size_t n, const ForbiddenFamily& f, const EnumerationOptions& options) {
    std::vector<Graph> out;
    for (const auto& form : enumerate_free_classes(n, f, options)) out.push_back(form.to_graph());
    return out;
}

ExtremalRecord brute_force_ex(std::size_t n, const ForbiddenFamily& f, const EnumerationOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto classes = enumerate_free_classes(n, f, options);
    ExtremalRecord rec{.n = n, .family = f, .ex_value = 0, .extremal_graphs = {}, .graphs_visited = classes.size(),
                       .elapsed_seconds = 0.0};
    if (!classes.empty()) {
        rec.ex_value = classes.back().edge_count();
        for (auto it = classes.rbegin(); it != classes.rend() && it->edge_count() == rec.ex_value; ++it) {
            rec.extremal_graphs.push_back(graph6_encode(it->to_graph()));
        }
        std::sort(rec.extremal_graphs.begin(), rec.extremal_graphs.end());
    }
    rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<Graph> enumerate_extremal(std::size_t n, const ForbiddenFamily& f, const EnumerationOptions& options) {
    std::vector<Graph> out;
    for (const auto& g6 : brute_force_ex(n, f, options).extremal_graphs) out.push_back(graph6_decode(g6));
    return out;
}

// ---------------------------------------------------------------------------
// Family membership

namespace {

using Mask = std::uint32_t;

struct Host {
    std::size_t n;
    SmallRows rows;

    Mask nbrs(std::size_t v) const { return rows[v]; }
    std::size_t degree_in(std::size_t v, Mask within) const {
        return static_cast<std::size_t>(std::popcount(rows[v] & within));
    }
};

Mask bit(std::size_t v) { return Mask{1} << v; }

// Two-colouring of H[within] whose side 0 has `target` vertices, side-0
// vertices lie in allowed0 and side-1 vertices in allowed1.
std::optional<Mask> constrained_two_colouring(const Host& h, Mask within, std::size_t target, Mask allowed0,
                                              Mask allowed1) {
    struct Option {
        Mask side0;
        bool valid;
    };
    std::vector<std::array<Option, 2>> comps;
    Mask seen = 0;
    for (auto m = within; m != 0; m &= m - 1) {
        const auto root = static_cast<std::size_t>(std::countr_zero(m));
        if (seen & bit(root)) continue;
        Mask colour[2] = {bit(root), 0};
        Mask frontier = bit(root);
        int side = 0;
        seen |= bit(root);
        while (frontier != 0) {
            Mask next = 0;
            for (auto f = frontier; f != 0; f &= f - 1) next |= h.nbrs(static_cast<std::size_t>(std::countr_zero(f)));
            next &= within;
            side ^= 1;
            if (next & colour[side ^ 1]) return std::nullopt;
            next &= ~colour[side];
            colour[side] |= next;
            seen |= next;
            frontier = next;
        }
        if (colour[0] & colour[1]) return std::nullopt;
        auto ok = [&](Mask s0, Mask s1) { return (s0 & ~allowed0) == 0 && (s1 & ~allowed1) == 0; };
        comps.push_back({Option{colour[0], ok(colour[0], colour[1])}, Option{colour[1], ok(colour[1], colour[0])}});
    }
    // reachable[i][k]: choice index reaching side-0 size k after i components
    const std::size_t cap = h.n + 1;
    std::vector<std::vector<int>> choice(comps.size() + 1, std::vector<int>(cap, -1));
    choice[0][0] = 2;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t k = 0; k < cap; ++k) {
            if (choice[i][k] == -1) continue;
            for (int o = 0; o < 2; ++o) {
                if (!comps[i][o].valid) continue;
                const auto kk = k + static_cast<std::size_t>(std::popcount(comps[i][o].side0));
                if (kk < cap && choice[i + 1][kk] == -1) choice[i + 1][kk] = o;
            }
        }
    }
    if (target >= cap || choice[comps.size()][target] == -1) return std::nullopt;
    Mask side0 = 0;
    std::size_t k = target;
    for (std::size_t i = comps.size(); i-- > 0;) {
        const int o = choice[i + 1][k];
        side0 |= comps[i][o].side0;
        k -= static_cast<std::size_t>(std::popcount(comps[i][o].side0));
    }
    return side0;
}

bool no_edges_inside(const Host& h, Mask part) {
    for (auto m = part; m != 0; m &= m - 1) {
        if (h.nbrs(static_cast<std::size_t>(std::countr_zero(m))) & part) return false;
    }
    return true;
}

bool triangle_free_in(const Host& h, Mask within) {
    for (auto m = within; m != 0; m &= m - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(m));
        for (auto p = h.nbrs(v) & within; p != 0; p &= p - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(p));
            if (h.nbrs(u) & h.nbrs(v) & within) return false;
        }
    }
    return true;
}

// Neighbourhood in W shared by every vertex of `part`; nullopt if they differ.
std::optional<Mask> common_join(const Host& h, Mask part, Mask w) {
    std::optional<Mask> shared;
    for (auto m = part; m != 0; m &= m - 1) {
        const Mask nb = h.nbrs(static_cast<std::size_t>(std::countr_zero(m))) & w;
        if (shared && *shared != nb) return std::nullopt;
        shared = nb;
    }
    return shared;
}

// R = H[w] must be the (almost) (l-1)-regular K3-free good-partition graph whose
// good partition (V1, V2, v0) matches the join pattern of A and B.
bool matches_g1(const Host& h, Mask w, std::optional<Mask> join_a, std::optional<Mask> join_b, std::size_t l) {
    const auto m = static_cast<std::size_t>(std::popcount(w));
    const std::size_t d = l - 1;
    std::size_t deficient = 0;
    for (auto it = w; it != 0; it &= it - 1) {
        const auto deg = h.degree_in(static_cast<std::size_t>(std::countr_zero(it)), w);
        if (deg == d) continue;
        if (d > 0 && deg == d - 1) {
            ++deficient;
        } else {
            return false;
        }
    }
    if (deficient != ((d * m) % 2 == 1 ? 1U : 0U)) return false;
    if (!triangle_free_in(h, w)) return false;

    const std::size_t v1_size = m / 2;
    auto good = [&](Mask v1, Mask v2_rest) {
        return static_cast<std::size_t>(std::popcount(v1)) == v1_size && (v1 & v2_rest) == 0 &&
               no_edges_inside(h, v1) && no_edges_inside(h, v2_rest);
    };

    if (m % 2 == 0) {
        if (join_a) {
            const Mask v1 = *join_a;
            const Mask v2 = w & ~v1;
            if (join_b && *join_b != v2) return false;
            return good(v1, v2);
        }
        return constrained_two_colouring(h, w, v1_size, w, w).has_value();
    }

    for (auto it = w; it != 0; it &= it - 1) {
        const auto v0 = static_cast<std::size_t>(std::countr_zero(it));
        const Mask rest = w & ~bit(v0);
        if (join_a) {
            const Mask v1 = *join_a;
            if (v1 & bit(v0)) continue;
            const Mask v2_rest = rest & ~v1;
            if (join_b && *join_b != v2_rest) continue;
            if (good(v1, v2_rest)) return true;
        } else if (constrained_two_colouring(h, rest, v1_size, rest, rest)) {
            return true;
        }
    }
    return false;
}

// R1 = H[w] bipartite S|T, |S| = ceil(m/2), T-degrees exactly l-1, S-degrees <= l-1.
bool matches_g2(const Host& h, Mask w, std::optional<Mask> join_a, std::optional<Mask> join_b, std::size_t l) {
    const auto m = static_cast<std::size_t>(std::popcount(w));
    const std::size_t d = l - 1;
    Mask full_degree = 0;
    for (auto it = w; it != 0; it &= it - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(it));
        const auto deg = h.degree_in(v, w);
        if (deg > d) return false;
        if (deg == d) full_degree |= bit(v);
    }
    const std::size_t s_size = (m + 1) / 2;
    if (join_a) {
        const Mask s_side = *join_a;
        const Mask t_side = w & ~s_side;
        if (join_b && *join_b != t_side) return false;
        return static_cast<std::size_t>(std::popcount(s_side)) == s_size && (s_side & ~w) == 0 &&
               (t_side & ~full_degree) == 0 && no_edges_inside(h, s_side) && no_edges_inside(h, t_side);
    }
    return constrained_two_colouring(h, w, s_size, w, full_degree).has_value();
}

// Splits of U into (A, B) with H[U] = T2(s), |A| = ceil(s/2).
std::vector<std::pair<Mask, Mask>> t2_splits(const Host& h, Mask u, std::size_t s) {
    if (s == 0) return {{0, 0}};
    if (s == 1) return {{u, 0}};
    const auto root = static_cast<std::size_t>(std::countr_zero(u));
    const Mask x = (u & ~h.nbrs(root));  // root's side
    const Mask y = u & ~x;
    for (auto m = x; m != 0; m &= m - 1) {
        if ((h.nbrs(static_cast<std::size_t>(std::countr_zero(m))) & u) != y) return {};
    }
    for (auto m = y; m != 0; m &= m - 1) {
        if ((h.nbrs(static_cast<std::size_t>(std::countr_zero(m))) & u) != x) return {};
    }
    const auto nx = static_cast<std::size_t>(std::popcount(x));
    const auto ny = static_cast<std::size_t>(std::popcount(y));
    const std::size_t big = (s + 1) / 2;
    std::vector<std::pair<Mask, Mask>> out;
    if (nx == big && ny == s - big) out.emplace_back(x, y);
    if (ny == big && nx == s - big && nx != ny) out.emplace_back(y, x);
    if (nx == ny && nx == big) out.emplace_back(y, x);
    return out;
}

template <typename Match>
bool search_join_structure(const Host& h, std::size_t s, std::size_t l, Match&& match) {
    const std::size_t n = h.n;
    if (s > n || l == 0) return false;
    const Mask all = n == 0 ? 0 : static_cast<Mask>((Mask{1} << n) - 1);
    // enumerate s-subsets in increasing order (Gosper's hack)
    Mask u = s == 0 ? 0 : static_cast<Mask>((Mask{1} << s) - 1);
    for (;;) {
        const Mask w = all & ~u;
        for (auto [a, b] : t2_splits(h, u, s)) {
            std::optional<Mask> join_a;
            std::optional<Mask> join_b;
            bool consistent = true;
            if (a) {
                join_a = common_join(h, a, w);
                consistent = join_a.has_value();
            }
            if (consistent && b) {
                join_b = common_join(h, b, w);
                consistent = join_b.has_value();
            }
            if (consistent && match(h, w, join_a, join_b, l)) return true;
        }
        if (s == 0 || s == n) break;
        const Mask c = u & (~u + 1);
        const Mask r = u + c;
        u = (((r ^ u) >> 2) / c) | r;
        if (u & ~all) break;
    }
    return false;
}

}  // namespace

bool family_membership(const Graph& g, const FamilyDescriptor& family) {
    const Host h{g.order(), to_small_rows(g)};
    return std::visit(
        [&](const auto& fam) -> bool {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, CompleteBipartiteFamily>) {
                if (fam.s > g.order()) return false;
                return are_isomorphic(g, complete_bipartite(fam.s, g.order() - fam.s));
            } else if constexpr (std::is_same_v<T, G1Family>) {
                return search_join_structure(h, fam.s, fam.l, matches_g1);
            } else {
                return search_join_structure(h, fam.s, fam.l, matches_g2);
            }
        },
        family);
}

}  // namespace turan
