#include "turan/detectors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace turan {

// ---------------------------------------------------------------------------
// Patterns and families

std::string to_string(const Pattern& p) {
    return std::visit(
        [](const auto& q) -> std::string {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, CliquePattern>) {
                return "clique:" + std::to_string(q.order);
            } else if constexpr (std::is_same_v<T, MatchingPattern>) {
                return "matching:" + std::to_string(q.edges);
            } else {
                return "starforest:" + std::to_string(q.copies) + "x" + std::to_string(q.leaves);
            }
        },
        p);
}

namespace {

void validate(const Pattern& p) {
    std::visit(
        [](const auto& q) {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, CliquePattern>) {
                if (q.order < 2) throw std::invalid_argument("clique pattern needs r >= 2");
            } else if constexpr (std::is_same_v<T, MatchingPattern>) {
                if (q.edges < 1) throw std::invalid_argument("matching pattern needs s >= 1");
            } else {
                if (q.copies < 1 || q.leaves < 1) {
                    throw std::invalid_argument("star forest pattern needs count >= 1 and l >= 1");
                }
            }
        },
        p);
}

std::size_t parse_count(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

Pattern parse_pattern(std::string_view item) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("pattern '" + std::string(item) + "' lacks ':'");
    }
    const auto kind = item.substr(0, colon);
    const auto arg = item.substr(colon + 1);
    if (kind == "clique") return CliquePattern{parse_count(arg, "clique order")};
    if (kind == "matching") return MatchingPattern{parse_count(arg, "matching size")};
    if (kind == "starforest") {
        const auto x = arg.find('x');
        if (x == std::string_view::npos) throw std::invalid_argument("starforest needs CxL");
        return StarForestPattern{parse_count(arg.substr(0, x), "star count"),
                                 parse_count(arg.substr(x + 1), "star size")};
    }
    throw std::invalid_argument("unknown pattern kind '" + std::string(kind) + "'");
}

}  // namespace

ForbiddenFamily::ForbiddenFamily(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw std::invalid_argument("forbidden family is empty");
    for (const auto& p : patterns_) validate(p);
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

ForbiddenFamily ForbiddenFamily::parse(std::string_view spec) {
    std::vector<Pattern> out;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        auto item = spec.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) out.push_back(parse_pattern(item));
        if (comma == std::string_view::npos) break;
        spec.remove_prefix(comma + 1);
    }
    return ForbiddenFamily(std::move(out));
}

std::string ForbiddenFamily::to_string() const {
    std::string out;
    for (const auto& p : patterns_) {
        if (!out.empty()) out += ',';
        out += turan::to_string(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cliques: branch and bound with a greedy colouring bound (Tomita-style).

namespace {

using Words = std::vector<std::uint64_t>;

bool any_bit(const Words& w) {
    return std::any_of(w.begin(), w.end(), [](auto x) { return x != 0; });
}

class CliqueSearch {
public:
    // Stops as soon as a clique of size `target` is found.
    CliqueSearch(const Graph& g, std::size_t target) : g_(g), target_(target) {}

    std::size_t run(std::size_t lower_bound) {
        best_ = lower_bound;
        Words all(g_.stride(), 0);
        for (Vertex v = 0; v < g_.order(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
        if (g_.order() > 0) expand(0, std::move(all));
        return best_;
    }

private:
    void colour(const Words& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
        Words uncoloured = p;
        std::size_t colour = 0;
        while (any_bit(uncoloured)) {
            ++colour;
            Words q = uncoloured;
            for (std::size_t i = 0; i < q.size(); ++i) {
                while (q[i] != 0) {
                    const Vertex v = i * 64 + static_cast<std::size_t>(std::countr_zero(q[i]));
                    const auto bit = std::uint64_t{1} << (v % 64);
                    uncoloured[i] &= ~bit;
                    q[i] &= ~bit;
                    const auto nbr = g_.row(v);
                    for (std::size_t k = i; k < q.size(); ++k) q[k] &= ~nbr[k];
                    order.push_back(v);
                    bound.push_back(colour);
                }
            }
        }
    }

    void expand(std::size_t size, Words p) {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        colour(p, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (done_ || size + bound[idx] <= best_) return;
            const Vertex v = order[idx];
            Words next(p.size());
            const auto nbr = g_.row(v);
            for (std::size_t k = 0; k < p.size(); ++k) next[k] = p[k] & nbr[k];
            if (!any_bit(next)) {
                if (size + 1 > best_) best_ = size + 1;
            } else {
                expand(size + 1, std::move(next));
            }
            if (best_ >= target_) {
                done_ = true;
                return;
            }
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    const Graph& g_;
    std::size_t target_;
    std::size_t best_ = 0;
    bool done_ = false;
};

}  // namespace

bool contains_clique(const Graph& g, std::size_t r) {
    if (r == 0) throw std::invalid_argument("contains_clique: r must be >= 1");
    if (r > g.order()) return false;
    if (r == 1) return true;
    if (r == 2) return g.edge_count() > 0;
    return CliqueSearch(g, r).run(r - 1) >= r;
}

std::size_t clique_number(const Graph& g) {
    return CliqueSearch(g, std::numeric_limits<std::size_t>::max()).run(0);
}

std::size_t independence_number(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("independence_number: order exceeds 64");
    return clique_number(complement(g));
}

// ---------------------------------------------------------------------------
// Matchings

namespace detail {

namespace {

class Blossom {
public:
    explicit Blossom(const Graph& g) : n_(static_cast<int>(g.order())), adj_(g.order()) {
        for (auto [u, v] : g.edges()) {
            adj_[u].push_back(static_cast<int>(v));
            adj_[v].push_back(static_cast<int>(u));
        }
    }

    std::size_t run() {
        match_.assign(n_, -1);
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u : adj_[v]) {
                if (match_[u] == -1) {
                    match_[u] = v;
                    match_[v] = u;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                const int pv = parent_[u];
                const int ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        std::size_t matched = 0;
        for (int v = 0; v < n_; ++v) matched += match_[v] != -1 ? 1 : 0;
        return matched / 2;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, false);
        parent_.assign(n_, -1);
        base_.resize(n_);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const int cur = lca(v, to);
                    in_blossom_.assign(n_, false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

std::size_t exhaustive(const Graph& g, std::uint64_t avail) {
    const auto left = static_cast<std::size_t>(std::popcount(avail));
    if (left < 2) return 0;
    const int v = std::countr_zero(avail);
    const std::uint64_t rest = avail & ~(std::uint64_t{1} << v);
    std::size_t best = 0;
    for (auto m = g.row(static_cast<Vertex>(v))[0] & rest; m != 0; m &= m - 1) {
        const int u = std::countr_zero(m);
        best = std::max(best, 1 + exhaustive(g, rest & ~(std::uint64_t{1} << u)));
        if (best == left / 2) return best;
    }
    return std::max(best, exhaustive(g, rest));
}

}  // namespace

std::size_t max_matching_blossom(const Graph& g) { return Blossom(g).run(); }

std::size_t max_matching_exhaustive(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("exhaustive matching: order exceeds 64");
    if (g.order() == 0) return 0;
    const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    return exhaustive(g, all);
}

}  // namespace detail

std::size_t max_matching_size(const Graph& g) {
    if (g.order() <= detail::kExhaustiveMatchingMaxOrder) return detail::max_matching_exhaustive(g);
    return detail::max_matching_blossom(g);
}

// ---------------------------------------------------------------------------
// Star forests

namespace {

// Decides whether `need` disjoint copies of S_l fit in G[alive].
//
// Vertices of degree >= need(l+1)-1 are peeled first: such a vertex can always
// be made a centre after the other need-1 stars are placed, so G has need stars
// iff G - v has need-1. The rest is a search over centre multisets taken from
// twin classes (equal neighbourhoods inside `alive`), with leaves assigned by
// bipartite b-matching.
class StarPacker {
public:
    StarPacker(const Graph& g, std::size_t leaves) : g_(g), l_(leaves) {}

    bool run(std::size_t need) {
        alive_ = VertexSet::all(g_.order());
        degree_.resize(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) degree_[v] = g_.degree(v);

        for (;;) {
            if (need == 0) return true;
            if (need * (l_ + 1) > alive_.size()) return false;
            const auto members = alive_.elements();
            auto high = std::find_if(members.begin(), members.end(),
                                     [&](Vertex v) { return degree_[v] + 1 >= need * (l_ + 1); });
            if (high == members.end()) break;
            kill(*high);
            --need;
        }

        std::vector<Vertex> candidates;
        for (Vertex v : alive_.elements()) {
            if (degree_[v] >= l_) candidates.push_back(v);
        }
        if (candidates.size() < need) return false;
        if (need == 1) return true;

        std::map<std::vector<std::uint64_t>, std::size_t> index;
        for (Vertex v : candidates) {
            const VertexSet live = g_.neighbors(v) & alive_;
            const auto key = live.words();
            auto [it, fresh] = index.try_emplace(std::vector<std::uint64_t>(key.begin(), key.end()),
                                                 classes_.size());
            if (fresh) classes_.emplace_back();
            classes_[it->second].push_back(v);
        }
        std::stable_sort(classes_.begin(), classes_.end(), [&](const auto& a, const auto& b) {
            return degree_[a.front()] > degree_[b.front()];
        });
        suffix_size_.assign(classes_.size() + 1, 0);
        for (std::size_t i = classes_.size(); i-- > 0;) {
            suffix_size_[i] = suffix_size_[i + 1] + classes_[i].size();
        }
        leaf_pool_ = alive_.elements();
        return search(0, need);
    }

private:
    void kill(Vertex v) {
        alive_.erase(v);
        for (Vertex u : (g_.neighbors(v) & alive_).elements()) --degree_[u];
    }

    bool search(std::size_t cls, std::size_t need) {
        if (need == 0) return true;
        if (cls == classes_.size() || suffix_size_[cls] < need) return false;
        if ((centres_.size() + need) * (l_ + 1) > leaf_pool_.size()) return false;

        const auto& members = classes_[cls];
        std::size_t feasible = 0;
        for (std::size_t j = 1; j <= std::min(need, members.size()); ++j) {
            centres_.push_back(members[j - 1]);
            const bool ok = leaves_assignable();
            if (!ok) {
                centres_.pop_back();
                break;
            }
            feasible = j;
        }
        // centres_ now holds `feasible` members of this class
        for (std::size_t j = feasible + 1; j-- > 0;) {
            if (search(cls + 1, need - j)) return true;
            if (j > 0) centres_.pop_back();
        }
        return false;
    }

    // Each centre needs l distinct leaves among its alive non-centre neighbours.
    bool leaves_assignable() {
        const std::size_t slots = centres_.size() * l_;
        owner_.assign(g_.order(), -1);
        std::vector<bool> is_centre(g_.order(), false);
        for (Vertex c : centres_) is_centre[c] = true;
        for (std::size_t slot = 0; slot < slots; ++slot) {
            visited_.assign(g_.order(), false);
            if (!augment(slot, is_centre)) return false;
        }
        return true;
    }

    bool augment(std::size_t slot, const std::vector<bool>& is_centre) {
        const Vertex c = centres_[slot / l_];
        for (Vertex x : (g_.neighbors(c) & alive_).elements()) {
            if (is_centre[x] || visited_[x]) continue;
            visited_[x] = true;
            if (owner_[x] == -1 || augment(static_cast<std::size_t>(owner_[x]), is_centre)) {
                owner_[x] = static_cast<long>(slot);
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    std::size_t l_;
    VertexSet alive_;
    std::vector<std::size_t> degree_;
    std::vector<std::vector<Vertex>> classes_;
    std::vector<std::size_t> suffix_size_;
    std::vector<Vertex> leaf_pool_;
    std::vector<Vertex> centres_;
    std::vector<long> owner_;
    std::vector<bool> visited_;
};

}  // namespace

bool contains_star_forest(const Graph& g, std::size_t copies, std::size_t leaves) {
    if (copies == 0 || leaves == 0) {
        throw std::invalid_argument("contains_star_forest: count and l must be >= 1");
    }
    if (copies * (leaves + 1) > g.order()) return false;
    if (copies == 1) return g.max_degree() >= leaves;
    if (leaves == 1) return max_matching_size(g) >= copies;
    return StarPacker(g, leaves).run(copies);
}

// ---------------------------------------------------------------------------

bool contains_pattern(const Graph& g, const Pattern& p) {
    return std::visit(
        [&](const auto& q) {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, CliquePattern>) {
                return contains_clique(g, q.order);
            } else if constexpr (std::is_same_v<T, MatchingPattern>) {
                return max_matching_size(g) >= q.edges;
            } else {
                return contains_star_forest(g, q.copies, q.leaves);
            }
        },
        p);
}

bool is_family_free(const Graph& g, const ForbiddenFamily& f) {
    return std::none_of(f.patterns().begin(), f.patterns().end(),
                        [&](const Pattern& p) { return contains_pattern(g, p); });
}

}  // namespace turan
