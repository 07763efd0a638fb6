#include "turan/canonical.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

namespace {

using Perm = std::array<std::uint8_t, kCanonicalCap>;

// Ordered partition of the vertex set; cells are bitmasks kept in order.
struct Partition {
    std::array<std::uint16_t, kCanonicalCap> cells{};
    int count = 0;
};

// Splitter queue. Each split of a cell into f fragments pushes f <= 2(f-1)
// masks, so 16 initial + 2 * 15 pushes bound the capacity.
struct SplitterQueue {
    std::array<std::uint16_t, 64> items{};
    int head = 0;
    int tail = 0;

    void push(std::uint16_t m) { items[tail++] = m; }
    bool empty() const { return head == tail; }
    std::uint16_t pop() { return items[head++]; }
};

class Canonizer {
public:
    Canonizer(std::size_t n, const SmallRows& rows) : n_(static_cast<int>(n)), rows_(rows) {}

    CanonicalLabeling run() {
        CanonicalLabeling out;
        out.form.order = static_cast<std::uint8_t>(n_);
        if (n_ == 0) return out;

        Partition root;
        root.cells[0] = static_cast<std::uint16_t>((1U << n_) - 1U);
        root.count = 1;
        SplitterQueue q;
        q.push(root.cells[0]);
        refine(root, q);
        search(root, 0);

        out.form.rows = best_cert_;
        out.vertex_at = best_lab_;
        return out;
    }

private:
    static constexpr int kNoJump = -1;
    static constexpr std::size_t kMaxStoredAutomorphisms = 128;

    void refine(Partition& p, SplitterQueue& q) const {
        while (!q.empty()) {
            const std::uint16_t splitter = q.pop();
            for (int i = 0; i < p.count; ++i) {
                const std::uint16_t cell = p.cells[i];
                if (std::has_single_bit(cell)) continue;

                std::array<std::uint16_t, kCanonicalCap + 1> bucket{};
                int lo = kCanonicalCap + 1;
                int hi = -1;
                for (auto m = cell; m != 0; m &= m - 1) {
                    const int v = std::countr_zero(m);
                    const int c = std::popcount(static_cast<std::uint16_t>(rows_[v] & splitter));
                    bucket[c] |= static_cast<std::uint16_t>(1U << v);
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) continue;

                std::array<std::uint16_t, kCanonicalCap> fragments{};
                int nf = 0;
                for (int c = lo; c <= hi; ++c) {
                    if (bucket[c] != 0) fragments[nf++] = bucket[c];
                }
                for (int j = p.count - 1; j > i; --j) p.cells[j + nf - 1] = p.cells[j];
                for (int f = 0; f < nf; ++f) {
                    p.cells[i + f] = fragments[f];
                    q.push(fragments[f]);
                }
                p.count += nf - 1;
                i += nf - 1;
            }
        }
    }

    int search(const Partition& p, int depth) {
        if (p.count == n_) return leaf(p, depth);

        int target = -1;
        int target_size = kCanonicalCap + 1;
        for (int i = 0; i < p.count; ++i) {
            const int sz = std::popcount(p.cells[i]);
            if (sz > 1 && sz < target_size) {
                target = i;
                target_size = sz;
            }
        }

        const std::uint16_t cell = p.cells[target];
        std::uint16_t explored = 0;
        for (auto m = cell; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (explored != 0 && equivalent_to_explored(v, explored, depth)) continue;
            explored |= static_cast<std::uint16_t>(1U << v);

            Partition child = p;
            for (int j = child.count - 1; j > target; --j) child.cells[j + 1] = child.cells[j];
            child.cells[target] = static_cast<std::uint16_t>(1U << v);
            child.cells[target + 1] = static_cast<std::uint16_t>(cell & ~(1U << v));
            ++child.count;
            SplitterQueue q;
            q.push(child.cells[target]);
            refine(child, q);

            path_[depth] = static_cast<std::uint8_t>(v);
            const int jump = search(child, depth + 1);
            if (jump != kNoJump && jump < depth) return jump;
        }
        return kNoJump;
    }

    int leaf(const Partition& p, int depth) {
        Perm lab{};
        Perm pos{};
        for (int i = 0; i < n_; ++i) {
            lab[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
            pos[lab[i]] = static_cast<std::uint8_t>(i);
        }
        SmallRows cert{};
        for (int i = 0; i < n_; ++i) {
            std::uint16_t r = 0;
            for (auto m = rows_[lab[i]]; m != 0; m &= m - 1) {
                r |= static_cast<std::uint16_t>(1U << pos[std::countr_zero(m)]);
            }
            cert[i] = r;
        }

        if (!have_first_) {
            have_first_ = true;
            first_lab_ = best_lab_ = lab;
            first_cert_ = best_cert_ = cert;
            first_path_ = path_;
            return kNoJump;
        }
        if (cert == first_cert_) {
            record_automorphism(first_lab_, lab);
            int d = 0;
            while (d < depth && path_[d] == first_path_[d]) ++d;
            return d;
        }
        if (cert > best_cert_) {
            best_cert_ = cert;
            best_lab_ = lab;
        } else if (cert == best_cert_) {
            record_automorphism(best_lab_, lab);
        }
        return kNoJump;
    }

    void record_automorphism(const Perm& from, const Perm& to) {
        if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
        Perm gamma{};
        for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
        automorphisms_.push_back(gamma);
    }

    // Orbit test under the stored automorphisms that fix the current prefix.
    bool equivalent_to_explored(int v, std::uint16_t explored, int depth) const {
        std::array<std::uint8_t, kCanonicalCap> parent{};
        std::iota(parent.begin(), parent.end(), std::uint8_t{0});
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n_; ++x) {
                const int a = find(x);
                const int b = find(gamma[x]);
                if (a != b) parent[a] = static_cast<std::uint8_t>(b);
            }
        }
        if (!any) return false;
        const int root = find(v);
        for (auto m = explored; m != 0; m &= m - 1) {
            if (find(std::countr_zero(m)) == root) return true;
        }
        return false;
    }

    int n_;
    SmallRows rows_;
    bool have_first_ = false;
    Perm path_{};
    Perm first_path_{};
    Perm first_lab_{};
    Perm best_lab_{};
    SmallRows first_cert_{};
    SmallRows best_cert_{};
    std::vector<Perm> automorphisms_;
};

}  // namespace

std::size_t CanonicalForm::edge_count() const {
    std::size_t twice = 0;
    for (int i = 0; i < order; ++i) twice += static_cast<std::size_t>(std::popcount(rows[i]));
    return twice / 2;
}

Graph CanonicalForm::to_graph() const {
    GraphBuilder b(order);
    for (int i = 0; i < order; ++i) {
        for (auto m = rows[i]; m != 0; m &= m - 1) {
            const int j = std::countr_zero(m);
            if (j > i) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return std::move(b).build();
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ f.order;
    for (int i = 0; i < f.order; ++i) {
        h ^= f.rows[i];
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

SmallRows to_small_rows(const Graph& g) {
    if (g.order() > kCanonicalCap) {
        throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                    " exceeds canonicalization cap " + std::to_string(kCanonicalCap));
    }
    SmallRows rows{};
    for (Vertex v = 0; v < g.order(); ++v) {
        rows[v] = g.order() == 0 ? 0 : static_cast<std::uint16_t>(g.row(v)[0]);
    }
    return rows;
}

CanonicalLabeling canonical_labeling(std::size_t n, const SmallRows& rows) {
    if (n > kCanonicalCap) {
        throw std::invalid_argument("order exceeds canonicalization cap");
    }
    return Canonizer(n, rows).run();
}

CanonicalLabeling canonical_labeling(const Graph& g) {
    return canonical_labeling(g.order(), to_small_rows(g));
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Graph& g, const Graph& h) {
    const auto rg = to_small_rows(g);
    const auto rh = to_small_rows(h);
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_labeling(g.order(), rg).form == canonical_labeling(h.order(), rh).form;
}

}  // namespace turan
