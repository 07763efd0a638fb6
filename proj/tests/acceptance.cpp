#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/brute.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/detectors.hpp"
#include "turan/formulas.hpp"
#include "turan/harness.hpp"
#include "turan/oracle.hpp"

using namespace turan;

namespace {

using Int = std::int64_t;

// Collects the first few failures of one criterion.
class Failures {
public:
    template <typename... Args>
    void add(const Args&... parts) {
        ++count_;
        if (messages_.size() >= 3) return;
        std::ostringstream os;
        (os << ... << parts);
        messages_.push_back(os.str());
    }
    bool empty() const { return count_ == 0; }
    std::string summary() const {
        std::string out = std::to_string(count_) + " failure(s)";
        for (const auto& m : messages_) out += "; " + m;
        return out;
    }

private:
    std::size_t count_ = 0;
    std::vector<std::string> messages_;
};

struct Criterion {
    int id;
    const char* name;
    std::function<void(Failures&, std::string&)> run;
};

ForbiddenFamily clique_stars(std::size_t k, std::size_t s, std::size_t l) {
    return ForbiddenFamily({CliquePattern{k + 1}, StarForestPattern{s + 1, l}});
}

void star_reproduction(Failures& fail, std::string& info) {
    std::size_t checked = 0;
    for (std::size_t l : {1, 2}) {
        const std::size_t lo = l == 1 ? 3 : 6;
        const ForbiddenFamily f({StarForestPattern{1, l + 1}});
        for (std::size_t n = lo; n <= 9; ++n) {
            const auto got = brute_force_ex(n, f).ex_value;
            if (got != l * n / 2) fail.add("l=", l, " n=", n, " ex=", got, " want ", l * n / 2);
            ++checked;
        }
    }
    info = std::to_string(checked) + " values";
}

void clique_matching_reproduction(Failures& fail, std::string& info) {
    std::size_t checked = 0;
    for (auto [k, s] : {std::pair<Int, Int>{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const ForbiddenFamily f({CliquePattern{static_cast<std::size_t>(k + 1)},
                                 MatchingPattern{static_cast<std::size_t>(s + 1)}});
        for (Int n = 2 * s + 1; n <= 8; ++n) {
            const Int want = std::max(turan_edges(2 * s + 1, k), turan_edges(s, k - 1) + s * (n - s));
            const auto got = static_cast<Int>(brute_force_ex(static_cast<std::size_t>(n), f).ex_value);
            if (got != want) fail.add("k=", k, " s=", s, " n=", n, " ex=", got, " want ", want);
            ++checked;
        }
    }
    info = std::to_string(checked) + " values";
}

void uniqueness(Failures& fail, std::string& info) {
    const auto ext = enumerate_extremal(5, ForbiddenFamily::parse("clique:3,matching:2"));
    if (ext.size() != 1) fail.add(ext.size(), " classes");
    else if (!are_isomorphic(ext[0], complete_bipartite(1, 4))) fail.add("class is not K_{1,4}");
    info = std::to_string(ext.size()) + " class";
}

void main_construction_audit(Failures& fail, std::string& info) {
    std::size_t checked = 0;
    for (std::size_t k = 3; k <= 5; ++k) {
        for (std::size_t s = 0; s <= 3; ++s) {
            for (std::size_t l = 2; l <= 4; ++l) {
                const std::size_t lo = s + (l - 1) * (l - 1) + 2;
                const auto f = clique_stars(k, s, l);
                for (std::size_t n = lo; n <= lo + 10; ++n) {
                    const auto g = main_extremal(n, k, s, l);
                    const Int want = ex_main(static_cast<Int>(n), static_cast<Int>(k), static_cast<Int>(s),
                                             static_cast<Int>(l)).value;
                    if (contains_clique(g, k + 1)) fail.add("K", k + 1, " in n=", n, " k=", k, " s=", s, " l=", l);
                    if (contains_star_forest(g, s + 1, l)) fail.add("star forest in n=", n, " k=", k, " s=", s, " l=", l);
                    if (static_cast<Int>(g.edge_count()) != want) {
                        fail.add("edges ", g.edge_count(), " want ", want, " at n=", n, " k=", k, " s=", s, " l=", l);
                    }
                    ++checked;
                }
            }
        }
    }
    info = std::to_string(checked) + " tuples";
}

void regular_construction_audit(Failures& fail, std::string& info) {
    std::size_t checked = 0;
    for (std::size_t l = 1; l <= 6; ++l) {
        for (std::size_t n = l * l + 2; n <= 60; ++n) {
            const auto r = good_partition_regular(n, l);
            auto d = r.graph.degree_sequence();
            std::sort(d.begin(), d.end());
            std::vector<std::size_t> want(n, l);
            if ((l * n) % 2 == 1) want[0] = l - 1;
            if (d != want) fail.add("degrees at n=", n, " l=", l);
            if (contains_clique(r.graph, 3)) fail.add("triangle at n=", n, " l=", l);
            if (!certificate_holds(r.graph, r.certificate)) fail.add("certificate at n=", n, " l=", l);
            ++checked;
        }
    }
    info = std::to_string(checked) + " graphs";
}

void closed_form_audit(Failures& fail, std::string& info) {
    std::size_t built = 0;
    std::size_t iso = 0;
    for (std::size_t s = 0; s <= 4; ++s) {
        for (std::size_t l = 2; l <= 5; ++l) {
            for (std::size_t n = s + 1; n <= 40; ++n) {
                const std::size_t m = n - s;
                const auto [e1, e2] = extremal_family_edges(static_cast<Int>(n), static_cast<Int>(s), static_cast<Int>(l));
                std::optional<Graph> a;
                std::optional<Graph> b;
                if (m >= (l - 1) * (l - 1) + 2) a = g1(n, s, l);
                if ((m + 1) / 2 >= l - 1) b = g2(n, s, l);
                if (a) {
                    ++built;
                    if (static_cast<Int>(a->edge_count()) != e1) fail.add("g1 n=", n, " s=", s, " l=", l);
                }
                if (b) {
                    ++built;
                    if (static_cast<Int>(b->edge_count()) != e2) fail.add("g2 n=", n, " s=", s, " l=", l);
                }
                if (a && b && m % 2 == 0 && n <= 14) {
                    ++iso;
                    if (!are_isomorphic(*a, *b)) fail.add("g1 !~ g2 at n=", n, " s=", s, " l=", l);
                }
            }
        }
    }
    info = std::to_string(built) + " builds, " + std::to_string(iso) + " isomorphism checks";
}

void k3_consistency(Failures& fail, std::string& info) {
    std::size_t checked = 0;
    for (Int s = 1; s <= 3; ++s) {
        for (Int n = 4 * (s + 1); n <= 40; ++n) {
            const auto a = ex_k3(n, s, 1).value;
            const auto b = ex_clique_matching(n, 2, s).value;
            if (a != b || a != s * (n - s)) fail.add("s=", s, " n=", n, ": ", a, " vs ", b);
            ++checked;
        }
    }
    info = std::to_string(checked) + " values";
}

void detector_equivalence(Failures& fail, std::string& info) {
    std::mt19937_64 rng(2024);
    auto sample = [&] {
        const std::size_t n = 1 + rng() % 8;
        return brute::random_graph(rng, n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
    };
    for (int t = 0; t < 500; ++t) {
        const auto g = sample();
        const std::size_t r = 2 + rng() % 4;
        if (contains_clique(g, r) != brute::has_clique(g, r)) fail.add("clique r=", r);
        if (clique_number(g) == 0 && g.order() > 0) fail.add("clique number");
    }
    for (int t = 0; t < 500; ++t) {
        const auto g = sample();
        if (max_matching_size(g) != brute::matching_number(g)) fail.add("matching on n=", g.order());
    }
    for (int t = 0; t < 500; ++t) {
        const auto g = sample();
        const std::size_t copies = 1 + rng() % 3;
        const std::size_t leaves = 1 + rng() % 3;
        if (contains_star_forest(g, copies, leaves) != brute::has_star_forest(g, copies, leaves)) {
            fail.add("star forest ", copies, "x", leaves, " on n=", g.order());
        }
    }
    info = "1500 graphs";
}

// Drops the first line, which carries the timestamp.
std::string without_header(const std::string& csv) { return csv.substr(csv.find('\n') + 1); }

void determinism(Failures& fail, std::string& info) {
    std::size_t records = 0;
    for (const char* suite : {"lemma-star", "alon-frankl", "thm-k3", "boundary-sweep"}) {
        SuiteGrid grid;
        grid.jobs = 1;
        const auto base = run_suite(suite, grid);
        for (std::size_t jobs : {2, 8}) {
            grid.jobs = jobs;
            const auto other = run_suite(suite, grid);
            if (other.records.size() != base.records.size()) {
                fail.add(suite, ": record count differs at jobs=", jobs);
                continue;
            }
            for (std::size_t i = 0; i < base.records.size(); ++i) {
                if (!other.records[i].same_result(base.records[i])) fail.add(suite, ": record ", i, " jobs=", jobs);
            }
            if (without_header(emit_report(other, ReportFormat::Csv)) != without_header(emit_report(base, ReportFormat::Csv))) {
                fail.add(suite, ": report differs at jobs=", jobs);
            }
        }
        records += base.records.size();
    }
    info = std::to_string(records) + " records x 3 worker counts";
}

void symmetrization(Failures& fail, std::string& info) {
    std::mt19937_64 rng(99);
    std::size_t done = 0;
    while (done < 1000) {
        const std::size_t n = 2 + rng() % 11;
        const auto g = brute::random_triangle_free(rng, n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                if (u != v && !g.adjacent(u, v)) pairs.emplace_back(u, v);
            }
        }
        if (pairs.empty()) continue;
        const auto [u, v] = pairs[rng() % pairs.size()];
        const auto h = symmetrize(g, u, v);
        if (brute::has_clique(h, 3)) fail.add("triangle after symmetrize on n=", n);
        const auto want = static_cast<Int>(g.edge_count()) - static_cast<Int>(g.degree(u)) + static_cast<Int>(g.degree(v));
        if (static_cast<Int>(h.edge_count()) != want) fail.add("edge count on n=", n);
        ++done;
    }
    info = std::to_string(done) + " graphs";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "star Turan numbers", star_reproduction},
        {2, "clique plus matching Turan numbers", clique_matching_reproduction},
        {3, "unique extremal class for {K3, M2} at n=5", uniqueness},
        {4, "main construction audit", main_construction_audit},
        {5, "regular construction audit", regular_construction_audit},
        {6, "g1/g2 closed-form audit", closed_form_audit},
        {7, "triangle case at l=1 matches clique-matching bound", k3_consistency},
        {8, "detectors agree with exhaustive search", detector_equivalence},
        {9, "oracle records independent of worker count", determinism},
        {10, "symmetrization preserves triangle-freeness", symmetrization},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Failures fail;
        std::string info;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(fail, info);
        } catch (const std::exception& e) {
            fail.add("exception: ", e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = fail.empty();
        failed += ok ? 0 : 1;
        std::printf("%s criterion %2d: %s (%s, %.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, info.c_str(), secs,
                    ok ? "" : " -- ", ok ? "" : fail.summary().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
