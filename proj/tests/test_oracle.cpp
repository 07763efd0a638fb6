#include <doctest.h>

#include <set>
#include <stdexcept>

#include "support/brute.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/detectors.hpp"
#include "turan/formulas.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracle.hpp"

using namespace turan;

namespace {

ForbiddenFamily fam(const char* spec) { return ForbiddenFamily::parse(spec); }

// Values computed once by brute::ex over all labeled graphs and frozen here.
struct FrozenEx {
    std::size_t n;
    const char* family;
    std::size_t ex;
};

constexpr FrozenEx kFrozen[] = {
    {4, "clique:3", 4},
    {5, "clique:3", 6},
    {6, "clique:3", 9},
    {6, "clique:4", 12},
    {5, "matching:2", 4},
    {6, "matching:2", 5},
    {6, "matching:3", 10},
    {5, "clique:3,matching:2", 4},
    {6, "clique:3,matching:3", 8},
    {6, "starforest:1x2", 3},
    {6, "starforest:1x3", 6},
    {6, "starforest:2x2", 10},
    {6, "clique:3,starforest:2x2", 6},
    {6, "clique:4,starforest:2x2", 8},
    {6, "clique:3,starforest:2x3", 9},
};

}  // namespace

TEST_CASE("class counts of all graphs") {
    CHECK(enumerate_free_classes(4, fam("clique:5")).size() == 11);
    CHECK(enumerate_free_classes(5, fam("clique:6")).size() == 34);
    CHECK(enumerate_free_classes(6, fam("clique:7")).size() == 156);
    CHECK(enumerate_free_classes(7, fam("clique:8")).size() == 1044);
    CHECK(brute::class_count(5, [](const Graph&) { return true; }) == 34);
}

TEST_CASE("small enumeration examples") {
    CHECK(enumerate_free_graphs(3, fam("clique:3")).size() == 3);
    CHECK(enumerate_free_graphs(2, fam("clique:3")).size() == 2);
    for (const auto& g : enumerate_free_graphs(5, fam("matching:2"))) CHECK(max_matching_size(g) <= 1);
    CHECK(enumerate_free_graphs(0, fam("clique:2")).size() == 1);
    CHECK(enumerate_free_graphs(3, fam("clique:2")).size() == 1);
}

TEST_CASE("free class counts match brute-force dedup") {
    for (const char* spec : {"clique:3", "matching:2", "starforest:1x3", "starforest:2x2", "clique:3,matching:3",
                             "clique:4,starforest:2x2"}) {
        const auto f = fam(spec);
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto expected = brute::class_count(n, [&](const Graph& g) { return is_family_free(g, f); });
            CHECK_MESSAGE(enumerate_free_classes(n, f).size() == expected, spec << " n=" << n);
        }
    }
}

TEST_CASE("enumeration emits pairwise non-isomorphic free graphs") {
    const auto f = fam("clique:4,matching:4");
    const auto forms = enumerate_free_classes(8, f);
    CHECK(std::set<CanonicalForm>(forms.begin(), forms.end()).size() == forms.size());
    for (const auto& form : forms) {
        CHECK(canonical_form(form.to_graph()) == form);
        CHECK(is_family_free(form.to_graph(), f));
    }
}

TEST_CASE("frozen brute-force ex values") {
    for (const auto& row : kFrozen) {
        const auto f = fam(row.family);
        CHECK_MESSAGE(brute_force_ex(row.n, f).ex_value == row.ex, row.family << " n=" << row.n);
    }
}

TEST_CASE("frozen values are reproduced by the brute-force oracle") {
    for (const auto& row : kFrozen) {
        const auto f = fam(row.family);
        CHECK(brute::ex(row.n, [&](const Graph& g) { return is_family_free(g, f); }) == row.ex);
    }
}

TEST_CASE("brute_force_ex examples") {
    const auto a = brute_force_ex(5, fam("clique:3,matching:2"));
    CHECK(a.ex_value == 4);
    REQUIRE(a.extremal_graphs.size() == 1);
    CHECK(are_isomorphic(graph6_decode(a.extremal_graphs[0]), complete_bipartite(1, 4)));

    CHECK(brute_force_ex(6, fam("starforest:1x3")).ex_value == 6);
    CHECK(brute_force_ex(6, fam("starforest:1x3")).ex_value == ex_star(6, 2).value);

    const auto c = brute_force_ex(4, fam("clique:3"));
    CHECK(c.ex_value == 4);
    REQUIRE(c.extremal_graphs.size() == 1);
    CHECK(are_isomorphic(graph6_decode(c.extremal_graphs[0]), turan_graph(4, 2)));
}

TEST_CASE("enumerate_extremal examples") {
    const auto a = enumerate_extremal(5, fam("clique:3"));
    REQUIRE(a.size() == 1);
    CHECK(are_isomorphic(a[0], complete_bipartite(2, 3)));

    const auto b = enumerate_extremal(3, fam("matching:2"));
    REQUIRE(b.size() == 1);
    CHECK(b[0].edge_count() == 3);

    const auto c = enumerate_extremal(2, fam("clique:2"));
    REQUIRE(c.size() == 1);
    CHECK(c[0].edge_count() == 0);
}

TEST_CASE("extremal graphs are edge maximal") {
    for (const char* spec : {"clique:3,matching:3", "starforest:2x2", "clique:3,starforest:2x3", "clique:4,matching:3"}) {
        const auto f = fam(spec);
        for (std::size_t n = 4; n <= 8; ++n) {
            const auto rec = brute_force_ex(n, f);
            CHECK(std::is_sorted(rec.extremal_graphs.begin(), rec.extremal_graphs.end()));
            for (const auto& g6 : rec.extremal_graphs) {
                const auto g = graph6_decode(g6);
                CHECK(g.edge_count() == rec.ex_value);
                CHECK(is_family_free(g, f));
                for (std::size_t u = 0; u < n; ++u) {
                    for (std::size_t v = u + 1; v < n; ++v) {
                        if (g.adjacent(u, v)) continue;
                        GraphBuilder b(g);
                        b.add_edge(u, v);
                        CHECK_FALSE(is_family_free(std::move(b).build(), f));
                    }
                }
            }
        }
    }
}

TEST_CASE("parallel and serial kernels agree") {
    for (const char* spec : {"clique:3", "clique:4,matching:3", "starforest:2x3", "clique:3,starforest:3x2"}) {
        const auto f = fam(spec);
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto serial = enumerate_free_classes_serial(n, f);
            for (std::size_t jobs : {1, 2, 8}) CHECK(enumerate_free_classes(n, f, {.jobs = jobs}) == serial);
        }
    }
}

TEST_CASE("records are independent of the worker count") {
    const auto f = fam("clique:3,starforest:2x3");
    const auto one = brute_force_ex(9, f, {.jobs = 1});
    for (std::size_t jobs : {2, 4, 8}) CHECK(brute_force_ex(9, f, {.jobs = jobs}).same_result(one));
}

TEST_CASE("record JSON round trip") {
    const auto rec = brute_force_ex(6, fam("matching:2,clique:3"));
    const auto back = record_from_json(nlohmann::json::parse(to_json(rec).dump()));
    CHECK(back.same_result(rec));
    CHECK(back.elapsed_seconds == doctest::Approx(rec.elapsed_seconds));
    CHECK_THROWS(record_from_json(nlohmann::json{{"n", 3}}));
}

TEST_CASE("oracle cap") {
    CHECK_THROWS_AS(brute_force_ex(12, fam("clique:3")), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_free_classes_serial(12, fam("clique:3")), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_extremal(13, fam("clique:3")), std::invalid_argument);
}

TEST_CASE("family membership examples") {
    CHECK(family_membership(g1(10, 2, 3), G1Family{2, 3}));
    CHECK_FALSE(family_membership(g2(12, 3, 4), G1Family{3, 4}));
    CHECK(family_membership(complete_bipartite(2, 8), CompleteBipartiteFamily{2}));
    GraphBuilder b(complete_bipartite(2, 8));
    b.remove_edge(0, 2);
    CHECK_FALSE(family_membership(std::move(b).build(), CompleteBipartiteFamily{2}));
}

TEST_CASE("builders are members of their families under relabeling") {
    std::mt19937_64 rng(3);
    for (std::size_t s = 0; s <= 3; ++s) {
        for (std::size_t l = 2; l <= 4; ++l) {
            for (std::size_t n = s + (l - 1) * (l - 1) + 2; n <= 14; ++n) {
                const auto a = brute::relabel(g1(n, s, l), brute::random_permutation(rng, n));
                const auto b = brute::relabel(g2(n, s, l), brute::random_permutation(rng, n));
                CHECK_MESSAGE(family_membership(a, G1Family{s, l}), "g1 n=" << n << " s=" << s << " l=" << l);
                CHECK_MESSAGE(family_membership(b, G2Family{s, l}), "g2 n=" << n << " s=" << s << " l=" << l);
                if ((n - s) % 2 == 0) {
                    CHECK(family_membership(a, G2Family{s, l}));
                    CHECK(family_membership(b, G1Family{s, l}));
                }
            }
        }
    }
}

TEST_CASE("membership rejects graphs with the wrong structure") {
    // right edge count, wrong shape: a triangle breaks K3-freeness
    GraphBuilder b(g1(10, 2, 3));
    const auto edges = b.peek().edges();
    b.remove_edge(edges.back().first, edges.back().second);
    const auto missing = std::move(b).build();
    CHECK_FALSE(family_membership(missing, G1Family{2, 3}));
    CHECK_FALSE(family_membership(turan_graph(10, 3), G1Family{2, 3}));
    CHECK_FALSE(family_membership(complete_bipartite(3, 7), G2Family{2, 3}));
    CHECK_THROWS_AS(family_membership(Graph(17), G1Family{1, 2}), std::invalid_argument);
}
