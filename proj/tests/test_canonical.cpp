#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "support/brute.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"

using namespace turan;

namespace {

Graph cycle(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph path(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph petersen() {
    GraphBuilder b(10);
    for (std::size_t i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

}  // namespace

TEST_CASE("relabelled graphs share a canonical form") {
    const auto a = build_graph(3, {{0, 1}, {1, 2}});
    const auto b = build_graph(3, {{1, 0}, {0, 2}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(cycle(4)) != canonical_form(path(4)));
}

TEST_CASE("isomorphism examples") {
    std::mt19937_64 rng(1);
    const auto c5 = cycle(5);
    CHECK(are_isomorphic(c5, brute::relabel(c5, brute::random_permutation(rng, 5))));
    CHECK_FALSE(are_isomorphic(complete_bipartite(1, 3), path(4)));
    CHECK(are_isomorphic(turan_graph(4, 2), cycle(4)));
    CHECK(brute::isomorphic(turan_graph(4, 2), cycle(4)));
}

TEST_CASE("the 11 graphs on 4 vertices have 11 distinct forms") {
    std::set<CanonicalForm> forms;
    brute::for_each_labeled(4, [&](const Graph& g) { forms.insert(canonical_form(g)); });
    CHECK(forms.size() == 11);
    CHECK(brute::class_count(4, [](const Graph&) { return true; }) == 11);
}

TEST_CASE("canonical forms separate exactly the brute-force classes on 5 vertices") {
    std::map<std::uint64_t, CanonicalForm> by_code;
    std::set<CanonicalForm> forms;
    brute::for_each_labeled(5, [&](const Graph& g) {
        const auto form = canonical_form(g);
        const auto [it, fresh] = by_code.try_emplace(brute::min_code(g), form);
        CHECK(it->second == form);
        forms.insert(form);
    });
    CHECK(forms.size() == 34);
    CHECK(by_code.size() == 34);
}

TEST_CASE("form is invariant under random permutations") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 1 + rng() % 16;
        const auto g = brute::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
        const auto h = brute::relabel(g, brute::random_permutation(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("form of the canonical graph is itself") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        const auto g = brute::random_graph(rng, 1 + rng() % 12, 0.45);
        const auto form = canonical_form(g);
        CHECK(canonical_form(form.to_graph()) == form);
        CHECK(form.edge_count() == g.edge_count());
    }
}

TEST_CASE("labeling maps the graph onto its form") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 10;
        const auto g = brute::random_graph(rng, n, 0.5);
        const auto lab = canonical_labeling(g);
        const auto h = lab.form.to_graph();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) CHECK(h.adjacent(i, j) == g.adjacent(lab.vertex_at[i], lab.vertex_at[j]));
        }
    }
}

TEST_CASE("regular graphs with equal degree sequences") {
    // C6 vs two triangles; C8 vs C3 + C5; Petersen vs the 5-prism
    CHECK_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
    CHECK_FALSE(are_isomorphic(cycle(8), disjoint_union(cycle(3), cycle(5))));
    GraphBuilder prism(10);
    for (std::size_t i = 0; i < 5; ++i) {
        prism.add_edge(i, (i + 1) % 5);
        prism.add_edge(5 + i, 5 + (i + 1) % 5);
        prism.add_edge(i, i + 5);
    }
    const auto p = petersen();
    CHECK_FALSE(are_isomorphic(p, std::move(prism).build()));
    std::mt19937_64 rng(4);
    CHECK(are_isomorphic(p, brute::relabel(p, brute::random_permutation(rng, 10))));
    CHECK(are_isomorphic(complement(p), brute::relabel(complement(p), brute::random_permutation(rng, 10))));
}

TEST_CASE("highly symmetric graphs at the cap") {
    std::mt19937_64 rng(12);
    for (const auto& g : {Graph(16), turan_graph(16, 16), turan_graph(16, 4), complete_bipartite(8, 8), cycle(16)}) {
        CHECK(canonical_form(g) == canonical_form(brute::relabel(g, brute::random_permutation(rng, 16))));
    }
    CHECK_FALSE(are_isomorphic(cycle(16), disjoint_union(cycle(8), cycle(8))));
}

TEST_CASE("canonicalization cap") {
    CHECK_THROWS_AS(canonical_form(Graph(17)), std::invalid_argument);
    CHECK_THROWS_AS(are_isomorphic(Graph(17), Graph(17)), std::invalid_argument);
    CHECK(canonical_form(Graph(0)).order == 0);
}

TEST_CASE("non-isomorphic pairs agree with permutation search") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 7;
        const auto g = brute::random_graph(rng, n, 0.5);
        const auto h = brute::random_graph(rng, n, 0.5);
        CHECK(are_isomorphic(g, h) == brute::isomorphic(g, h));
    }
}
