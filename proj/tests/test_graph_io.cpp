#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support/brute.hpp"
#include "turan/constructions.hpp"
#include "turan/graph_io.hpp"

using namespace turan;

TEST_CASE("graph6 reference strings") {
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_encode(turan_graph(3, 3)) == "Bw");
    CHECK(graph6_encode(build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == "Dhc");
    // example graph of the format description
    CHECK(graph6_encode(build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
    CHECK(graph6_decode("Bw") == turan_graph(3, 3));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const auto g = brute::random_graph(rng, rng() % 21, 0.3);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 long header above 62 vertices") {
    std::mt19937_64 rng(3);
    const auto g = brute::random_graph(rng, 100, 0.05);
    const auto text = graph6_encode(g);
    CHECK(text.substr(0, 4) == "~?@c");
    CHECK(graph6_decode(text) == g);
    CHECK(graph6_decode(graph6_encode(Graph(63))) == Graph(63));
}

TEST_CASE("graph6 decode tolerates newline and header prefix") {
    CHECK(graph6_decode("Bw\n") == turan_graph(3, 3));
    CHECK(graph6_decode(">>graph6<<Bw") == turan_graph(3, 3));
}

TEST_CASE("graph6 decode rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("Bww"), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("Bx"), std::invalid_argument);  // nonzero padding
    CHECK_THROWS_AS(graph6_decode("B "), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("~~??????"), std::invalid_argument);
}

TEST_CASE("JSON edge list round trip") {
    const auto g = complete_bipartite(2, 3);
    const auto j = to_edge_list_json(g);
    CHECK(j.at("n") == 5);
    CHECK(j.at("edges").size() == 6);
    CHECK(j.at("edges")[0] == nlohmann::json::array({0, 2}));
    CHECK(from_edge_list_json(j) == g);
    CHECK_THROWS(from_edge_list_json(nlohmann::json{{"n", 2}, {"edges", {{0, 2}}}}));
}
