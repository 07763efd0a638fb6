#include "turan/graph_io.hpp"

#include <stdexcept>

namespace turan {

namespace {

constexpr std::size_t kGraph6LongMax = 258047;

void append_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
        return;
    }
    if (n > kGraph6LongMax) throw std::invalid_argument("graph6: order too large");
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
}

int sixbits(char c) {
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: character outside 63..126");
    return v;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_order(out, n);

    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph graph6_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t n = 0;
    std::size_t pos = 0;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
            throw std::invalid_argument("graph6: eight-byte header not supported");
        }
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated header");
        n = (static_cast<std::size_t>(sixbits(text[1])) << 12) |
            (static_cast<std::size_t>(sixbits(text[2])) << 6) | static_cast<std::size_t>(sixbits(text[3]));
        if (n <= 62) throw std::invalid_argument("graph6: non-minimal long header");
        pos = 4;
    } else {
        n = static_cast<std::size_t>(sixbits(text[0]));
        if (n == 63) throw std::invalid_argument("graph6: malformed header");
        pos = 1;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw std::invalid_argument("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                                    std::to_string(text.size() - pos));
    }

    GraphBuilder b(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = sixbits(text[pos + k / 6]);
            if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = sixbits(text.back());
        const int pad = static_cast<int>(6 - bits % 6);
        if ((last & ((1 << pad) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

nlohmann::json to_edge_list_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph from_edge_list_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw std::invalid_argument("edge list JSON needs \"n\" and \"edges\"");
    }
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0) throw std::invalid_argument("edge list JSON: negative n");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge list JSON: edge must be [u, v]");
        const auto u = e[0].get<std::int64_t>();
        const auto v = e[1].get<std::int64_t>();
        if (u < 0 || v < 0) throw std::out_of_range("edge list JSON: negative endpoint");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return build_graph(static_cast<std::size_t>(n), edges);
}

}  // namespace turan
