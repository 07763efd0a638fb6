#include "turan/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace turan {

namespace {

std::int64_t floor_half(std::int64_t x) { return x / 2; }
std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

void require_n_at_least_s(std::int64_t n, std::int64_t s) {
    if (s < 0 || n < s) throw std::invalid_argument("formula needs 0 <= s <= n");
}

// s(n-s) edges of K_{s,n-s}: also the whole formula of the l < s+1 case.
std::int64_t star_join_edges(std::int64_t n, std::int64_t s) { return s * (n - s); }

}  // namespace

std::string_view to_string(Validity v) {
    switch (v) {
        case Validity::Proven: return "Proven";
        case Validity::Heuristic: return "Heuristic";
        case Validity::OutOfRange: return "OutOfRange";
    }
    return "OutOfRange";
}

std::int64_t turan_edges(std::int64_t n, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("turan_edges: k must be >= 1");
    if (n < 0) throw std::invalid_argument("turan_edges: n must be >= 0");
    const std::int64_t q = n / k;
    const std::int64_t r = n % k;
    // r parts of size q+1, k-r parts of size q
    const std::int64_t inside = r * (q + 1) * q / 2 + (k - r) * q * (q - 1) / 2;
    return n * (n - 1) / 2 - inside;
}

FormulaResult ex_star(std::int64_t n, std::int64_t l) {
    if (l < 0 || n < 0) throw std::invalid_argument("ex_star: n, l must be >= 0");
    return {floor_half(l * n), n >= l * l + 2 ? Validity::Proven : Validity::OutOfRange, "ex_star"};
}

FormulaResult ex_clique_matching(std::int64_t n, std::int64_t k, std::int64_t s) {
    if (k < 2) throw std::invalid_argument("ex_clique_matching: k must be >= 2");
    require_n_at_least_s(n, s);
    const std::int64_t value =
        std::max(turan_edges(2 * s + 1, k), turan_edges(s, k - 1) + star_join_edges(n, s));
    return {value, n >= 2 * s + 1 ? Validity::Proven : Validity::OutOfRange, "ex_clique_matching"};
}

std::int64_t ex_main_threshold(std::int64_t k, std::int64_t s, std::int64_t l) {
    return k * s * s + (s + 1) * (l + 1) * (l + 1);
}

FormulaResult ex_main(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t l) {
    if (k < 3 || l < 2) throw std::invalid_argument("ex_main: need k >= 3 and l >= 2");
    require_n_at_least_s(n, s);
    const std::int64_t value = turan_edges(s, k - 2) + star_join_edges(n, s) + floor_half((l - 1) * (n - s));
    return {value, n >= ex_main_threshold(k, s, l) ? Validity::Proven : Validity::OutOfRange, "ex_main"};
}

std::int64_t k3_exploratory_bound(std::int64_t s, std::int64_t l) { return 4 * (s + l) * (s + l) + s; }

std::pair<std::int64_t, std::int64_t> extremal_family_edges(std::int64_t n, std::int64_t s, std::int64_t l) {
    if (l < 1) throw std::invalid_argument("extremal_family_edges: l must be >= 1");
    require_n_at_least_s(n, s);
    const std::int64_t m = n - s;
    const std::int64_t t2 = ceil_half(s) * floor_half(s);
    const std::int64_t first = t2 + s * floor_half(m) + floor_half((l - 1) * m);
    const std::int64_t second =
        t2 + (l - 1) * floor_half(m) + floor_half(s) * floor_half(m) + ceil_half(s) * ceil_half(m);
    return {first, second};
}

FormulaResult ex_k3(std::int64_t n, std::int64_t s, std::int64_t l) {
    if (l < 1) throw std::invalid_argument("ex_k3: l must be >= 1");
    require_n_at_least_s(n, s);
    const std::int64_t m = n - s;

    FormulaResult out;
    if (l < s + 1) {
        out = {star_join_edges(n, s), Validity::Heuristic, "ex_k3:complete_bipartite"};
    } else if (m % 2 == 0) {
        out = {extremal_family_edges(n, s, l).first, Validity::Heuristic, "ex_k3:even"};
    } else {
        const std::int64_t t2 = ceil_half(s) * floor_half(s);
        const std::int64_t first = t2 + s * floor_half(m) + floor_half((l - 1) * m);
        const std::int64_t second = t2 + s * floor_half(m) + (l - 1) * floor_half(m) + ceil_half(s);
        out = {std::max(first, second), Validity::Heuristic, "ex_k3:odd"};
    }
    if (s == 0) out.validity = n >= (l - 1) * (l - 1) + 2 ? Validity::Proven : Validity::OutOfRange;
    return out;
}

}  // namespace turan
