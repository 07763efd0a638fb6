#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace turan {

enum class Validity {
    Proven,     // parameters satisfy the proven hypothesis
    Heuristic,  // "n large enough" with no explicit threshold
    OutOfRange  // stated hypothesis violated; raw arithmetic still reported
};

std::string_view to_string(Validity v);

struct FormulaResult {
    std::int64_t value = 0;
    Validity validity = Validity::OutOfRange;
    std::string source;

    friend bool operator==(const FormulaResult&, const FormulaResult&) = default;
};

/// Edge count of the balanced complete k-partite graph on n vertices.
std::int64_t turan_edges(std::int64_t n, std::int64_t k);

/// ex(n, S_{l+1}) = floor(l n / 2); proven for n >= l^2 + 2.
FormulaResult ex_star(std::int64_t n, std::int64_t l);

/// ex(n, {K_{k+1}, M_{s+1}}) = max{e(T_k(2s+1)), e(T_{k-1}(s)) + s(n-s)}; proven for n >= 2s+1.
FormulaResult ex_clique_matching(std::int64_t n, std::int64_t k, std::int64_t s);

/// ex(n, {K_{k+1}, (s+1)S_l}) for k >= 3, l >= 2; proven for n >= k s^2 + (s+1)(l+1)^2.
FormulaResult ex_main(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t l);
std::int64_t ex_main_threshold(std::int64_t k, std::int64_t s, std::int64_t l);

/// ex(n, {K_3, (s+1)S_l}) by the three k = 2 cases.
FormulaResult ex_k3(std::int64_t n, std::int64_t s, std::int64_t l);

/// Reporting-only bound n >= 4(s+l)^2 + s used to flag k = 2 rows; not a proven bound.
std::int64_t k3_exploratory_bound(std::int64_t s, std::int64_t l);

/// (e(G1(s)), e(G2(s))) on n vertices.
std::pair<std::int64_t, std::int64_t> extremal_family_edges(std::int64_t n, std::int64_t s, std::int64_t l);

}  // namespace turan
