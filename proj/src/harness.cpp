#include "turan/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "turan/constructions.hpp"
#include "turan/formulas.hpp"
#include "turan/graph_io.hpp"

namespace turan {

namespace {

using Int = std::int64_t;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::vector<Int> range_inclusive(Int lo, Int hi) {
    std::vector<Int> out;
    for (Int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

std::vector<Int> pick(const std::vector<Int>& given, std::vector<Int> fallback) {
    return given.empty() ? fallback : given;
}

void require_non_negative(const SuiteGrid& g) {
    for (const auto* axis : {&g.n, &g.k, &g.s, &g.l}) {
        for (Int v : *axis) {
            if (v < 0) throw std::invalid_argument("grid values must be non-negative");
        }
    }
}

void require_oracle_cap(const std::vector<Int>& ns, std::string_view suite) {
    for (Int n : ns) {
        if (n > static_cast<Int>(kOracleMaxOrder)) {
            throw std::invalid_argument(std::string(suite) + ": grid n=" + std::to_string(n) +
                                        " exceeds oracle cap " + std::to_string(kOracleMaxOrder));
        }
    }
}

std::string oracle_cap_reason(Int n) {
    return "n=" + std::to_string(n) + " exceeds oracle cap " + std::to_string(kOracleMaxOrder);
}

// Agreement is MATCH; disagreement is a MISMATCH only when the claim is proven.
void judge(ReportRow& row, bool agrees, Validity validity, const std::string& threshold) {
    if (agrees) {
        row.status = Status::Match;
    } else if (validity == Validity::Proven) {
        row.status = Status::Mismatch;
    } else {
        row.status = Status::Skipped;
        row.skip_reason = "formula " + std::string(to_string(validity)) + " (" + threshold + "); divergence reported";
    }
}

void skip(ReportRow& row, std::string reason) {
    row.status = Status::Skipped;
    row.skip_reason = std::move(reason);
}

ForbiddenFamily clique_star_forest(Int k, Int s, Int l) {
    return ForbiddenFamily({CliquePattern{static_cast<std::size_t>(k + 1)},
                            StarForestPattern{static_cast<std::size_t>(s + 1), static_cast<std::size_t>(l)}});
}

class OracleRunner {
public:
    OracleRunner(SuiteReport& report, ResultCache* cache, std::size_t jobs)
        : report_(report), cache_(cache), jobs_(jobs) {}

    ExtremalRecord get(Int n, const ForbiddenFamily& f) {
        const auto order = static_cast<std::size_t>(n);
        if (cache_ != nullptr) {
            if (auto hit = cache_->lookup(order, f)) {
                ++report_.cache_hits;
                report_.records.push_back(*hit);
                return *hit;
            }
        }
        auto rec = brute_force_ex(order, f, {.jobs = jobs_});
        ++report_.oracle_runs;
        if (cache_ != nullptr) cache_->append(rec);
        report_.records.push_back(rec);
        return rec;
    }

private:
    SuiteReport& report_;
    ResultCache* cache_;
    std::size_t jobs_;
};

ReportRow base_row(std::optional<Int> n, std::optional<Int> k, std::optional<Int> s, std::optional<Int> l,
                   std::string check) {
    ReportRow r;
    r.n = n;
    r.k = k;
    r.s = s;
    r.l = l;
    r.check = std::move(check);
    return r;
}

// ---------------------------------------------------------------------------
// Suites

void suite_lemma_regu(SuiteReport& rep, const SuiteGrid& grid) {
    for (Int l : pick(grid.l, range_inclusive(1, 6))) {
        for (Int n : pick(grid.n, range_inclusive(l * l + 2, 60))) {
            auto row = base_row(n, std::nullopt, std::nullopt, l, "audit");
            const auto formula = ex_star(n, l);
            row.formula = formula.value;
            if (l < 1 || n < l * l + 2) {
                skip(row, "construction needs l >= 1 and n >= l^2+2 = " + std::to_string(l * l + 2));
                rep.rows.push_back(std::move(row));
                continue;
            }
            const auto built = good_partition_regular(static_cast<std::size_t>(n), static_cast<std::size_t>(l));
            const Graph& g = built.graph;
            row.construction = static_cast<Int>(g.edge_count());
            row.free = !contains_clique(g, 3);

            std::size_t low = 0;
            bool degrees_ok = true;
            for (auto d : g.degree_sequence()) {
                if (d + 1 == static_cast<std::size_t>(l)) {
                    ++low;
                } else if (d != static_cast<std::size_t>(l)) {
                    degrees_ok = false;
                }
            }
            degrees_ok = degrees_ok && low == ((l * n) % 2 == 1 ? 1U : 0U);
            const bool cert_ok = certificate_holds(g, built.certificate);
            row.details["degree_multiset"] = degrees_ok ? "ok" : "bad";
            row.details["certificate"] = cert_ok ? "ok" : "bad";
            const bool ok = degrees_ok && cert_ok && *row.free && *row.construction == formula.value;
            row.status = ok ? Status::Match : Status::Mismatch;
            rep.rows.push_back(std::move(row));
        }
    }
}

void suite_lemma_star(SuiteReport& rep, const SuiteGrid& grid, OracleRunner& oracle) {
    for (Int l : pick(grid.l, {1, 2})) {
        const auto ns = pick(grid.n, range_inclusive(l * l + 2, 9));
        require_oracle_cap(ns, rep.suite);
        for (Int n : ns) {
            auto row = base_row(n, std::nullopt, std::nullopt, l, "oracle");
            if (l < 1) {
                skip(row, "needs l >= 1");
                rep.rows.push_back(std::move(row));
                continue;
            }
            const auto formula = ex_star(n, l);
            row.formula = formula.value;
            const ForbiddenFamily f({StarForestPattern{1, static_cast<std::size_t>(l + 1)}});
            row.oracle = static_cast<Int>(oracle.get(n, f).ex_value);
            bool construction_ok = true;
            if (n >= l * l + 2) {
                const auto g = good_partition_regular(static_cast<std::size_t>(n), static_cast<std::size_t>(l)).graph;
                row.construction = static_cast<Int>(g.edge_count());
                row.free = is_family_free(g, f);
                construction_ok = *row.free && *row.construction == formula.value;
            }
            judge(row, *row.oracle == formula.value && construction_ok, formula.validity,
                  "n >= l^2+2 = " + std::to_string(l * l + 2));
            rep.rows.push_back(std::move(row));
        }
    }
}

void suite_alon_frankl(SuiteReport& rep, const SuiteGrid& grid, OracleRunner& oracle) {
    for (Int k : pick(grid.k, {2, 3})) {
        for (Int s : pick(grid.s, {1, 2})) {
            const auto ns = pick(grid.n, range_inclusive(2 * s + 1, 8));
            require_oracle_cap(ns, rep.suite);
            for (Int n : ns) {
                auto row = base_row(n, k, s, std::nullopt, "oracle");
                if (k < 2 || n < s) {
                    skip(row, "needs k >= 2 and n >= s");
                    rep.rows.push_back(std::move(row));
                    continue;
                }
                const auto formula = ex_clique_matching(n, k, s);
                row.formula = formula.value;
                const ForbiddenFamily f(
                    {CliquePattern{static_cast<std::size_t>(k + 1)}, MatchingPattern{static_cast<std::size_t>(s + 1)}});
                row.oracle = static_cast<Int>(oracle.get(n, f).ex_value);

                const auto un = static_cast<std::size_t>(n);
                const auto us = static_cast<std::size_t>(s);
                std::vector<Graph> candidates{alon_frankl_extremal(un, static_cast<std::size_t>(k), us)};
                if (n >= 2 * s + 1) {
                    candidates.push_back(disjoint_union(turan_graph(2 * us + 1, static_cast<std::size_t>(k)),
                                                        Graph(un - 2 * us - 1)));
                }
                Int best = 0;
                bool all_free = true;
                for (const auto& g : candidates) {
                    best = std::max(best, static_cast<Int>(g.edge_count()));
                    all_free = all_free && is_family_free(g, f);
                }
                row.construction = best;
                row.free = all_free;
                judge(row, all_free && best == formula.value && *row.oracle == formula.value, formula.validity,
                      "n >= 2s+1 = " + std::to_string(2 * s + 1));
                rep.rows.push_back(std::move(row));
            }
        }
    }
}

Int main_valid_n(Int k, Int s, Int l) { return std::max(ex_main_threshold(k, s, l), s + (l - 1) * (l - 1) + 2); }

void suite_thm_main(SuiteReport& rep, const SuiteGrid& grid, OracleRunner& oracle) {
    for (Int k : pick(grid.k, {3, 4, 5})) {
        for (Int s : pick(grid.s, {0, 1, 2, 3})) {
            for (Int l : pick(grid.l, {2, 3, 4})) {
                const Int first = main_valid_n(k, s, l);
                for (Int n : pick(grid.n, range_inclusive(first, first + 10))) {
                    auto audit = base_row(n, k, s, l, "audit");
                    if (k < 3 || l < 2 || n < s + (l - 1) * (l - 1) + 2) {
                        skip(audit, "construction needs k >= 3, l >= 2, n-s >= (l-1)^2+2");
                        rep.rows.push_back(std::move(audit));
                        continue;
                    }
                    const auto formula = ex_main(n, k, s, l);
                    const auto threshold = "n >= k s^2+(s+1)(l+1)^2 = " + std::to_string(ex_main_threshold(k, s, l));
                    const Graph g = main_extremal(static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                                                  static_cast<std::size_t>(s), static_cast<std::size_t>(l));
                    const auto f = clique_star_forest(k, s, l);
                    audit.formula = formula.value;
                    audit.construction = static_cast<Int>(g.edge_count());
                    audit.free = is_family_free(g, f);
                    // freeness and the count are exact properties of the build
                    const bool exact = *audit.free && *audit.construction == formula.value;
                    audit.status = exact ? Status::Match : Status::Mismatch;
                    rep.rows.push_back(std::move(audit));

                    auto orow = base_row(n, k, s, l, "oracle");
                    orow.formula = formula.value;
                    if (n > static_cast<Int>(kOracleMaxOrder)) {
                        skip(orow, oracle_cap_reason(n));
                    } else {
                        orow.oracle = static_cast<Int>(oracle.get(n, f).ex_value);
                        judge(orow, *orow.oracle == formula.value, formula.validity, threshold);
                    }
                    rep.rows.push_back(std::move(orow));
                }
            }
        }
    }
}

// Audit of the k = 2 constructions against ex_k3 and the closed forms.
ReportRow thm_k3_audit(Int n, Int s, Int l) {
    auto row = base_row(n, 2, s, l, "audit");
    const auto formula = ex_k3(n, s, l);
    row.formula = formula.value;
    const auto f = clique_star_forest(2, s, l);
    const auto un = static_cast<std::size_t>(n);
    const auto us = static_cast<std::size_t>(s);
    const auto ul = static_cast<std::size_t>(l);
    const Int m = n - s;
    const std::string threshold = "exploratory bound n >= " + std::to_string(k3_exploratory_bound(s, l));

    if (l < s + 1) {
        const Graph g = complete_bipartite(us, un - us);
        row.construction = static_cast<Int>(g.edge_count());
        row.free = is_family_free(g, f);
        if (!*row.free) {
            row.status = Status::Mismatch;
        } else {
            judge(row, *row.construction == formula.value, formula.validity, threshold);
        }
        return row;
    }
    const auto [e1, e2] = extremal_family_edges(n, s, l);
    const bool g1_buildable = m >= (l - 1) * (l - 1) + 2;
    const bool g2_buildable = m >= 1 && (m + 1) / 2 >= l - 1;
    std::optional<Graph> a;
    std::optional<Graph> b;
    if (g1_buildable) a = g1(un, us, ul);
    if (g2_buildable) b = g2(un, us, ul);
    if (!a && !b) {
        skip(row, "no buildable member: g1 needs n-s >= (l-1)^2+2 = " + std::to_string((l - 1) * (l - 1) + 2));
        return row;
    }

    bool exact = true;
    Int best = 0;
    bool all_free = true;
    auto audit = [&](const std::optional<Graph>& g, Int closed_form, const std::string& name) {
        if (!g) {
            row.details[name] = std::to_string(closed_form) + " (closed form, not built)";
            row.note += (row.note.empty() ? "" : " ") + name + "=" + std::to_string(closed_form) + "(unbuilt)";
            return;
        }
        const auto built = static_cast<Int>(g->edge_count());
        const bool free = is_family_free(*g, f);
        row.details[name] = std::to_string(built);
        row.note += (row.note.empty() ? "" : " ") + name + "=" + std::to_string(built);
        best = std::max(best, built);
        all_free = all_free && free;
        exact = exact && free && built == closed_form;
    };
    audit(a, e1, "g1");
    audit(b, e2, "g2");
    row.construction = best;
    row.free = all_free;
    if (a && b && m % 2 == 0 && n <= 14) {
        const bool iso = are_isomorphic(*a, *b);
        row.details["g1_iso_g2"] = iso ? "true" : "false";
        if (!iso) row.note += " g1!~g2";
    }
    if (!exact) {
        row.status = Status::Mismatch;
    } else if (best != formula.value && !(a && b)) {
        skip(row, "g1 needs n-s >= (l-1)^2+2 = " + std::to_string((l - 1) * (l - 1) + 2) +
                      "; built member below formula");
    } else {
        judge(row, best == formula.value, formula.validity, threshold);
    }
    return row;
}

ReportRow thm_k3_oracle(Int n, Int s, Int l, OracleRunner& oracle) {
    auto row = base_row(n, 2, s, l, "oracle");
    const auto formula = ex_k3(n, s, l);
    row.formula = formula.value;
    const auto rec = oracle.get(n, clique_star_forest(2, s, l));
    row.oracle = static_cast<Int>(rec.ex_value);

    std::size_t members = 0;
    for (const auto& g6 : rec.extremal_graphs) {
        const Graph g = graph6_decode(g6);
        const auto us = static_cast<std::size_t>(s);
        const auto ul = static_cast<std::size_t>(l);
        const bool in = l < s + 1 ? family_membership(g, CompleteBipartiteFamily{us})
                                  : family_membership(g, G1Family{us, ul}) || family_membership(g, G2Family{us, ul});
        if (in) ++members;
    }
    row.details["extremal_classes"] = std::to_string(rec.extremal_graphs.size());
    row.details["in_predicted_family"] = std::to_string(members);
    row.note = "extremal in family " + std::to_string(members) + "/" + std::to_string(rec.extremal_graphs.size());
    judge(row, *row.oracle == formula.value, formula.validity,
          "exploratory bound n >= " + std::to_string(k3_exploratory_bound(s, l)));
    return row;
}

void suite_thm_k3(SuiteReport& rep, const SuiteGrid& grid, OracleRunner& oracle) {
    constexpr Int kOracleGridMax = 9;
    for (Int s : pick(grid.s, {0, 1, 2})) {
        for (Int l : pick(grid.l, {2, 3})) {
            for (Int n : pick(grid.n, range_inclusive(std::max<Int>(s, 1), 20))) {
                if (n < s || l < 1) {
                    auto row = base_row(n, 2, s, l, "audit");
                    skip(row, "needs n >= s and l >= 1");
                    rep.rows.push_back(std::move(row));
                    continue;
                }
                rep.rows.push_back(thm_k3_audit(n, s, l));
                const bool wanted = grid.n.empty() ? n <= kOracleGridMax : true;
                if (!wanted) continue;
                if (n > static_cast<Int>(kOracleMaxOrder)) {
                    auto row = base_row(n, 2, s, l, "oracle");
                    row.formula = ex_k3(n, s, l).value;
                    skip(row, oracle_cap_reason(n));
                    rep.rows.push_back(std::move(row));
                    continue;
                }
                rep.rows.push_back(thm_k3_oracle(n, s, l, oracle));
            }
        }
    }
}

void suite_boundary_sweep(SuiteReport& rep, const SuiteGrid& grid, OracleRunner& oracle) {
    for (Int k : pick(grid.k, {2})) {
        for (Int s : pick(grid.s, {1})) {
            for (Int l : pick(grid.l, {2})) {
                if (k < 2 || l < 1 || (k >= 3 && l < 2)) {
                    throw std::invalid_argument("boundary-sweep: needs k >= 2, l >= 1 (l >= 2 when k >= 3)");
                }
                const auto ns = pick(grid.n, range_inclusive(std::max<Int>(s, 1), static_cast<Int>(kOracleMaxOrder)));
                require_oracle_cap(ns, rep.suite);
                const std::size_t begin = rep.rows.size();
                for (Int n : ns) {
                    auto row = base_row(n, k, s, l, "oracle");
                    if (n < s) {
                        skip(row, "needs n >= s");
                        rep.rows.push_back(std::move(row));
                        continue;
                    }
                    const auto formula = k == 2 ? ex_k3(n, s, l) : ex_main(n, k, s, l);
                    const std::string threshold =
                        k == 2 ? "exploratory bound n >= " + std::to_string(k3_exploratory_bound(s, l))
                               : "n >= " + std::to_string(ex_main_threshold(k, s, l));
                    row.formula = formula.value;
                    row.oracle = static_cast<Int>(oracle.get(n, clique_star_forest(k, s, l)).ex_value);
                    judge(row, *row.oracle == formula.value, formula.validity, threshold);
                    rep.rows.push_back(std::move(row));
                }
                // first n from which oracle and formula agree up to the end of the sweep
                std::optional<std::size_t> first;
                for (std::size_t i = rep.rows.size(); i-- > begin;) {
                    if (rep.rows[i].status != Status::Match) break;
                    first = i;
                }
                if (first) {
                    rep.rows[*first].note = "first agreement";
                    rep.rows[*first].details["first_agreement"] = "true";
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Reports

auto sort_key(const ReportRow& r) { return std::tie(r.n, r.k, r.s, r.l, r.check); }

std::vector<ReportRow> sorted_rows(const SuiteReport& report) {
    auto rows = report.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return sort_key(a) < sort_key(b);
    });
    return rows;
}

std::string cell(const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); }
std::string cell(const std::optional<bool>& v) {
    if (!v) return {};
    return *v ? "true" : "false";
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::json optional_json(const std::optional<Int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

std::string emit_csv(const SuiteReport& report) {
    std::ostringstream os;
    os << "# turan-report schema=1 version=" << report.version << " suite=" << report.suite
       << " timestamp=" << report.timestamp << "\n";
    os << "n,k,s,l,formula,construction,oracle,free,status\n";
    for (const auto& r : sorted_rows(report)) {
        os << cell(r.n) << ',' << cell(r.k) << ',' << cell(r.s) << ',' << cell(r.l) << ',' << cell(r.formula) << ','
           << cell(r.construction) << ',' << cell(r.oracle) << ',' << cell(r.free) << ','
           << csv_field(status_label(r)) << '\n';
    }
    return os.str();
}

std::string emit_json(const SuiteReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : sorted_rows(report)) {
        rows.push_back({{"n", optional_json(r.n)},
                        {"k", optional_json(r.k)},
                        {"s", optional_json(r.s)},
                        {"l", optional_json(r.l)},
                        {"check", r.check},
                        {"formula", optional_json(r.formula)},
                        {"construction", optional_json(r.construction)},
                        {"oracle", optional_json(r.oracle)},
                        {"free", r.free ? nlohmann::json(*r.free) : nlohmann::json()},
                        {"status", status_label(r)},
                        {"note", r.note},
                        {"details", r.details}});
    }
    const nlohmann::json doc = {{"suite", report.suite},
                                {"version", report.version},
                                {"timestamp", report.timestamp},
                                {"oracle_runs", report.oracle_runs},
                                {"cache_hits", report.cache_hits},
                                {"rows", rows}};
    return doc.dump(2) + "\n";
}

std::string emit_table(const SuiteReport& report) {
    std::vector<std::vector<std::string>> lines{
        {"n", "k", "s", "l", "check", "formula", "construction", "oracle", "free", "status", "note"}};
    for (const auto& r : sorted_rows(report)) {
        lines.push_back({cell(r.n), cell(r.k), cell(r.s), cell(r.l), r.check, cell(r.formula), cell(r.construction),
                         cell(r.oracle), cell(r.free), status_label(r), r.note});
    }
    std::vector<std::size_t> width(lines.front().size(), 0);
    for (const auto& line : lines) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    std::ostringstream os;
    os << "suite " << report.suite << " (version " << report.version << ", " << report.timestamp << ")\n";
    for (const auto& line : lines) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
            text += line[i];
            if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << '\n';
    }
    os << "oracle runs " << report.oracle_runs << ", cache hits " << report.cache_hits << '\n';
    return os.str();
}

}  // namespace

std::string status_label(const ReportRow& row) {
    switch (row.status) {
        case Status::Match: return "MATCH";
        case Status::Mismatch: return "MISMATCH";
        case Status::Skipped: return "SKIPPED(" + row.skip_reason + ")";
    }
    return "MISMATCH";
}

bool SuiteReport::any_mismatch() const {
    return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.status == Status::Mismatch; });
}

// ---------------------------------------------------------------------------
// ResultCache

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        try {
            auto rec = record_from_json(nlohmann::json::parse(line));
            records_.insert_or_assign(key(rec.n, rec.family), std::move(rec));
        } catch (const std::exception& e) {
            warnings_.push_back(path_.string() + ":" + std::to_string(number) + ": skipped corrupt line (" +
                                e.what() + ")");
        }
    }
}

std::string ResultCache::key(std::size_t n, const ForbiddenFamily& f) {
    return std::to_string(n) + "|" + f.to_string();
}

std::optional<ExtremalRecord> ResultCache::lookup(std::size_t n, const ForbiddenFamily& f) const {
    const std::scoped_lock lock(mutex_);
    const auto it = records_.find(key(n, f));
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::append(const ExtremalRecord& record) {
    const std::scoped_lock lock(mutex_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cache: cannot write " + path_.string());
    out << to_json(record).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cache: write failed for " + path_.string());
    records_.insert_or_assign(key(record.n, record.family), record);
}

std::size_t ResultCache::size() const {
    const std::scoped_lock lock(mutex_);
    return records_.size();
}

// ---------------------------------------------------------------------------
// Dispatch

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma-regu", "lemma-star",     "alon-frankl",
                                                "thm-main",   "thm-k3",         "boundary-sweep"};
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteGrid& grid, ResultCache* cache) {
    require_non_negative(grid);
    SuiteReport rep;
    rep.suite = std::string(name);
    rep.timestamp = utc_timestamp();
    OracleRunner oracle(rep, cache, std::max<std::size_t>(1, grid.jobs));

    if (name == "lemma-regu") {
        suite_lemma_regu(rep, grid);
    } else if (name == "lemma-star") {
        suite_lemma_star(rep, grid, oracle);
    } else if (name == "alon-frankl") {
        suite_alon_frankl(rep, grid, oracle);
    } else if (name == "thm-main") {
        suite_thm_main(rep, grid, oracle);
    } else if (name == "thm-k3") {
        suite_thm_k3(rep, grid, oracle);
    } else if (name == "boundary-sweep") {
        suite_boundary_sweep(rep, grid, oracle);
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    }
    return rep;
}

std::optional<ReportFormat> parse_report_format(std::string_view s) {
    if (s == "csv") return ReportFormat::Csv;
    if (s == "json") return ReportFormat::Json;
    if (s == "table") return ReportFormat::Table;
    return std::nullopt;
}

std::string emit_report(const SuiteReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Csv: return emit_csv(report);
        case ReportFormat::Json: return emit_json(report);
        case ReportFormat::Table: return emit_table(report);
    }
    return emit_csv(report);
}

}  // namespace turan
