#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "turan/constructions.hpp"
#include "turan/detectors.hpp"
#include "turan/formulas.hpp"
#include "turan/graph_io.hpp"
#include "turan/harness.hpp"
#include "turan/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string n, k, s, l;
    std::string family;
    std::string format;
    std::size_t jobs = 1;
    std::string cache;
    std::string out;
    std::string graph;
    std::string name;
};

// Accepts "7", "3,5,8" and "3..9" (inclusive), or any comma mix of them.
std::vector<std::int64_t> parse_values(const std::string& text, const char* flag) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    auto number = [&](const std::string& t) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != t.size() || v < 0) {
            throw UsageError(std::string("--") + flag + ": bad value '" + t + "'");
        }
        return v;
    };
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(number(item));
            continue;
        }
        const auto lo = number(item.substr(0, dots));
        const auto hi = number(item.substr(dots + 2));
        if (hi < lo) throw UsageError(std::string("--") + flag + ": empty range '" + item + "'");
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

std::int64_t single(const std::string& text, const char* flag) {
    const auto values = parse_values(text, flag);
    if (values.size() != 1) throw UsageError(std::string("--") + flag + " needs exactly one value");
    return values.front();
}

std::size_t usingle(const std::string& text, const char* flag) { return static_cast<std::size_t>(single(text, flag)); }

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

turan::ForbiddenFamily family_of(const Options& o) {
    if (o.family.empty()) throw UsageError("--family is required");
    try {
        return turan::ForbiddenFamily::parse(o.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--family: ") + e.what());
    }
}

std::string graph_output(const turan::Graph& g, const std::string& format) {
    if (format.empty() || format == "graph6") return turan::graph6_encode(g) + "\n";
    if (format == "json") return turan::to_edge_list_json(g).dump() + "\n";
    if (format == "table") {
        std::ostringstream os;
        os << "n " << g.order() << "\nedges " << g.edge_count() << "\ndegrees";
        for (auto d : g.degree_sequence()) os << ' ' << d;
        os << "\ngraph6 " << turan::graph6_encode(g) << "\n";
        return os.str();
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "u,v\n";
        for (auto [u, v] : g.edges()) os << u << ',' << v << '\n';
        return os.str();
    }
    throw UsageError("unknown --format '" + format + "'");
}

int run_construct(const Options& o) {
    using namespace turan;
    const std::string& what = o.name;
    Graph g(0);
    if (what == "turan") {
        g = turan_graph(usingle(o.n, "n"), usingle(o.k, "k"));
    } else if (what == "complete-bipartite") {
        const auto n = usingle(o.n, "n");
        const auto s = usingle(o.s, "s");
        if (s > n) throw UsageError("complete-bipartite needs s <= n");
        g = complete_bipartite(s, n - s);
    } else if (what == "regular") {
        g = good_partition_regular(usingle(o.n, "n"), usingle(o.l, "l")).graph;
    } else if (what == "r1") {
        g = r1_bipartite(usingle(o.n, "n"), usingle(o.l, "l")).graph;
    } else if (what == "g1") {
        g = g1(usingle(o.n, "n"), usingle(o.s, "s"), usingle(o.l, "l"));
    } else if (what == "g2") {
        g = g2(usingle(o.n, "n"), usingle(o.s, "s"), usingle(o.l, "l"));
    } else if (what == "alon-frankl") {
        g = alon_frankl_extremal(usingle(o.n, "n"), usingle(o.k, "k"), usingle(o.s, "s"));
    } else if (what == "main") {
        g = main_extremal(usingle(o.n, "n"), usingle(o.k, "k"), usingle(o.s, "s"), usingle(o.l, "l"));
    } else {
        throw UsageError("unknown construction '" + what + "'");
    }
    write_output(o, graph_output(g, o.format));
    return kExitOk;
}

std::vector<std::string> graph_inputs(const Options& o) {
    std::vector<std::string> out;
    if (!o.graph.empty()) {
        out.push_back(o.graph);
        return out;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty()) out.push_back(line);
    }
    if (out.empty()) throw UsageError("detect: no graph given (--graph or graph6 lines on stdin)");
    return out;
}

int run_detect(const Options& o) {
    using namespace turan;
    const auto f = family_of(o);
    const std::string format = o.format.empty() ? "table" : o.format;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    if (format == "csv") text << "graph6,n,edges,pattern,contains\n";
    for (const auto& g6 : graph_inputs(o)) {
        Graph g(0);
        try {
            g = graph6_decode(g6);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad graph6: ") + e.what());
        }
        nlohmann::json hits = nlohmann::json::object();
        bool any = false;
        for (const auto& p : f.patterns()) {
            const bool hit = contains_pattern(g, p);
            any = any || hit;
            hits[to_string(p)] = hit;
            if (format == "csv") {
                text << g6 << ',' << g.order() << ',' << g.edge_count() << ',' << to_string(p) << ','
                     << (hit ? "true" : "false") << '\n';
            } else if (format == "table") {
                text << g6 << "  n=" << g.order() << " e=" << g.edge_count() << "  " << to_string(p) << ": "
                     << (hit ? "present" : "absent") << '\n';
            }
        }
        if (format == "table") text << g6 << "  " << (any ? "not free" : "free") << '\n';
        rows.push_back({{"graph6", g6}, {"n", g.order()}, {"edges", g.edge_count()}, {"contains", hits},
                        {"free", !any}});
    }
    if (format == "json") {
        text << nlohmann::json{{"family", f.to_string()}, {"graphs", rows}}.dump(2) << '\n';
    } else if (format != "csv" && format != "table") {
        throw UsageError("detect: --format must be table, json or csv");
    }
    write_output(o, text.str());
    return kExitOk;
}

int run_formula(const Options& o) {
    using namespace turan;
    const auto n = single(o.n, "n");
    std::map<std::string, nlohmann::json> fields;
    auto put = [&](const FormulaResult& r) {
        fields["value"] = r.value;
        fields["validity"] = std::string(to_string(r.validity));
        fields["source"] = r.source;
    };
    const std::string& what = o.name;
    if (what == "ex-star") {
        put(ex_star(n, single(o.l, "l")));
    } else if (what == "ex-clique-matching") {
        put(ex_clique_matching(n, single(o.k, "k"), single(o.s, "s")));
    } else if (what == "ex-main") {
        put(ex_main(n, single(o.k, "k"), single(o.s, "s"), single(o.l, "l")));
        fields["threshold"] = ex_main_threshold(single(o.k, "k"), single(o.s, "s"), single(o.l, "l"));
    } else if (what == "ex-k3") {
        put(ex_k3(n, single(o.s, "s"), single(o.l, "l")));
        fields["exploratory_bound"] = k3_exploratory_bound(single(o.s, "s"), single(o.l, "l"));
    } else if (what == "family-edges") {
        const auto [a, b] = extremal_family_edges(n, single(o.s, "s"), single(o.l, "l"));
        fields["g1"] = a;
        fields["g2"] = b;
    } else if (what == "turan") {
        fields["value"] = turan_edges(n, single(o.k, "k"));
    } else {
        throw UsageError("unknown formula '" + what + "'");
    }
    const std::string format = o.format.empty() ? "table" : o.format;
    std::ostringstream os;
    if (format == "json") {
        os << nlohmann::json(fields).dump() << '\n';
    } else if (format == "table") {
        for (const auto& [k, v] : fields) os << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else if (format == "csv") {
        std::string head;
        std::string row;
        for (const auto& [k, v] : fields) {
            head += (head.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        os << head << '\n' << row << '\n';
    } else {
        throw UsageError("formula: --format must be table, json or csv");
    }
    write_output(o, os.str());
    return kExitOk;
}

int run_oracle(const Options& o) {
    using namespace turan;
    const auto n = usingle(o.n, "n");
    if (n > kOracleMaxOrder) throw UsageError("--n exceeds oracle cap " + std::to_string(kOracleMaxOrder));
    const auto f = family_of(o);
    std::optional<ResultCache> cache;
    if (!o.cache.empty()) {
        cache.emplace(o.cache);
        for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << '\n';
    }
    std::optional<ExtremalRecord> rec;
    if (cache) rec = cache->lookup(n, f);
    const bool hit = rec.has_value();
    if (!rec) {
        rec = brute_force_ex(n, f, {.jobs = std::max<std::size_t>(1, o.jobs)});
        if (cache) cache->append(*rec);
    }
    const std::string format = o.format.empty() ? "json" : o.format;
    std::ostringstream os;
    if (format == "json") {
        auto j = to_json(*rec);
        j["cache_hit"] = hit;
        os << j.dump() << '\n';
    } else if (format == "graph6") {
        for (const auto& g6 : rec->extremal_graphs) os << g6 << '\n';
    } else if (format == "table") {
        os << "n " << rec->n << "\nfamily " << rec->family.to_string() << "\nex " << rec->ex_value
           << "\nextremal_classes " << rec->extremal_graphs.size() << "\nclasses_visited " << rec->graphs_visited
           << "\ncache_hit " << (hit ? "true" : "false") << '\n';
        for (const auto& g6 : rec->extremal_graphs) os << "  " << g6 << '\n';
    } else if (format == "csv") {
        os << "n,family,ex,extremal_classes,classes_visited\n"
           << rec->n << ",\"" << rec->family.to_string() << "\"," << rec->ex_value << ','
           << rec->extremal_graphs.size() << ',' << rec->graphs_visited << '\n';
    } else {
        throw UsageError("oracle: unknown --format '" + format + "'");
    }
    write_output(o, os.str());
    return kExitOk;
}

int run_suites(const Options& o, const std::vector<std::string>& names) {
    using namespace turan;
    SuiteGrid grid;
    grid.n = parse_values(o.n, "n");
    grid.k = parse_values(o.k, "k");
    grid.s = parse_values(o.s, "s");
    grid.l = parse_values(o.l, "l");
    grid.jobs = std::max<std::size_t>(1, o.jobs);
    const auto format = parse_report_format(o.format.empty() ? "table" : o.format);
    if (!format) throw UsageError("--format must be csv, json or table for reports");

    std::optional<ResultCache> cache;
    if (!o.cache.empty()) {
        cache.emplace(o.cache);
        for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << '\n';
    }
    std::string text;
    bool mismatch = false;
    for (const auto& name : names) {
        SuiteReport rep;
        try {
            rep = run_suite(name, grid, cache ? &*cache : nullptr);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        mismatch = mismatch || rep.any_mismatch();
        text += emit_report(rep, *format);
    }
    write_output(o, text);
    return mismatch ? kExitMismatch : kExitOk;
}

void add_grid_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--n", o.n, "order(s): 7, 3,5 or 3..9");
    cmd->add_option("--k", o.k, "clique parameter(s)");
    cmd->add_option("--s", o.s, "copy parameter(s)");
    cmd->add_option("--l", o.l, "star size(s)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turan-number toolkit: constructions, detectors, closed forms, exhaustive oracle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(turan::kToolVersion));
    Options o;

    auto* construct = app.add_subcommand("construct", "build a graph and print it");
    construct
        ->add_option("kind", o.name, "turan | complete-bipartite | regular | r1 | g1 | g2 | alon-frankl | main")
        ->required();
    add_grid_flags(construct, o);
    construct->add_option("--format", o.format, "graph6 | json | csv | table");
    construct->add_option("--out", o.out, "output file");

    auto* detect = app.add_subcommand("detect", "test graph6 input against a forbidden family");
    detect->add_option("--family", o.family, "clique:R,matching:S,starforest:CxL")->required();
    detect->add_option("--graph", o.graph, "graph6 string (default: lines on stdin)");
    detect->add_option("--format", o.format, "table | json | csv");
    detect->add_option("--out", o.out, "output file");

    auto* formula = app.add_subcommand("formula", "evaluate a closed form");
    formula->add_option("name", o.name, "ex-star | ex-clique-matching | ex-main | ex-k3 | family-edges | turan")
        ->required();
    add_grid_flags(formula, o);
    formula->add_option("--format", o.format, "table | json | csv");
    formula->add_option("--out", o.out, "output file");

    auto* oracle = app.add_subcommand("oracle", "exact ex(n, F) by exhaustive enumeration");
    oracle->add_option("--n", o.n, "order (<= 11)")->required();
    oracle->add_option("--family", o.family, "clique:R,matching:S,starforest:CxL")->required();
    oracle->add_option("--jobs", o.jobs, "worker threads");
    oracle->add_option("--cache", o.cache, "JSON-lines result cache");
    oracle->add_option("--format", o.format, "json | table | csv | graph6");
    oracle->add_option("--out", o.out, "output file");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    verify->add_option("suite", suites, "suite names or 'all'")->required();
    add_grid_flags(verify, o);
    verify->add_option("--jobs", o.jobs, "worker threads for oracle runs");
    verify->add_option("--cache", o.cache, "JSON-lines result cache");
    verify->add_option("--format", o.format, "csv | json | table");
    verify->add_option("--out", o.out, "output file");

    auto* sweep = app.add_subcommand("sweep", "oracle vs formula as n grows (boundary sweep)");
    add_grid_flags(sweep, o);
    sweep->add_option("--jobs", o.jobs, "worker threads");
    sweep->add_option("--cache", o.cache, "JSON-lines result cache");
    sweep->add_option("--format", o.format, "csv | json | table");
    sweep->add_option("--out", o.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(o);
        if (detect->parsed()) return run_detect(o);
        if (formula->parsed()) return run_formula(o);
        if (oracle->parsed()) return run_oracle(o);
        if (verify->parsed()) {
            if (suites.size() == 1 && suites.front() == "all") suites = turan::suite_names();
            return run_suites(o, suites);
        }
        if (sweep->parsed()) return run_suites(o, {"boundary-sweep"});
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
