#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "turan/detectors.hpp"
#include "turan/oracle.hpp"

namespace turan {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Status { Match, Mismatch, Skipped };

struct ReportRow {
    std::optional<std::int64_t> n, k, s, l;
    /// "audit" for formula/construction checks, "oracle" for exhaustive comparisons.
    std::string check = "audit";
    std::optional<std::int64_t> formula, construction, oracle;
    std::optional<bool> free;
    Status status = Status::Skipped;
    /// Non-empty iff status == Skipped; names the cap or threshold.
    std::string skip_reason;
    std::string note;
    std::map<std::string, std::string> details;
};

std::string status_label(const ReportRow& row);

struct SuiteReport {
    std::string suite;
    std::vector<ReportRow> rows;
    std::string timestamp;
    std::string version{kToolVersion};
    std::size_t oracle_runs = 0;
    std::size_t cache_hits = 0;
    /// Oracle records in request order, for determinism checks.
    std::vector<ExtremalRecord> records;

    bool any_mismatch() const;
};

/// Empty vectors select the suite's default grid.
struct SuiteGrid {
    std::vector<std::int64_t> n, k, s, l;
    std::size_t jobs = 1;
};

/// Append-only JSON-lines store of ExtremalRecords keyed by (n, family).
class ResultCache {
public:
    /// Loads existing lines; corrupt lines are skipped and listed in warnings().
    explicit ResultCache(std::filesystem::path path);

    std::optional<ExtremalRecord> lookup(std::size_t n, const ForbiddenFamily& f) const;
    void append(const ExtremalRecord& record);

    std::size_t size() const;
    const std::vector<std::string>& warnings() const { return warnings_; }
    const std::filesystem::path& path() const { return path_; }

private:
    static std::string key(std::size_t n, const ForbiddenFamily& f);

    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, ExtremalRecord> records_;
    std::vector<std::string> warnings_;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite or a grid beyond module caps.
SuiteReport run_suite(std::string_view name, const SuiteGrid& grid = {}, ResultCache* cache = nullptr);

enum class ReportFormat { Csv, Json, Table };

std::optional<ReportFormat> parse_report_format(std::string_view s);

/// Rows ordered by (n, k, s, l, check); absent parameters sort first.
std::string emit_report(const SuiteReport& report, ReportFormat format);

}  // namespace turan
