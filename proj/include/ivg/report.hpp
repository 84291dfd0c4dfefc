#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ivg/bounds.hpp"
#include "ivg/enumerator.hpp"

namespace ivg {

// Persisted counts, keyed by n so re-runs update in place instead of
// recomputing or duplicating.
struct ResultsTable {
    std::map<int, CountsRecord> rows;

    auto upsert(const CountsRecord& rec) -> void { rows[rec.n] = rec; }
    [[nodiscard]] auto records() const -> std::vector<CountsRecord>;
};

// Columns: n, i_n, matchings, lower_bound, upper_bound, seconds.  The bound
// columns are derived (exact fraction text k!/3^(3k) when n = 3k, and
// (2n-1)!!), so loading only trusts n, i_n, matchings, seconds.
[[nodiscard]] auto results_csv_header() -> std::string;
[[nodiscard]] auto results_csv_row(const CountsRecord& rec) -> std::string;
[[nodiscard]] auto results_csv_text(const ResultsTable& table) -> std::string;

// A missing file loads as an empty table; a malformed row is a ParseError
// naming the line.
[[nodiscard]] auto load_results_csv(const std::filesystem::path& path) -> ResultsTable;
auto save_results_csv(const ResultsTable& table, const std::filesystem::path& path) -> void;

// The results columns extended with lower_num, lower_den, upper, log_in,
// log_upper, ratio; one report row per record, same order.
[[nodiscard]] auto bound_table_csv_text(std::span<const CountsRecord> records,
                                        std::span<const BoundReport> reports) -> std::string;

}  // namespace ivg
