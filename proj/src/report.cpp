#include "ivg/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ivg/errors.hpp"

namespace ivg {

namespace {

auto split_csv_line(const std::string& line) -> std::vector<std::string> {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

template <class T>
auto parse_number(const std::string& text, int line_no, const char* what) -> T {
    T value{};
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("results CSV line " + std::to_string(line_no) + ": bad " + what + " \"" +
                         text + "\"");
    return value;
}

auto format_seconds(double seconds) -> std::string {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    out << seconds;
    return out.str();
}

auto lower_bound_text(int n) -> std::string {
    if (n < 3 || n % 3 != 0) return "";
    const Rational r = lower_bound(n / 3);
    return r.num.str() + "/" + r.den.str();
}

}  // namespace

auto ResultsTable::records() const -> std::vector<CountsRecord> {
    std::vector<CountsRecord> out;
    out.reserve(rows.size());
    for (const auto& [n, rec] : rows) out.push_back(rec);
    return out;
}

auto results_csv_header() -> std::string { return "n,i_n,matchings,lower_bound,upper_bound,seconds"; }

auto results_csv_row(const CountsRecord& rec) -> std::string {
    return std::to_string(rec.n) + "," + std::to_string(rec.classes) + "," +
           std::to_string(rec.matchings) + "," + lower_bound_text(rec.n) + "," +
           double_factorial_odd(rec.n).str() + "," + format_seconds(rec.seconds);
}

auto results_csv_text(const ResultsTable& table) -> std::string {
    std::string out = results_csv_header() + "\n";
    for (const auto& [n, rec] : table.rows) out += results_csv_row(rec) + "\n";
    return out;
}

auto load_results_csv(const std::filesystem::path& path) -> ResultsTable {
    ResultsTable table;
    std::ifstream in(path);
    if (!in.is_open()) return table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line == results_csv_header()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 6)
            throw ParseError("results CSV line " + std::to_string(line_no) + ": expected 6 columns, got " +
                             std::to_string(fields.size()));
        CountsRecord rec;
        rec.n = parse_number<int>(fields[0], line_no, "n");
        rec.classes = parse_number<std::uint64_t>(fields[1], line_no, "class count");
        rec.matchings = parse_number<std::uint64_t>(fields[2], line_no, "matching count");
        rec.seconds = parse_number<double>(fields[5], line_no, "seconds");
        table.upsert(rec);
    }
    return table;
}

auto save_results_csv(const ResultsTable& table, const std::filesystem::path& path) -> void {
    std::ofstream out(path, std::ios::trunc);
    if (!out.is_open()) throw std::runtime_error("cannot write " + path.string());
    out << results_csv_text(table);
}

auto bound_table_csv_text(std::span<const CountsRecord> records,
                          std::span<const BoundReport> reports) -> std::string {
    std::ostringstream out;
    out << results_csv_header() << ",lower_num,lower_den,upper,log_in,log_upper,ratio\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    for (std::size_t i = 0; i < records.size() && i < reports.size(); ++i) {
        const BoundReport& r = reports[i];
        out << results_csv_row(records[i]) << ",";
        if (r.lower_defined) out << r.lower.num.str() << "," << r.lower.den.str() << ",";
        else out << ",,";
        out << r.upper.str() << "," << r.log_classes << "," << r.log_upper << "," << r.ratio << "\n";
    }
    return out.str();
}

}  // namespace ivg
