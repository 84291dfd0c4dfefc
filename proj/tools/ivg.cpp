#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivg/bounds.hpp"
#include "ivg/enumerator.hpp"
#include "ivg/errors.hpp"
#include "ivg/graph6.hpp"
#include "ivg/perm_codec.hpp"
#include "ivg/recognizer.hpp"
#include "ivg/report.hpp"
#include "ivg/representation.hpp"

namespace {

// Worker count: flag beats IVG_THREADS, which beats hardware detection.
auto threads_from_env() -> int {
    const char* raw = std::getenv("IVG_THREADS");
    if (raw == nullptr) return 0;
    int value = 0;
    auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
    if (ec != std::errc() || *ptr != '\0' || value < 1) {
        std::cerr << "ignoring IVG_THREADS=\"" << raw << "\" (want a positive integer)\n";
        return 0;
    }
    return value;
}

auto effective_threads(int flag) -> int { return flag > 0 ? flag : threads_from_env(); }

auto lower_bound_text(int n) -> std::string {
    if (n < 3 || n % 3 != 0) return "";
    const ivg::Rational r = ivg::lower_bound(n / 3);
    return r.num.str() + "/" + r.den.str();
}

auto witness_kind_name(ivg::WitnessKind kind) -> const char* {
    switch (kind) {
        case ivg::WitnessKind::elimination_ordering: return "elimination_ordering";
        case ivg::WitnessKind::chordless_cycle: return "chordless_cycle";
        default: return "asteroidal_triple";
    }
}

auto verdict_json(const ivg::RecognitionResult& r) -> std::string {
    nlohmann::json doc;
    doc["interval"] = r.interval;
    doc["witness_kind"] = witness_kind_name(r.witness_kind);
    doc["witness"] = r.witness;
    return doc.dump();
}

struct EnumerateArgs {
    std::vector<int> ns;
    int upto = -1;
    int threads = 0;
    bool force = false;
    std::string csv;
    std::string format = "plain";
};

auto run_enumerate(const EnumerateArgs& args) -> int {
    std::vector<int> targets = args.ns;
    if (args.upto >= 0)
        for (int n = 0; n <= args.upto; ++n) targets.push_back(n);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    if (targets.empty()) {
        std::cerr << "enumerate: pass --n or --upto\n";
        return 2;
    }
    ivg::ResultsTable table;
    if (!args.csv.empty()) table = ivg::load_results_csv(args.csv);
    bool header_done = false;
    for (int n : targets) {
        const ivg::EnumerationResult result =
            ivg::enumerate_classes(n, {effective_threads(args.threads), args.force});
        const ivg::CountsRecord& rec = result.record;
        if (args.format == "plain") {
            std::cout << "n=" << rec.n << " classes=" << rec.classes << " matchings=" << rec.matchings
                      << " seconds=" << rec.seconds << "\n";
        } else if (args.format == "csv") {
            if (!header_done) std::cout << ivg::results_csv_header() << "\n";
            header_done = true;
            std::cout << ivg::results_csv_row(rec) << "\n";
        } else if (args.format == "json") {
            nlohmann::json doc;
            doc["n"] = rec.n;
            doc["i_n"] = rec.classes;
            doc["matchings"] = rec.matchings;
            doc["lower_bound"] = lower_bound_text(rec.n);
            doc["upper_bound"] = ivg::double_factorial_odd(rec.n).str();
            doc["seconds"] = rec.seconds;
            std::cout << doc.dump() << "\n";
        } else {  // graph6: one line per class, ascending canonical key
            for (std::uint64_t key : result.keys)
                std::cout << ivg::to_graph6(ivg::graph_of_canonical_form(ivg::CanonicalForm::from_packed(key)))
                          << "\n";
        }
        if (!args.csv.empty()) table.upsert(rec);
    }
    if (!args.csv.empty()) ivg::save_results_csv(table, args.csv);
    return 0;
}

auto run_oracle(int n, int threads, const std::string& csv) -> int {
    const std::uint64_t count = ivg::oracle_count_interval_graphs(n, effective_threads(threads));
    std::cout << "n=" << n << " oracle_classes=" << count << "\n";
    if (csv.empty()) return 0;
    const ivg::ResultsTable table = ivg::load_results_csv(csv);
    const auto it = table.rows.find(n);
    if (it == table.rows.end()) {
        std::cout << "no stored row for n=" << n << " to compare against\n";
        return 0;
    }
    if (it->second.classes != count) {
        std::cerr << "MISMATCH: stored i_" << n << " = " << it->second.classes << ", oracle says "
                  << count << "\n";
        return 1;
    }
    std::cout << "matches stored i_" << n << " = " << it->second.classes << "\n";
    return 0;
}

auto read_all(const std::string& path) -> std::string {
    if (path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in.is_open()) throw ivg::ParseError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto run_recognize(const std::string& input) -> int {
    std::istringstream lines(read_all(input));
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::cout << verdict_json(ivg::is_interval(ivg::from_graph6(line))) << "\n";
    }
    return 0;
}

auto run_verify_bounds(const std::string& csv) -> int {
    if (!std::filesystem::exists(csv)) {
        std::cerr << "verify-bounds: no such file " << csv << "\n";
        return 2;
    }
    const ivg::ResultsTable table = ivg::load_results_csv(csv);
    const std::vector<ivg::CountsRecord> records = table.records();
    const std::vector<ivg::BoundReport> reports = ivg::verify_sandwich(records);
    std::cout << ivg::bound_table_csv_text(records, reports);
    bool ok = true;
    for (const ivg::BoundReport& r : reports)
        if (!r.ok) {
            std::cerr << "bound violation at n = " << r.n << "\n";
            ok = false;
        }
    if (!ivg::verify_identities(50)) {
        std::cerr << "double-factorial identity check failed\n";
        ok = false;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration toolkit for interval graphs"};
    app.require_subcommand(1);

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "count isomorphism classes via endpoint matchings");
    enumerate->add_option("--n", en.ns, "vertex count (repeatable)");
    enumerate->add_option("--upto", en.upto, "also run every n from 0 to this");
    enumerate->add_option("--threads", en.threads, "worker count (default: IVG_THREADS, then hardware)");
    enumerate->add_flag("--force", en.force, "allow the n = 11 overnight run");
    enumerate->add_option("--csv", en.csv, "results table to update in place");
    enumerate->add_option("--format", en.format, "plain, csv, json, or graph6 class lines")
        ->check(CLI::IsMember({"plain", "csv", "json", "graph6"}));

    int oracle_n = 0;
    int oracle_threads = 0;
    std::string oracle_csv;
    auto* oracle = app.add_subcommand("oracle", "independent labelled-graph count, diffed against stored results");
    oracle->add_option("--n", oracle_n, "vertex count")->required();
    oracle->add_option("--threads", oracle_threads, "worker count");
    oracle->add_option("--csv", oracle_csv, "results table to compare against");

    std::string perm_text;
    auto* encode = app.add_subcommand("encode", "permutation to colored interval system JSON");
    encode->add_option("--perm", perm_text, "one-line image, e.g. \"2 1 3\"")->required();

    std::string decode_input;
    auto* decode = app.add_subcommand("decode", "colored interval system JSON back to the permutation");
    decode->add_option("--input", decode_input, "JSON file (default: stdin)");

    std::string recognize_input;
    auto* recognize = app.add_subcommand("recognize", "graph6 lines in, verdict JSON lines out");
    recognize->add_option("--input", recognize_input, "graph6 file (default: stdin)");

    std::string bounds_csv;
    auto* verify = app.add_subcommand("verify-bounds", "check every stored count against the exact bounds");
    verify->add_option("--csv", bounds_csv, "results table to verify")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(en);
        if (oracle->parsed()) return run_oracle(oracle_n, oracle_threads, oracle_csv);
        if (encode->parsed()) {
            std::cout << ivg::colored_system_to_json(ivg::encode(ivg::parse_permutation(perm_text)))
                      << "\n";
            return 0;
        }
        if (decode->parsed()) {
            const auto system = ivg::colored_system_from_json(read_all(decode_input));
            std::cout << ivg::permutation_to_text(ivg::decode_system(system)) << "\n";
            return 0;
        }
        if (recognize->parsed()) return run_recognize(recognize_input);
        if (verify->parsed()) return run_verify_bounds(bounds_csv);
    } catch (const ivg::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ivg::InvalidCodeError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ivg::CapacityError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
