#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivg/graph6.hpp"
#include "ivg/recognizer.hpp"
#include "ivg/report.hpp"

namespace {

struct CommandResult {
    int status = -1;
    std::string output;  // stdout and stderr interleaved
};

auto run_command(const std::string& command) -> CommandResult {
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int rc = pclose(pipe);
    REQUIRE(WIFEXITED(rc));
    result.status = WEXITSTATUS(rc);
    return result;
}

const std::string cli = std::string("\"") + IVG_CLI_PATH + "\"";

auto lines_of(const std::string& text) -> std::vector<std::string> {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

auto temp_path(const char* name) -> std::string {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("enumerate prints one plain line per n") {
    const CommandResult r = run_command(cli + " enumerate --n 4 --n 2");
    CHECK(r.status == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 2);  // sorted, deduplicated
    CHECK(lines[0].rfind("n=2 classes=2 matchings=3 seconds=", 0) == 0);
    CHECK(lines[1].rfind("n=4 classes=10 matchings=105 seconds=", 0) == 0);
}

TEST_CASE("enumerate csv format emits the results table") {
    const CommandResult r = run_command(cli + " enumerate --upto 3 --format csv");
    CHECK(r.status == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == ivg::results_csv_header());
    CHECK(lines[1].rfind("0,1,1,,1,", 0) == 0);
    CHECK(lines[2].rfind("1,1,1,,1,", 0) == 0);
    CHECK(lines[3].rfind("2,2,3,,3,", 0) == 0);
    CHECK(lines[4].rfind("3,4,15,1/27,15,", 0) == 0);
}

TEST_CASE("enumerate json format carries the derived bound columns") {
    const CommandResult r = run_command(cli + " enumerate --n 5 --format json");
    CHECK(r.status == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("n") == 5);
    CHECK(doc.at("i_n") == 27);
    CHECK(doc.at("matchings") == 945);
    CHECK(doc.at("lower_bound") == "");
    CHECK(doc.at("upper_bound") == "945");
    CHECK(doc.at("seconds").is_number());

    const CommandResult r6 = run_command(cli + " enumerate --n 6 --format json");
    CHECK(nlohmann::json::parse(r6.output).at("lower_bound") == "2/729");
}

TEST_CASE("enumerate graph6 format lists each class once") {
    const CommandResult r = run_command(cli + " enumerate --n 4 --format graph6");
    CHECK(r.status == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 10);
    std::set<std::string> seen;
    for (const std::string& line : lines) {
        const ivg::Graph g = ivg::from_graph6(line);
        CHECK(g.vertex_count() == 4);
        CHECK(ivg::is_interval(g).interval);
        CHECK(seen.insert(line).second);
    }
}

TEST_CASE("a results csv accumulates runs and re-running is idempotent") {
    const std::string csv = temp_path("ivg_cli_results.csv");
    std::filesystem::remove(csv);
    CHECK(run_command(cli + " enumerate --upto 4 --csv \"" + csv + "\"").status == 0);
    const ivg::ResultsTable first = ivg::load_results_csv(csv);
    REQUIRE(first.rows.size() == 5);
    CHECK(first.rows.at(4).classes == 10);
    CHECK(first.rows.at(4).matchings == 105);

    CHECK(run_command(cli + " enumerate --n 4 --csv \"" + csv + "\"").status == 0);
    const ivg::ResultsTable second = ivg::load_results_csv(csv);
    CHECK(second.rows.size() == 5);  // upsert, not append

    SUBCASE("oracle agrees with the stored row") {
        const CommandResult ok = run_command(cli + " oracle --n 4 --csv \"" + csv + "\"");
        CHECK(ok.status == 0);
        CHECK(ok.output.find("oracle_classes=10") != std::string::npos);
        CHECK(ok.output.find("matches stored i_4 = 10") != std::string::npos);
    }
    SUBCASE("oracle reports a missing row without failing") {
        const CommandResult none = run_command(cli + " oracle --n 5 --csv \"" + csv + "\"");
        CHECK(none.status == 0);
        CHECK(none.output.find("no stored row for n=5") != std::string::npos);
    }
    SUBCASE("oracle flags a tampered row") {
        ivg::ResultsTable bad = ivg::load_results_csv(csv);
        bad.rows.at(4).classes = 11;
        ivg::save_results_csv(bad, csv);
        const CommandResult miss = run_command(cli + " oracle --n 4 --csv \"" + csv + "\"");
        CHECK(miss.status == 1);
        CHECK(miss.output.find("MISMATCH") != std::string::npos);
    }
    SUBCASE("verify-bounds passes the real table and rejects a tampered one") {
        const CommandResult good = run_command(cli + " verify-bounds --csv \"" + csv + "\"");
        CHECK(good.status == 0);
        CHECK(good.output.rfind("n,i_n,matchings,lower_bound,upper_bound,seconds,lower_num,", 0) == 0);

        ivg::ResultsTable bad = ivg::load_results_csv(csv);
        bad.rows.at(3).classes = 16;  // over (2*3-1)!! = 15
        ivg::save_results_csv(bad, csv);
        const CommandResult broken = run_command(cli + " verify-bounds --csv \"" + csv + "\"");
        CHECK(broken.status == 1);
        CHECK(broken.output.find("bound violation at n = 3") != std::string::npos);
    }
    std::filesystem::remove(csv);
}

TEST_CASE("oracle without a csv just reports its count") {
    const CommandResult r = run_command(cli + " oracle --n 3");
    CHECK(r.status == 0);
    CHECK(r.output == "n=3 oracle_classes=4\n");
}

TEST_CASE("verify-bounds on a missing file is a usage error") {
    const CommandResult r = run_command(cli + " verify-bounds --csv " + temp_path("ivg_absent.csv"));
    CHECK(r.status == 2);
    CHECK(r.output.find("no such file") != std::string::npos);
}

TEST_CASE("recognize reads graph6 lines and writes verdict JSON lines") {
    const CommandResult r = run_command("printf 'Cl\\nCs\\n' | " + cli + " recognize");
    CHECK(r.status == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 2);

    const nlohmann::json cycle = nlohmann::json::parse(lines[0]);
    CHECK(cycle.at("interval") == false);
    CHECK(cycle.at("witness_kind") == "chordless_cycle");
    CHECK(cycle.at("witness").size() == 4);

    const nlohmann::json claw = nlohmann::json::parse(lines[1]);
    CHECK(claw.at("interval") == true);
    CHECK(claw.at("witness_kind") == "elimination_ordering");
    CHECK(claw.at("witness").size() == 4);

    SUBCASE("--input reads a file instead of stdin") {
        const std::string path = temp_path("ivg_cli_codes.g6");
        std::ofstream(path) << "Dhc\n";
        const CommandResult file = run_command(cli + " recognize --input \"" + path + "\"");
        CHECK(file.status == 0);
        const nlohmann::json five = nlohmann::json::parse(file.output);
        CHECK(five.at("interval") == false);
        CHECK(five.at("witness").size() == 5);
        std::filesystem::remove(path);
    }
    SUBCASE("a malformed code is a usage error") {
        CHECK(run_command("printf '~??\\n' | " + cli + " recognize").status == 2);
    }
}

TEST_CASE("encode and decode invert each other through a pipe") {
    const CommandResult r = run_command(cli + " encode --perm \"3 1 2\" | " + cli + " decode");
    CHECK(r.status == 0);
    CHECK(r.output == "3 1 2\n");

    const CommandResult json_only = run_command(cli + " encode --perm \"2 1\"");
    CHECK(json_only.status == 0);
    const nlohmann::json doc = nlohmann::json::parse(json_only.output);
    CHECK(doc.at("n") == 6);
    CHECK(doc.at("intervals").size() == 6);
    CHECK(doc.at("colors").size() == 6);

    CHECK(run_command(cli + " encode --perm \"1 1\"").status == 2);
    CHECK(run_command(cli + " decode --input " + temp_path("ivg_absent.json")).status == 2);
    CHECK(run_command("printf '{}' | " + cli + " decode").status == 2);
}

TEST_CASE("costly requests are refused with the price named") {
    const CommandResult eleven = run_command(cli + " enumerate --n 11");
    CHECK(eleven.status == 2);
    CHECK(eleven.output.find("13749310575") != std::string::npos);
    CHECK(eleven.output.find("force") != std::string::npos);

    const CommandResult twelve = run_command(cli + " enumerate --n 12 --force");
    CHECK(twelve.status == 2);
    CHECK(twelve.output.find("316234143225") != std::string::npos);

    CHECK(run_command(cli + " oracle --n 9").status == 2);
}

TEST_CASE("IVG_THREADS is honored and bad values are ignored with a warning") {
    const CommandResult env = run_command("IVG_THREADS=3 " + cli + " enumerate --n 5");
    CHECK(env.status == 0);
    CHECK(env.output.find("classes=27") != std::string::npos);

    const CommandResult bad = run_command("IVG_THREADS=abc " + cli + " enumerate --n 3");
    CHECK(bad.status == 0);
    CHECK(bad.output.find("ignoring IVG_THREADS") != std::string::npos);
    CHECK(bad.output.find("classes=4") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
    CHECK(run_command(cli).status == 2);
    CHECK(run_command(cli + " no-such-verb").status == 2);
    CHECK(run_command(cli + " enumerate").status == 2);
    CHECK(run_command(cli + " enumerate --bogus").status == 2);
    CHECK(run_command(cli + " enumerate --n 3 --format yaml").status == 2);
    CHECK(run_command(cli + " oracle").status == 2);

    const CommandResult help = run_command(cli + " --help");
    CHECK(help.status == 0);
    CHECK(help.output.find("enumerate") != std::string::npos);
    CHECK(help.output.find("verify-bounds") != std::string::npos);
}
