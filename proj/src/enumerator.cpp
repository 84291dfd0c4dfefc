#include "ivg/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "ivg/errors.hpp"
#include "ivg/graph.hpp"
#include "ivg/recognizer.hpp"
#include "ivg/representation.hpp"

namespace ivg {

namespace {

auto matching_cost_text(int n) -> std::string {
    boost::multiprecision::cpp_int cost = 1;
    for (int i = 3; i <= 2 * n - 1; i += 2) cost *= i;
    return "(2*" + std::to_string(n) + "-1)!! = " + cost.str() + " matchings";
}

auto resolve_threads(int requested, int branches) -> int {
    int t = requested;
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    return std::min(t, branches);
}

// One worker's share: claims first-mate branches off the shared counter and
// dedupes its matchings into a private key set.
struct Worker {
    std::unordered_set<std::uint64_t> keys;
    std::uint64_t matchings = 0;

    void run(int n, std::atomic<int>& next_branch) {
        auto visit = [&](const EndpointMatching& m) {
            keys.insert(canonicalize(intervals_to_graph(m.intervals())).packed());
        };
        for (int b = next_branch.fetch_add(1); b <= 2 * n; b = next_branch.fetch_add(1))
            matchings += enumerate_matchings_partitioned(n, b, visit);
    }
};

auto run_walk(int n, int threads) -> EnumerationResult {
    const auto started = std::chrono::steady_clock::now();
    EnumerationResult out;
    out.record.n = n;
    if (n == 0) {
        // The empty matching realizes the empty graph.
        out.record.classes = 1;
        out.record.matchings = 1;
        out.keys = {CanonicalForm{}.packed()};
        return out;
    }
    const int workers = resolve_threads(threads, 2 * n - 1);
    std::vector<Worker> parts(workers);
    std::atomic<int> next_branch{2};
    if (workers == 1) {
        parts[0].run(n, next_branch);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (Worker& w : parts)
            pool.emplace_back([&w, n, &next_branch] { w.run(n, next_branch); });
        for (std::thread& t : pool) t.join();
    }
    std::unordered_set<std::uint64_t>& all = parts[0].keys;
    for (int i = 1; i < workers; ++i) {
        all.insert(parts[i].keys.begin(), parts[i].keys.end());
        out.record.matchings += parts[i].matchings;
    }
    out.record.matchings += parts[0].matchings;
    out.record.classes = all.size();
    out.keys.assign(all.begin(), all.end());
    std::sort(out.keys.begin(), out.keys.end());
    out.record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

}  // namespace

auto enumerate_classes(int n, const EnumerationOptions& options) -> EnumerationResult {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative; got " + std::to_string(n));
    const int limit = options.force ? 11 : 10;
    if (n > limit) {
        std::string what = "enumerating n = " + std::to_string(n) + " means walking " +
                           matching_cost_text(n) + "; the limit is n <= " + std::to_string(limit);
        if (n == 11) what += " (pass force to spend the time)";
        throw CapacityError(what);
    }
    return run_walk(n, options.threads);
}

auto count_interval_graphs(int n, const EnumerationOptions& options) -> CountsRecord {
    return enumerate_classes(n, options).record;
}

auto enumerate_distinct(int n, const std::function<void(const Graph&)>& sink,
                        const EnumerationOptions& options) -> std::uint64_t {
    const EnumerationResult result = enumerate_classes(n, options);
    for (std::uint64_t key : result.keys) sink(graph_of_canonical_form(CanonicalForm::from_packed(key)));
    return result.record.classes;
}

namespace detail {

auto oracle_scan(int n, int threads) -> OracleTally {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative; got " + std::to_string(n));
    if (n > 8)
        throw CapacityError("the labelled-graph scan visits 2^(n(n-1)/2) graphs; n = " +
                            std::to_string(n) + " is out of reach (cap is 8)");
    if (n == 0) return {1, 1, {CanonicalForm{}.packed()}};
    const int edges = n * (n - 1) / 2;
    std::array<std::pair<int, int>, 28> pairs{};
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs[e++] = {i, j};
    const std::uint64_t total = std::uint64_t{1} << edges;
    const int workers = resolve_threads(threads, static_cast<int>(std::min<std::uint64_t>(total, 64)));
    struct Part {
        std::unordered_set<std::uint64_t> keys;
        std::uint64_t labelled = 0;
    };
    std::vector<Part> parts(workers);
    auto scan = [&](Part& part, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g(n);
            for (int b = 0; b < edges; ++b)
                if (mask >> b & 1u) g.add_edge(pairs[b].first, pairs[b].second);
            if (!is_interval(g).interval) continue;
            ++part.labelled;
            part.keys.insert(canonicalize(g).packed());
        }
    };
    if (workers == 1) {
        scan(parts[0], 0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) {
            const std::uint64_t lo = total * i / workers;
            const std::uint64_t hi = total * (i + 1) / workers;
            pool.emplace_back([&scan, &parts, i, lo, hi] { scan(parts[i], lo, hi); });
        }
        for (std::thread& t : pool) t.join();
    }
    OracleTally tally;
    std::unordered_set<std::uint64_t>& all = parts[0].keys;
    for (int i = 1; i < workers; ++i) {
        all.insert(parts[i].keys.begin(), parts[i].keys.end());
        tally.labelled += parts[i].labelled;
    }
    tally.labelled += parts[0].labelled;
    tally.classes = all.size();
    tally.keys.assign(all.begin(), all.end());
    std::sort(tally.keys.begin(), tally.keys.end());
    return tally;
}

}  // namespace detail

auto oracle_count_interval_graphs(int n, int threads) -> std::uint64_t {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative; got " + std::to_string(n));
    if (n > 7)
        throw CapacityError("the labelled-graph oracle visits 2^(n(n-1)/2) graphs; n = " +
                            std::to_string(n) + " exceeds the n <= 7 cap");
    return detail::oracle_scan(n, threads).classes;
}

}  // namespace ivg
