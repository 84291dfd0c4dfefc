#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ivg/graph.hpp"

namespace ivg {

// One completed enumeration: how many isomorphism classes of interval graphs
// on n vertices exist, how many endpoint matchings were walked to find them,
// and how long the walk took.
struct CountsRecord {
    int n = 0;
    std::uint64_t classes = 0;
    std::uint64_t matchings = 0;
    double seconds = 0.0;
};

struct EnumerationOptions {
    int threads = 0;    // 0 = one worker per hardware thread
    bool force = false; // unlocks n = 11 (an overnight-sized walk)
};

// Exact class count by walking every endpoint matching and deduplicating the
// intersection graphs by canonical form.  n <= 10 by default, 11 with force;
// the refusal names the (2n-1)!! cost.  The result does not depend on the
// worker count: the branches partition the matchings and the dedup is a set
// union.
[[nodiscard]] auto count_interval_graphs(int n, const EnumerationOptions& options = {}) -> CountsRecord;

// Same walk, additionally returning the packed canonical key of every class,
// sorted ascending.
struct EnumerationResult {
    CountsRecord record;
    std::vector<std::uint64_t> keys;
};
[[nodiscard]] auto enumerate_classes(int n, const EnumerationOptions& options = {}) -> EnumerationResult;

// Streams one representative graph per isomorphism class to the sink, in
// ascending canonical-key order, and returns the class count.
auto enumerate_distinct(int n, const std::function<void(const Graph&)>& sink,
                        const EnumerationOptions& options = {}) -> std::uint64_t;

// Independent cross-check that shares no representation-side code with the
// walk above: visits all 2^(n(n-1)/2) labelled graphs, keeps those the
// recognizer accepts, dedupes by canonical form.  Exponential in n^2, so
// n <= 7.
[[nodiscard]] auto oracle_count_interval_graphs(int n, int threads = 0) -> std::uint64_t;

namespace detail {

struct OracleTally {
    std::uint64_t classes = 0;
    std::uint64_t labelled = 0;         // labelled interval graphs, a second invariant
    std::vector<std::uint64_t> keys;    // sorted packed canonical forms
};

// The scan behind the public oracle, capped at n = 8 (2^28 graphs, minutes of
// single-core work) for one-off confirmations beyond the public limit.
[[nodiscard]] auto oracle_scan(int n, int threads) -> OracleTally;

}  // namespace detail

}  // namespace ivg
