#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ivg/errors.hpp"
#include "ivg/graph.hpp"

namespace ivg {

// Closed interval on the integer line.
struct Interval {
    int lo = 0;
    int hi = 0;

    friend auto operator==(const Interval&, const Interval&) -> bool = default;
};

// Intersection graph: vertex i is interval i, edge iff the closed intervals
// meet.
[[nodiscard]] auto intervals_to_graph(std::span<const Interval> intervals) -> Graph;

// A perfect matching on the endpoints {1, ..., 2n}: pair j is the interval of
// vertex j.  Every matching in the enumeration has pairs[j].lo < pairs[j].hi
// and pairs sorted by lo (the recursion always mates the smallest free
// point), so equal matchings compare equal bytewise.
struct EndpointMatching {
    static constexpr int max_pairs = 12;

    int n = 0;
    std::array<Interval, max_pairs> pairs{};

    [[nodiscard]] auto intervals() const -> std::span<const Interval> {
        return {pairs.data(), static_cast<std::size_t>(n)};
    }
};

namespace detail {

template <class Visitor>
auto match_rec(EndpointMatching& m, int depth, std::uint32_t unpaired, Visitor& visit)
    -> std::uint64_t {
    if (unpaired == 0) {
        visit(static_cast<const EndpointMatching&>(m));
        return 1;
    }
    // Mate the smallest free point with each larger one in turn; that visits
    // every matching exactly once, in a fixed order.
    const int p = std::countr_zero(unpaired);
    const std::uint32_t rest = unpaired & (unpaired - 1);
    std::uint64_t total = 0;
    for (std::uint32_t c = rest; c != 0; c &= c - 1) {
        const int q = std::countr_zero(c);
        m.pairs[depth] = {p + 1, q + 1};
        total += match_rec(m, depth + 1, rest & ~(1u << q), visit);
    }
    return total;
}

inline void check_matching_size(int n) {
    if (n < 1 || n > EndpointMatching::max_pairs)
        throw CapacityError("endpoint matchings are enumerable for 1 <= n <= 12 (cost (2n-1)!!); got n = " +
                            std::to_string(n));
}

}  // namespace detail

// Visits all (2n-1)!! matchings of {1, ..., 2n} and returns how many were
// visited.  The visitor receives a const EndpointMatching&.
template <class Visitor>
auto enumerate_matchings(int n, Visitor&& visit) -> std::uint64_t {
    detail::check_matching_size(n);
    EndpointMatching m;
    m.n = n;
    return detail::match_rec(m, 0, (1u << (2 * n)) - 1u, visit);
}

// Same enumeration restricted to matchings that mate point 1 with `branch`.
// The 2n - 1 branches partition the full set, each holding (2n-3)!!
// matchings; workers can split on them without coordination.
template <class Visitor>
auto enumerate_matchings_partitioned(int n, int branch, Visitor&& visit) -> std::uint64_t {
    detail::check_matching_size(n);
    if (branch < 2 || branch > 2 * n)
        throw std::invalid_argument("branch must mate point 1 with a point in [2, 2n]");
    EndpointMatching m;
    m.n = n;
    m.pairs[0] = {1, branch};
    const std::uint32_t all = (1u << (2 * n)) - 1u;
    return detail::match_rec(m, 1, all & ~1u & ~(1u << (branch - 1)), visit);
}

// {"n": N, "intervals": [[lo, hi], ...]}
[[nodiscard]] auto intervals_to_json(std::span<const Interval> intervals) -> std::string;
[[nodiscard]] auto intervals_from_json(std::string_view text) -> std::vector<Interval>;

}  // namespace ivg
