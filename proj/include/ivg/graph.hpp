#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>

namespace ivg {

// Small undirected graph, at most 32 vertices, one word of adjacency bits per
// vertex.  Everything downstream (canonical forms, recognition, enumeration)
// leans on that representation: neighbourhood intersections are single ANDs.
class Graph {
public:
    static constexpr int max_vertices = 32;

    Graph() = default;
    explicit Graph(int n);

    [[nodiscard]] auto vertex_count() const -> int { return n_; }
    [[nodiscard]] auto edge_count() const -> int;

    auto add_edge(int u, int v) -> void;
    [[nodiscard]] auto has_edge(int u, int v) const -> bool;

    // Bit i set iff i is adjacent to v.
    [[nodiscard]] auto neighbours(int v) const -> std::uint32_t { return rows_[v]; }
    [[nodiscard]] auto degree(int v) const -> int;

    [[nodiscard]] auto rows() const -> std::span<const std::uint32_t> {
        return {rows_.data(), static_cast<std::size_t>(n_)};
    }

    friend auto operator==(const Graph&, const Graph&) -> bool = default;

private:
    int n_ = 0;
    std::array<std::uint32_t, max_vertices> rows_{};
};

// The lexicographically least upper-triangle adjacency bit string over all
// vertex orderings, preceded by the vertex count.  Two graphs are isomorphic
// exactly when their canonical forms compare equal.  Bits run column by
// column: x(0,1), x(0,2), x(1,2), x(0,3), ... with bit 0 of the string stored
// at the top of bits[0].
struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 8> bits{};

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

    // For n <= 11 the whole form (55 triangle bits + the count) fits in one
    // word, which is what the enumerator dedupes on.  Throws CapacityError
    // beyond that.
    [[nodiscard]] auto packed() const -> std::uint64_t;
    [[nodiscard]] static auto from_packed(std::uint64_t key) -> CanonicalForm;
};

[[nodiscard]] auto canonicalize(const Graph& g) -> CanonicalForm;
[[nodiscard]] auto is_isomorphic(const Graph& a, const Graph& b) -> bool;

// Rebuilds the concrete graph whose adjacency matrix is the canonical bit
// string itself.
[[nodiscard]] auto graph_of_canonical_form(const CanonicalForm& form) -> Graph;

}  // namespace ivg
