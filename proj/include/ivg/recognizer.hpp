#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ivg/graph.hpp"

namespace ivg {

// Vertices in the order a lexicographic BFS visits them, ties broken toward
// the smallest id.  Reversing it gives a perfect elimination ordering exactly
// when the graph is chordal.
[[nodiscard]] auto lex_bfs_order(const Graph& g) -> std::vector<int>;

struct ChordalCheck {
    bool chordal = false;
    std::vector<int> elimination_order;  // filled when chordal
    std::vector<int> cycle;              // an induced cycle of length >= 4 otherwise
};
[[nodiscard]] auto is_chordal(const Graph& g) -> ChordalCheck;

// Three pairwise non-adjacent vertices such that each pair stays connected
// when the closed neighbourhood of the third is removed; interval graphs have
// none.  Returns the lexicographically first such triple.
[[nodiscard]] auto has_asteroidal_triple(const Graph& g) -> std::optional<std::array<int, 3>>;

enum class WitnessKind { elimination_ordering, chordless_cycle, asteroidal_triple };

// The verdict always carries a witness the caller can check independently: a
// perfect elimination ordering for yes, an induced long cycle or an
// asteroidal triple for no.
struct RecognitionResult {
    bool interval = false;
    WitnessKind witness_kind = WitnessKind::elimination_ordering;
    std::vector<int> witness;
};
[[nodiscard]] auto is_interval(const Graph& g) -> RecognitionResult;

// Witness validators, written directly from the definitions so they share no
// code with the checks above.
[[nodiscard]] auto is_valid_elimination_ordering(const Graph& g, std::span<const int> order) -> bool;
[[nodiscard]] auto is_chordless_cycle(const Graph& g, std::span<const int> cycle) -> bool;
[[nodiscard]] auto is_asteroidal_triple(const Graph& g, int a, int b, int c) -> bool;

}  // namespace ivg
