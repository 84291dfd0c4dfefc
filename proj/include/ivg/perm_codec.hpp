#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivg/graph.hpp"
#include "ivg/representation.hpp"

namespace ivg {

// Permutation of {1, ..., k}: image[j-1] is where j goes.
struct Permutation {
    std::vector<int> image;

    [[nodiscard]] auto k() const -> int { return static_cast<int>(image.size()); }

    friend auto operator==(const Permutation&, const Permutation&) -> bool = default;
};

// One-line image text, e.g. "2 1 3".  Parse rejects anything that is not a
// bijection on {1, ..., k}.
[[nodiscard]] auto parse_permutation(std::string_view text) -> Permutation;
[[nodiscard]] auto permutation_to_text(const Permutation& p) -> std::string;

// The 3k intervals that carry a permutation: short red and blue markers plus
// one white interval per j reaching from the red block into the blue block,
// where it stops just past the pi(j)-th blue marker.  The 6k endpoints
// partition {1, ..., 6k}.
struct ColoredIntervalSystem {
    int k = 0;
    std::vector<Interval> red;    // [3j-1, 3j]
    std::vector<Interval> blue;   // [3k+3j-2, 3k+3j-1]
    std::vector<Interval> white;  // [3j-2, 3k+3pi(j)]
};

enum class Color { red, blue, white };

[[nodiscard]] auto color_name(Color c) -> std::string_view;

// Intersection graph of a system, vertices ordered r_1..r_k, b_1..b_k,
// w_1..w_k with matching colors.
struct ColoredGraph {
    Graph g;
    std::vector<Color> color;
};

[[nodiscard]] auto encode(const Permutation& p) -> ColoredIntervalSystem;

// Throws CapacityError when 3k exceeds the 32-vertex graph limit; the
// interval-arithmetic decoder below has no such cap.
[[nodiscard]] auto realize(const ColoredIntervalSystem& s) -> ColoredGraph;

// Recovers the permutation from degrees alone: a white vertex with red degree
// d is w_j for j = k+1-d, and its blue degree is the image of j.  Throws
// InvalidCodeError when the degrees do not spell a permutation.
[[nodiscard]] auto decode(const ColoredGraph& cg) -> Permutation;

// Same decoding computed by interval overlap counting, so it works for any k
// without building a graph.
[[nodiscard]] auto decode_system(const ColoredIntervalSystem& s) -> Permutation;

// True iff decode(realize(encode(p))) = p for every one of the k!
// permutations and the k! colored graphs are pairwise distinct.  1 <= k <= 6.
[[nodiscard]] auto verify_injectivity(int k) -> bool;

// Interval JSON with a parallel "colors" array; intervals run r_1..r_k,
// b_1..b_k, w_1..w_k.
[[nodiscard]] auto colored_system_to_json(const ColoredIntervalSystem& s) -> std::string;
[[nodiscard]] auto colored_system_from_json(std::string_view text) -> ColoredIntervalSystem;

}  // namespace ivg
