#include "ivg/perm_codec.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "ivg/errors.hpp"

namespace ivg {

namespace {

auto is_bijection(const std::vector<int>& image) -> bool {
    const int k = static_cast<int>(image.size());
    std::vector<bool> hit(k + 1, false);
    for (int v : image) {
        if (v < 1 || v > k || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

auto overlaps(const Interval& a, const Interval& b) -> bool {
    return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

// Shared tail of both decoders: turn the (red degree, blue degree) profile of
// the white vertices back into an image, or explain why it is not one.
auto degrees_to_permutation(int k, const std::vector<std::pair<int, int>>& white_degrees)
    -> Permutation {
    Permutation p;
    p.image.assign(k, 0);
    std::vector<bool> index_seen(k + 1, false);
    for (const auto& [deg_red, deg_blue] : white_degrees) {
        const int j = k + 1 - deg_red;
        if (j < 1 || j > k || index_seen[j])
            throw InvalidCodeError("not a valid code: red degrees of the white vertices must be exactly {1, ..., " +
                                   std::to_string(k) + "}");
        index_seen[j] = true;
        p.image[j - 1] = deg_blue;
    }
    if (!is_bijection(p.image))
        throw InvalidCodeError("not a valid code: blue degrees of the white vertices do not form a permutation");
    return p;
}

}  // namespace

auto parse_permutation(std::string_view text) -> Permutation {
    std::istringstream in{std::string(text)};
    Permutation p;
    int value = 0;
    while (in >> value) p.image.push_back(value);
    if (!in.eof()) throw ParseError("permutation text: expected whitespace-separated integers");
    if (p.image.empty()) throw ParseError("permutation text: empty");
    if (!is_bijection(p.image))
        throw ParseError("permutation text: not a bijection on {1, ..., " +
                         std::to_string(p.image.size()) + "}");
    return p;
}

auto permutation_to_text(const Permutation& p) -> std::string {
    std::string out;
    for (int i = 0; i < p.k(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(p.image[i]);
    }
    return out;
}

auto color_name(Color c) -> std::string_view {
    switch (c) {
        case Color::red: return "red";
        case Color::blue: return "blue";
        default: return "white";
    }
}

auto encode(const Permutation& p) -> ColoredIntervalSystem {
    const int k = p.k();
    if (k < 1) throw std::invalid_argument("encode needs k >= 1");
    if (!is_bijection(p.image)) throw std::invalid_argument("encode needs a bijection on {1, ..., k}");
    ColoredIntervalSystem s;
    s.k = k;
    for (int j = 1; j <= k; ++j) {
        s.red.push_back({3 * j - 1, 3 * j});
        s.blue.push_back({3 * k + 3 * j - 2, 3 * k + 3 * j - 1});
        s.white.push_back({3 * j - 2, 3 * k + 3 * p.image[j - 1]});
    }
    return s;
}

auto realize(const ColoredIntervalSystem& s) -> ColoredGraph {
    if (3 * s.k > Graph::max_vertices)
        throw CapacityError("realizing k = " + std::to_string(s.k) + " needs " + std::to_string(3 * s.k) +
                            " vertices, over the 32-vertex graph limit; decode the interval system directly instead");
    std::vector<Interval> all;
    all.reserve(3 * s.k);
    all.insert(all.end(), s.red.begin(), s.red.end());
    all.insert(all.end(), s.blue.begin(), s.blue.end());
    all.insert(all.end(), s.white.begin(), s.white.end());
    ColoredGraph cg;
    cg.g = intervals_to_graph(all);
    cg.color.assign(s.k, Color::red);
    cg.color.insert(cg.color.end(), s.k, Color::blue);
    cg.color.insert(cg.color.end(), s.k, Color::white);
    return cg;
}

auto decode(const ColoredGraph& cg) -> Permutation {
    const int n = cg.g.vertex_count();
    if (static_cast<int>(cg.color.size()) != n)
        throw InvalidCodeError("not a valid code: one color per vertex required");
    if (n == 0 || n % 3 != 0)
        throw InvalidCodeError("not a valid code: vertex count must be 3k, k >= 1; got " + std::to_string(n));
    const int k = n / 3;
    std::uint32_t red_mask = 0;
    std::uint32_t blue_mask = 0;
    int whites = 0;
    for (int v = 0; v < n; ++v) {
        if (cg.color[v] == Color::red) red_mask |= 1u << v;
        else if (cg.color[v] == Color::blue) blue_mask |= 1u << v;
        else ++whites;
    }
    if (std::popcount(red_mask) != k || std::popcount(blue_mask) != k || whites != k)
        throw InvalidCodeError("not a valid code: need exactly k vertices of each color");
    std::vector<std::pair<int, int>> degrees;
    for (int v = 0; v < n; ++v)
        if (cg.color[v] == Color::white)
            degrees.emplace_back(std::popcount(cg.g.neighbours(v) & red_mask),
                                 std::popcount(cg.g.neighbours(v) & blue_mask));
    return degrees_to_permutation(k, degrees);
}

auto decode_system(const ColoredIntervalSystem& s) -> Permutation {
    const int k = s.k;
    if (k < 1 || static_cast<int>(s.red.size()) != k || static_cast<int>(s.blue.size()) != k ||
        static_cast<int>(s.white.size()) != k)
        throw InvalidCodeError("not a valid code: need k intervals of each color, k >= 1");
    std::vector<std::pair<int, int>> degrees;
    for (const Interval& w : s.white) {
        int deg_red = 0;
        int deg_blue = 0;
        for (const Interval& r : s.red) deg_red += overlaps(w, r) ? 1 : 0;
        for (const Interval& b : s.blue) deg_blue += overlaps(w, b) ? 1 : 0;
        degrees.emplace_back(deg_red, deg_blue);
    }
    return degrees_to_permutation(k, degrees);
}

auto verify_injectivity(int k) -> bool {
    if (k < 1 || k > 6)
        throw std::invalid_argument("injectivity is checked exhaustively; k must be in [1, 6], got " +
                                    std::to_string(k));
    Permutation p;
    p.image.resize(k);
    std::iota(p.image.begin(), p.image.end(), 1);
    // Distinctness of the codes is labelled distinctness: realize() lays
    // vertices out in a fixed color/index order, which for valid codes is
    // already sorted by degree profile.
    std::unordered_set<std::string> seen;
    do {
        const ColoredGraph cg = realize(encode(p));
        if (decode(cg) != p) return false;
        std::string key;
        for (int v = 0; v < cg.g.vertex_count(); ++v) {
            key += std::to_string(cg.g.neighbours(v));
            key += ',';
        }
        if (!seen.insert(key).second) return false;
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    std::uint64_t expected = 1;
    for (int i = 2; i <= k; ++i) expected *= i;
    return seen.size() == expected;
}

auto colored_system_to_json(const ColoredIntervalSystem& s) -> std::string {
    nlohmann::json doc;
    doc["n"] = 3 * s.k;
    auto& list = doc["intervals"] = nlohmann::json::array();
    auto& colors = doc["colors"] = nlohmann::json::array();
    auto emit = [&](const std::vector<Interval>& family, Color c) {
        for (const Interval& iv : family) {
            list.push_back({iv.lo, iv.hi});
            colors.push_back(std::string(color_name(c)));
        }
    };
    emit(s.red, Color::red);
    emit(s.blue, Color::blue);
    emit(s.white, Color::white);
    return doc.dump();
}

auto colored_system_from_json(std::string_view text) -> ColoredIntervalSystem {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("colored system JSON: not valid JSON");
    if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_array())
        throw ParseError("colored system JSON: expected an object with a \"colors\" array");
    const std::vector<Interval> intervals = intervals_from_json(text);
    const auto& colors = doc["colors"];
    if (colors.size() != intervals.size())
        throw ParseError("colored system JSON: one color per interval required");
    ColoredIntervalSystem s;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (!colors[i].is_string()) throw ParseError("colored system JSON: colors must be strings");
        const std::string name = colors[i].get<std::string>();
        if (name == "red") s.red.push_back(intervals[i]);
        else if (name == "blue") s.blue.push_back(intervals[i]);
        else if (name == "white") s.white.push_back(intervals[i]);
        else throw ParseError("colored system JSON: unknown color \"" + name + "\"");
    }
    if (s.red.empty() || s.red.size() != s.blue.size() || s.red.size() != s.white.size())
        throw ParseError("colored system JSON: need the same nonzero number of red, blue, and white intervals");
    s.k = static_cast<int>(s.red.size());
    return s;
}

}  // namespace ivg
