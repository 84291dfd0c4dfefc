#include "ivg/graph6.hpp"

#include <string>

#include "ivg/errors.hpp"

namespace ivg {

auto to_graph6(const Graph& g) -> std::string {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0;
    int filled = 0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            group = group << 1 | (g.has_edge(j, i) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled != 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

auto from_graph6(std::string_view text) -> Graph {
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte out of range [63, 126]");
    const int n = text[0] - 63;
    if (n == 63) throw ParseError("graph6: long vertex-count header is not supported");
    if (n > Graph::max_vertices)
        throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the 32-vertex limit");
    const int tri = n * (n - 1) / 2;
    const std::size_t expect = 1 + (tri + 5) / 6;
    if (text.size() != expect)
        throw ParseError("graph6: expected " + std::to_string(expect) + " bytes for n = " +
                         std::to_string(n) + ", got " + std::to_string(text.size()));
    Graph g(n);
    int bit = 0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            int group = text[1 + bit / 6] - 63;
            if (group >> (5 - bit % 6) & 1) g.add_edge(j, i);
            ++bit;
        }
    // Padding must be zero or the byte stream is ambiguous.
    if (tri % 6 != 0) {
        int last = text.back() - 63;
        if ((last & ((1 << (6 - tri % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace ivg
