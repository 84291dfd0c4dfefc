#include "ivg/recognizer.hpp"

#include <algorithm>
#include <bit>

namespace ivg {

namespace {

auto full_mask(int n) -> std::uint32_t { return n == 32 ? ~0u : (1u << n) - 1u; }

// Vertices reachable from `start` inside `allowed` (which must contain it).
auto flood(const Graph& g, int start, std::uint32_t allowed) -> std::uint32_t {
    std::uint32_t reached = 1u << start;
    std::uint32_t frontier = reached;
    while (frontier != 0) {
        std::uint32_t grow = 0;
        for (std::uint32_t m = frontier; m != 0; m &= m - 1)
            grow |= g.neighbours(std::countr_zero(m));
        frontier = grow & allowed & ~reached;
        reached |= frontier;
    }
    return reached;
}

// v sees both p and w, p and w are non-adjacent.  A shortest p-w path that
// avoids the rest of N[v] closes into an induced cycle through v; returns it
// as v, p, ..., w, or empty when no such path exists for this triple.
auto cycle_through(const Graph& g, int v, int p, int w) -> std::vector<int> {
    std::uint32_t allowed = full_mask(g.vertex_count()) & ~(g.neighbours(v) | 1u << v);
    allowed |= 1u << p | 1u << w;
    std::array<int, Graph::max_vertices> parent;
    parent.fill(-1);
    std::uint32_t seen = 1u << p;
    std::vector<int> queue{p};
    for (std::size_t qi = 0; qi < queue.size() && (seen >> w & 1u) == 0; ++qi) {
        for (std::uint32_t m = g.neighbours(queue[qi]) & allowed & ~seen; m != 0; m &= m - 1) {
            const int y = std::countr_zero(m);
            parent[y] = queue[qi];
            seen |= 1u << y;
            queue.push_back(y);
        }
    }
    if ((seen >> w & 1u) == 0) return {};
    std::vector<int> cycle;
    for (int x = w; x != -1; x = parent[x]) cycle.push_back(x);
    cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());  // v, p, ..., w
    return cycle;
}

auto find_chordless_cycle(const Graph& g, int v, int p, int w) -> std::vector<int> {
    auto cycle = cycle_through(g, v, p, w);
    if (!cycle.empty()) return cycle;
    // The triple that tripped the elimination test need not span a cycle
    // itself, but in a non-chordal graph some triple does.
    const int n = g.vertex_count();
    for (int v2 = 0; v2 < n; ++v2)
        for (std::uint32_t pm = g.neighbours(v2); pm != 0; pm &= pm - 1) {
            const int p2 = std::countr_zero(pm);
            for (std::uint32_t wm = pm & (pm - 1); wm != 0; wm &= wm - 1) {
                const int w2 = std::countr_zero(wm);
                if (g.has_edge(p2, w2)) continue;
                cycle = cycle_through(g, v2, p2, w2);
                if (!cycle.empty()) return cycle;
            }
        }
    return {};
}

}  // namespace

auto lex_bfs_order(const Graph& g) -> std::vector<int> {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::array<std::uint32_t, Graph::max_vertices> label{};
    std::uint32_t pending = full_mask(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (std::uint32_t m = pending; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (pick < 0 || label[v] > label[pick]) pick = v;
        }
        order.push_back(pick);
        pending &= ~(1u << pick);
        // Earlier visits must dominate later ones, so step `s` contributes
        // the (31 - s)-th bit.
        for (std::uint32_t m = g.neighbours(pick) & pending; m != 0; m &= m - 1)
            label[std::countr_zero(m)] |= 1u << (31 - step);
    }
    return order;
}

auto is_chordal(const Graph& g) -> ChordalCheck {
    const int n = g.vertex_count();
    const std::vector<int> visit = lex_bfs_order(g);
    std::vector<int> elim(visit.rbegin(), visit.rend());
    std::array<int, Graph::max_vertices> pos{};
    for (int i = 0; i < n; ++i) pos[elim[i]] = i;
    ChordalCheck out;
    for (int i = 0; i < n; ++i) {
        const int v = elim[i];
        std::uint32_t later = 0;
        for (std::uint32_t m = g.neighbours(v); m != 0; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (pos[u] > i) later |= 1u << u;
        }
        if (later == 0) continue;
        int p = -1;
        for (std::uint32_t m = later; m != 0; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (p < 0 || pos[u] < pos[p]) p = u;
        }
        // For a perfect elimination ordering the later neighbours of v must
        // form a clique; it is enough to check them against the first one.
        const std::uint32_t missing = later & ~(1u << p) & ~g.neighbours(p);
        if (missing != 0) {
            out.cycle = find_chordless_cycle(g, v, p, std::countr_zero(missing));
            return out;
        }
    }
    out.chordal = true;
    out.elimination_order = std::move(elim);
    return out;
}

auto has_asteroidal_triple(const Graph& g) -> std::optional<std::array<int, 3>> {
    const int n = g.vertex_count();
    const std::uint32_t full = full_mask(n);
    // comp[w][v]: which component of the graph minus N[w] holds v, -1 for
    // the removed vertices.
    std::array<std::array<std::int8_t, Graph::max_vertices>, Graph::max_vertices> comp;
    for (int w = 0; w < n; ++w) {
        comp[w].fill(-1);
        std::uint32_t avail = full & ~(g.neighbours(w) | 1u << w);
        std::int8_t id = 0;
        while (avail != 0) {
            const std::uint32_t piece = flood(g, std::countr_zero(avail), avail);
            for (std::uint32_t m = piece; m != 0; m &= m - 1) comp[w][std::countr_zero(m)] = id;
            avail &= ~piece;
            ++id;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (comp[c][a] >= 0 && comp[c][a] == comp[c][b] &&  //
                    comp[b][a] >= 0 && comp[b][a] == comp[b][c] &&  //
                    comp[a][b] >= 0 && comp[a][b] == comp[a][c])
                    return std::array{a, b, c};
    return std::nullopt;
}

auto is_interval(const Graph& g) -> RecognitionResult {
    RecognitionResult r;
    ChordalCheck chordal = is_chordal(g);
    if (!chordal.chordal) {
        r.witness_kind = WitnessKind::chordless_cycle;
        r.witness = std::move(chordal.cycle);
        return r;
    }
    if (auto triple = has_asteroidal_triple(g)) {
        r.witness_kind = WitnessKind::asteroidal_triple;
        r.witness.assign(triple->begin(), triple->end());
        return r;
    }
    r.interval = true;
    r.witness_kind = WitnessKind::elimination_ordering;
    r.witness = std::move(chordal.elimination_order);
    return r;
}

auto is_valid_elimination_ordering(const Graph& g, std::span<const int> order) -> bool {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::uint32_t seen = 0;
    for (int v : order) {
        if (v < 0 || v >= n || (seen >> v & 1u) != 0) return false;
        seen |= 1u << v;
    }
    std::array<int, Graph::max_vertices> pos{};
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        std::uint32_t later = 0;
        for (std::uint32_t m = g.neighbours(order[i]); m != 0; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (pos[u] > i) later |= 1u << u;
        }
        for (std::uint32_t m = later; m != 0; m &= m - 1) {
            const int u = std::countr_zero(m);
            if ((later & ~(1u << u) & ~g.neighbours(u)) != 0) return false;
        }
    }
    return true;
}

auto is_chordless_cycle(const Graph& g, std::span<const int> cycle) -> bool {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    std::uint32_t seen = 0;
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count() || (seen >> v & 1u) != 0) return false;
        seen |= 1u << v;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

auto is_asteroidal_triple(const Graph& g, int a, int b, int c) -> bool {
    const int n = g.vertex_count();
    if (a == b || a == c || b == c) return false;
    for (int v : {a, b, c})
        if (v < 0 || v >= n) return false;
    const std::uint32_t full = full_mask(n);
    auto joined_avoiding = [&](int x, int y, int z) {
        const std::uint32_t allowed = full & ~(g.neighbours(z) | 1u << z);
        if ((allowed >> x & 1u) == 0 || (allowed >> y & 1u) == 0) return false;
        return (flood(g, x, allowed) >> y & 1u) != 0;
    };
    return joined_avoiding(a, b, c) && joined_avoiding(a, c, b) && joined_avoiding(b, c, a);
}

}  // namespace ivg
