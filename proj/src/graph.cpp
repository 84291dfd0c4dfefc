#include "ivg/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "ivg/errors.hpp"

namespace ivg {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for " +
                                    std::to_string(n) + " vertices");
}

// Ordered partition of the vertex set, one bit mask per cell.  Fixed-size so
// the search below never touches the heap.
struct Partition {
    std::array<std::uint32_t, Graph::max_vertices> cells{};
    int size = 0;
};

// Splits every cell by how many neighbours each member has in each current
// cell, repeating until stable.  The resulting cell order depends only on
// those counts, never on vertex labels, so relabelling a graph permutes the
// cell contents but not the cell sequence.
void refine(std::span<const std::uint32_t> rows, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        Partition next;
        for (int ci = 0; ci < p.size; ++ci) {
            std::uint32_t cell = p.cells[ci];
            if (std::popcount(cell) <= 1) {
                next.cells[next.size++] = cell;
                continue;
            }
            struct Member {
                std::array<std::uint8_t, Graph::max_vertices> sig;
                int v;
            };
            std::array<Member, Graph::max_vertices> members;
            int count = 0;
            for (std::uint32_t m = cell; m != 0; m &= m - 1) {
                Member& e = members[count++];
                e.v = std::countr_zero(m);
                e.sig = {};
                for (int cj = 0; cj < p.size; ++cj)
                    e.sig[cj] = static_cast<std::uint8_t>(std::popcount(rows[e.v] & p.cells[cj]));
            }
            std::sort(members.begin(), members.begin() + count,
                      [](const Member& a, const Member& b) { return a.sig < b.sig; });
            int groups = 0;
            int start = 0;
            for (int i = 1; i <= count; ++i) {
                if (i < count && members[i].sig == members[start].sig) continue;
                std::uint32_t group = 0;
                for (int j = start; j < i; ++j) group |= 1u << members[j].v;
                next.cells[next.size++] = group;
                ++groups;
                start = i;
            }
            if (groups > 1) changed = true;
        }
        p = next;
    }
}

// Branch and bound over orderings compatible with the refined partition.  A
// candidate ordering is graded column by column: the block for position i is
// the i-bit string x(0,i)..x(i-1,i), first bit most significant, so comparing
// blocks position-wise is exactly comparing the concatenated bit string.
struct Canonicalizer {
    std::span<const std::uint32_t> rows;
    int n = 0;
    bool have_best = false;
    std::array<std::uint32_t, Graph::max_vertices> best{};

    void run() {
        Partition root;
        root.cells[0] = n == 32 ? ~0u : (1u << n) - 1u;
        root.size = 1;
        search(root);
    }

    void search(Partition p) {
        refine(rows, p);
        std::array<int, Graph::max_vertices> ord;
        std::array<std::uint32_t, Graph::max_vertices> blocks;
        int fixed = 0;
        while (fixed < p.size && std::popcount(p.cells[fixed]) == 1) {
            ord[fixed] = std::countr_zero(p.cells[fixed]);
            ++fixed;
        }
        // Only the leading run of singleton cells has fully determined
        // columns; grade those against the incumbent.
        int cmp = 0;
        for (int i = 0; i < fixed; ++i) {
            std::uint32_t b = 0;
            for (int j = 0; j < i; ++j) b = b << 1 | (rows[ord[i]] >> ord[j] & 1u);
            blocks[i] = b;
            if (have_best && cmp == 0) {
                if (b > best[i]) return;
                if (b < best[i]) cmp = -1;
            }
        }
        if (fixed == n) {
            if (!have_best || cmp < 0) {
                best = blocks;
                have_best = true;
            }
            return;
        }
        // Branch on the first non-singleton cell.  Members whose rows agree
        // outside the pair (twins) lead to identical completions, so one
        // representative per twin class is enough.
        std::uint32_t cell = p.cells[fixed];
        std::uint32_t done = 0;
        for (std::uint32_t m = cell; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            if (done >> v & 1u) continue;
            for (std::uint32_t t = cell; t != 0; t &= t - 1) {
                int u = std::countr_zero(t);
                if ((rows[v] & ~(1u << u)) == (rows[u] & ~(1u << v))) done |= 1u << u;
            }
            Partition child;
            for (int ci = 0; ci < p.size; ++ci) {
                if (ci == fixed) {
                    child.cells[child.size++] = 1u << v;
                    child.cells[child.size++] = cell & ~(1u << v);
                } else {
                    child.cells[child.size++] = p.cells[ci];
                }
            }
            search(child);
        }
    }
};

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count must be in [0, 32]; got " + std::to_string(n));
}

auto Graph::edge_count() const -> int {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
}

auto Graph::add_edge(int u, int v) -> void {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
    rows_[u] |= 1u << v;
    rows_[v] |= 1u << u;
}

auto Graph::has_edge(int u, int v) const -> bool {
    check_vertex(u, n_);
    check_vertex(v, n_);
    return (rows_[u] >> v & 1u) != 0;
}

auto Graph::degree(int v) const -> int {
    check_vertex(v, n_);
    return std::popcount(rows_[v]);
}

auto CanonicalForm::packed() const -> std::uint64_t {
    if (n > 11)
        throw CapacityError("packed canonical key holds at most 55 triangle bits (n <= 11); got n = " +
                            std::to_string(n));
    // 55 bits leave the bottom 9 of bits[0] free; the count needs 6.
    return bits[0] | n;
}

auto CanonicalForm::from_packed(std::uint64_t key) -> CanonicalForm {
    CanonicalForm form;
    form.n = static_cast<std::uint8_t>(key & 63u);
    if (form.n > 11)
        throw CapacityError("packed canonical key holds at most 55 triangle bits (n <= 11); got n = " +
                            std::to_string(form.n));
    form.bits[0] = key & ~std::uint64_t{63};
    return form;
}

auto canonicalize(const Graph& g) -> CanonicalForm {
    const int n = g.vertex_count();
    CanonicalForm form;
    form.n = static_cast<std::uint8_t>(n);
    if (n == 0) return form;
    Canonicalizer search{g.rows(), n};
    search.run();
    int bit = 0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            if (search.best[i] >> (i - 1 - j) & 1u) form.bits[bit >> 6] |= 1ull << (63 - (bit & 63));
            ++bit;
        }
    return form;
}

auto is_isomorphic(const Graph& a, const Graph& b) -> bool {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonicalize(a) == canonicalize(b);
}

auto graph_of_canonical_form(const CanonicalForm& form) -> Graph {
    Graph g(form.n);
    int bit = 0;
    for (int i = 1; i < form.n; ++i)
        for (int j = 0; j < i; ++j) {
            if (form.bits[bit >> 6] >> (63 - (bit & 63)) & 1ull) g.add_edge(j, i);
            ++bit;
        }
    return g;
}

}  // namespace ivg
