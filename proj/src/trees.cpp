#include "specfac/trees.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specfac/factor.hpp"

namespace specfac {

namespace {

constexpr std::size_t kMaxTreeOrder = 12;

// adjacency small enough to live on the stack in the hot enumeration loops
struct SmallTree {
    int n = 0;
    std::array<int, kMaxTreeOrder> deg{};
    std::array<std::array<int, kMaxTreeOrder>, kMaxTreeOrder> adj{};

    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(deg[static_cast<std::size_t>(u)]++)] = v;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]++)] = u;
    }
};

// 1 or 2 central vertices by repeated leaf stripping
int tree_centers(const SmallTree& t, int out[2]) {
    if (t.n == 1) { out[0] = 0; return 1; }
    std::array<int, kMaxTreeOrder> deg = t.deg;
    std::array<int, kMaxTreeOrder> layer{};
    int head = 0, tail = 0;
    for (int v = 0; v < t.n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) layer[static_cast<std::size_t>(tail++)] = v;
    int remaining = t.n;
    while (remaining > 2) {
        int stop = tail;
        while (head < stop) {
            int v = layer[static_cast<std::size_t>(head++)];
            --remaining;
            for (int i = 0; i < t.deg[static_cast<std::size_t>(v)]; ++i) {
                int u = t.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
                if (--deg[static_cast<std::size_t>(u)] == 1) layer[static_cast<std::size_t>(tail++)] = u;
            }
        }
    }
    int k = 0;
    for (int i = head; i < tail && k < 2; ++i) out[k++] = layer[static_cast<std::size_t>(i)];
    return k;
}

// AHU parenthesis code of the subtree at v, '('=1 ')'=0, packed MSB-first.
// Returned key is (bit length << 32) | bits; children sort descending by key.
std::uint64_t ahu_subtree(const SmallTree& t, int v, int parent) {
    std::array<std::uint64_t, kMaxTreeOrder> child{};
    int nc = 0;
    for (int i = 0; i < t.deg[static_cast<std::size_t>(v)]; ++i) {
        int u = t.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
        if (u != parent) child[static_cast<std::size_t>(nc++)] = ahu_subtree(t, u, v);
    }
    std::sort(child.begin(), child.begin() + nc, std::greater<std::uint64_t>());
    std::uint64_t bits = 1;
    std::uint64_t len = 1;
    for (int i = 0; i < nc; ++i) {
        const std::uint64_t clen = child[static_cast<std::size_t>(i)] >> 32;
        bits = (bits << clen) | (child[static_cast<std::size_t>(i)] & 0xffffffffu);
        len += clen;
    }
    bits <<= 1;
    ++len;
    return (len << 32) | bits;
}

std::uint64_t rooted_code(const SmallTree& t, int root) {
    return ahu_subtree(t, root, -1) & 0xffffffffu;
}

std::uint64_t canon_code(const SmallTree& t) {
    int c[2];
    int nc = tree_centers(t, c);
    std::uint64_t best = rooted_code(t, c[0]);
    if (nc == 2) best = std::min(best, rooted_code(t, c[1]));
    return best;
}

SmallTree small_from_graph(const Graph& g) {
    SmallTree t;
    t.n = static_cast<int>(g.order());
    for (auto [u, v] : g.edges()) t.add_edge(u, v);
    return t;
}

// O(n) Prüfer decode into a SmallTree
void prufer_decode(const int* seq, int n, SmallTree& t) {
    t = SmallTree{};
    t.n = n;
    std::array<int, kMaxTreeOrder> deg{};
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < n - 2; ++i) ++deg[static_cast<std::size_t>(seq[i])];
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        const int a = seq[i];
        t.add_edge(leaf, a);
        if (--deg[static_cast<std::size_t>(a)] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    t.add_edge(leaf, n - 1);
}

std::vector<std::uint64_t> sorted_unique(std::unordered_set<std::uint64_t>&& s) {
    std::vector<std::uint64_t> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::uint64_t tree_canon_code(const Graph& t) {
    if (t.order() > kMaxTreeOrder)
        throw std::invalid_argument("tree_canon_code: order above 12");
    SmallTree st = small_from_graph(t);
    return canon_code(st);
}

Graph tree_from_canon_code(std::uint64_t code, std::size_t n) {
    Graph g(n);
    std::vector<int> stack{};
    int next = 0;
    for (int bit = static_cast<int>(2 * n) - 1; bit >= 0; --bit) {
        if ((code >> bit) & 1u) {
            const int v = next++;
            if (!stack.empty()) g.add_edge(static_cast<std::size_t>(stack.back()),
                                           static_cast<std::size_t>(v));
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return g;
}

std::vector<std::uint64_t> tree_codes_prufer(std::size_t n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("tree_codes_prufer: 1 <= n <= 10");
    if (n <= 2) {
        SmallTree t;
        t.n = static_cast<int>(n);
        if (n == 2) t.add_edge(0, 1);
        return {canon_code(t)};
    }
    const int len = static_cast<int>(n) - 2;
    std::unordered_set<std::uint64_t> all;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::unordered_set<std::uint64_t> local;
        SmallTree t;
        std::array<int, kMaxTreeOrder> seq{};
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (int first = 0; first < static_cast<int>(n); ++first) {
            seq.fill(0);
            seq[0] = first;
            for (;;) {
                prufer_decode(seq.data(), static_cast<int>(n), t);
                local.insert(canon_code(t));
                int pos = len - 1;          // odometer over the tail digits
                while (pos >= 1 && seq[static_cast<std::size_t>(pos)] == static_cast<int>(n) - 1)
                    seq[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 1) break;
                ++seq[static_cast<std::size_t>(pos)];
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        all.insert(local.begin(), local.end());
    }
    return sorted_unique(std::move(all));
}

std::vector<std::uint64_t> tree_codes_levelseq(std::size_t n) {
    if (n < 1 || n > kMaxTreeOrder)
        throw std::invalid_argument("tree_codes_levelseq: 1 <= n <= 12");
    if (n == 1) {
        SmallTree t;
        t.n = 1;
        return {canon_code(t)};
    }
    // Beyer–Hedetniemi successor over canonical rooted level sequences,
    // filtered to trees whose root realizes the free canonical form.
    std::vector<int> level(n);
    for (std::size_t i = 0; i < n; ++i) level[i] = static_cast<int>(i) + 1;
    std::vector<std::uint64_t> out;
    for (;;) {
        SmallTree t;
        t.n = static_cast<int>(n);
        std::array<int, kMaxTreeOrder + 1> last_at_level{};
        for (std::size_t i = 1; i < n; ++i) {
            t.add_edge(last_at_level[static_cast<std::size_t>(level[i] - 1)], static_cast<int>(i));
            last_at_level[static_cast<std::size_t>(level[i])] = static_cast<int>(i);
        }
        int c[2];
        const int nc = tree_centers(t, c);
        const bool root_is_center = (c[0] == 0) || (nc == 2 && c[1] == 0);
        if (root_is_center && rooted_code(t, 0) == canon_code(t))
            out.push_back(canon_code(t));

        int p = -1;
        for (int i = static_cast<int>(n) - 1; i >= 0; --i)
            if (level[static_cast<std::size_t>(i)] >= 3) { p = i; break; }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[static_cast<std::size_t>(i)] == level[static_cast<std::size_t>(p)] - 1) { q = i; break; }
        for (std::size_t i = static_cast<std::size_t>(p); i < n; ++i)
            level[i] = level[i - static_cast<std::size_t>(p - q)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Graph> enumerate_trees(std::size_t n) {
    if (n < 1 || n > kMaxTreeOrder)
        throw std::invalid_argument("enumerate_trees: 1 <= n <= 12");
    std::vector<std::uint64_t> codes = tree_codes_levelseq(n);
    std::vector<Graph> trees;
    trees.reserve(codes.size());
    for (auto code : codes) trees.push_back(tree_from_canon_code(code, n));
    // canonical report order: degree sequence, then canonical code
    std::vector<std::size_t> idx(trees.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::vector<std::size_t>> degseq(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t v = 0; v < n; ++v) degseq[i].push_back(trees[i].degree(v));
        std::sort(degseq[i].rbegin(), degseq[i].rend());
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (degseq[a] != degseq[b]) return degseq[a] > degseq[b];
        return codes[a] < codes[b];
    });
    std::vector<Graph> out;
    out.reserve(trees.size());
    for (std::size_t i : idx) out.push_back(std::move(trees[i]));
    return out;
}

TreeClassification in_tree_family(const Graph& t, const FamilyParams& p, bool verbose) {
    if (!is_tree(t))
        throw std::invalid_argument("in_tree_family: input is not a tree");
    if (t.order() > 20)
        throw std::invalid_argument("in_tree_family: capped at n <= 20");
    TreeClassification out;
    if (auto va = wolf_violation(t, p, Strategy::Pruned))
        out.violation_a = va->s;
    for (auto [u, v] : t.edges()) {
        Graph forest = delete_edge(t, static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        auto vb = wolf_violation(forest, p, Strategy::Pruned);
        if (!vb) {
            if (!out.nonwitnessed_edge) out.nonwitnessed_edge = std::make_pair(u, v);
            if (!verbose) break;
        } else if (verbose) {
            out.edge_witnesses.push_back(EdgeWitness{{u, v}, vb->s});
        }
    }
    out.member = !out.violation_a && !out.nonwitnessed_edge;
    return out;
}

} // namespace specfac
