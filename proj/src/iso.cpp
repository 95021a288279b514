#include "specfac/iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace specfac {

namespace {

// 1-dimensional color refinement; colors are dense ints, stable across the
// two graphs because the recoloring map is shared.
std::vector<int> refine_colors(const Graph& g, std::vector<int> color, int rounds) {
    const std::size_t n = g.order();
    for (int round = 0; round < rounds; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next_id;
        std::vector<int> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> sig;
            for (int u : g.row_indices(v)) sig.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(color[v], std::move(sig));
            auto it = next_id.find(key);
            if (it == next_id.end())
                it = next_id.emplace(std::move(key), static_cast<int>(next_id.size())).first;
            next[v] = it->second;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct Matcher {
    const Graph& g1;
    const Graph& g2;
    const std::vector<int>& c1;
    const std::vector<int>& c2;
    std::vector<int> order;    // g1 vertices in matching order
    std::vector<int> map12;    // g1 -> g2, -1 unset
    std::vector<bool> used2;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const std::size_t v = static_cast<std::size_t>(order[depth]);
        for (std::size_t w = 0; w < g2.order(); ++w) {
            if (used2[w] || c2[w] != c1[v]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const std::size_t a = static_cast<std::size_t>(order[d]);
                if (g1.adjacent(v, a) != g2.adjacent(w, static_cast<std::size_t>(map12[a])))
                    ok = false;
            }
            if (!ok) continue;
            map12[v] = static_cast<int>(w);
            used2[w] = true;
            if (extend(depth + 1)) return true;
            used2[w] = false;
            map12[v] = -1;
        }
        return false;
    }
};

} // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2, std::size_t max_order) {
    if (g1.order() > max_order || g2.order() > max_order)
        throw std::invalid_argument("is_isomorphic: order exceeds the configured cap");
    const std::size_t n = g1.order();
    if (n != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    if (n == 0) return true;

    // shared initial coloring by degree
    std::vector<int> c1(n), c2(n);
    {
        std::map<std::size_t, int> deg_id;
        for (std::size_t v = 0; v < n; ++v) deg_id.emplace(g1.degree(v), 0);
        for (std::size_t v = 0; v < n; ++v) deg_id.emplace(g2.degree(v), 0);
        int next = 0;
        for (auto& kv : deg_id) kv.second = next++;
        for (std::size_t v = 0; v < n; ++v) c1[v] = deg_id[g1.degree(v)];
        for (std::size_t v = 0; v < n; ++v) c2[v] = deg_id[g2.degree(v)];
    }
    // joint refinement: run rounds on the disjoint union so color ids agree
    {
        Graph both = disjoint_union(g1, g2);
        std::vector<int> c(2 * n);
        for (std::size_t v = 0; v < n; ++v) { c[v] = c1[v]; c[n + v] = c2[v]; }
        c = refine_colors(both, std::move(c), static_cast<int>(n));
        for (std::size_t v = 0; v < n; ++v) { c1[v] = c[v]; c2[v] = c[n + v]; }
    }
    {
        std::vector<int> h1 = c1, h2 = c2;
        std::sort(h1.begin(), h1.end());
        std::sort(h2.begin(), h2.end());
        if (h1 != h2) return false;
    }

    // match rarest colors first
    std::vector<int> freq(2 * n, 0);
    for (std::size_t v = 0; v < n; ++v) ++freq[static_cast<std::size_t>(c1[v])];
    Matcher m{g1, g2, c1, c2, {}, std::vector<int>(n, -1), std::vector<bool>(n, false)};
    m.order.resize(n);
    for (std::size_t v = 0; v < n; ++v) m.order[v] = static_cast<int>(v);
    std::sort(m.order.begin(), m.order.end(), [&](int a, int b) {
        int fa = freq[static_cast<std::size_t>(c1[static_cast<std::size_t>(a)])];
        int fb = freq[static_cast<std::size_t>(c1[static_cast<std::size_t>(b)])];
        if (fa != fb) return fa < fb;
        return a < b;
    });
    return m.extend(0);
}

} // namespace specfac
