#include "specfac/graph.hpp"

#include <bit>
#include <queue>

namespace specfac {

std::size_t Graph::degree(std::size_t v) const {
    const std::uint64_t* r = row(v);
    std::size_t d = 0;
    for (std::size_t i = 0; i < row_words_; ++i) d += static_cast<std::size_t>(std::popcount(r[i]));
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<int> Graph::row_indices(std::size_t v) const {
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w < row_words_; ++w) {
        std::uint64_t x = r[w];
        while (x) {
            out.push_back(static_cast<int>(w * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (int v : row_indices(u))
            if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<int>(u), v);
    return out;
}

Graph make_family(FamilyKind kind, std::size_t n) {
    if (kind == FamilyKind::Cycle && n < 3)
        throw std::invalid_argument("make_family: cycle needs n >= 3");
    if (n < 1) throw std::invalid_argument("make_family: n >= 1 required");
    Graph g(n);
    switch (kind) {
    case FamilyKind::Complete:
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
        break;
    case FamilyKind::Star:
        for (std::size_t v = 1; v < n; ++v) g.add_edge(0, v);
        break;
    case FamilyKind::Path:
        for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        break;
    case FamilyKind::Cycle:
        for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        g.add_edge(n - 1, 0);
        break;
    case FamilyKind::Empty:
        break;
    }
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    Graph g(n1 + n2);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    for (std::size_t u = 0; u < n1; ++u)
        for (std::size_t v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order();
    Graph g(n1 + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    return g;
}

Graph delete_vertices(const Graph& g, const DynBitset& s) {
    const std::size_t n = g.order();
    if (s.size() != n) throw std::out_of_range("delete_vertices: set sized for a different graph");
    std::vector<int> newid(n, -1);
    std::size_t m = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (!s.test(v)) newid[v] = static_cast<int>(m++);
    Graph h(m);
    for (auto [u, v] : g.edges())
        if (newid[u] >= 0 && newid[v] >= 0)
            h.add_edge(static_cast<std::size_t>(newid[u]), static_cast<std::size_t>(newid[v]));
    return h;
}

Graph delete_edge(const Graph& g, std::size_t u, std::size_t v) {
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw std::invalid_argument("delete_edge: edge not present");
    Graph h = g;
    h.remove_edge(u, v);
    return h;
}

std::size_t isolated_count(const Graph& g) {
    std::size_t c = 0;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) ++c;
    return c;
}

std::vector<int> component_ids(const Graph& g, std::size_t* count) {
    const std::size_t n = g.order();
    std::vector<int> id(n, -1);
    int next = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (id[s] >= 0) continue;
        id[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (int u : g.row_indices(v)) {
                if (id[static_cast<std::size_t>(u)] < 0) {
                    id[static_cast<std::size_t>(u)] = next;
                    stack.push_back(static_cast<std::size_t>(u));
                }
            }
        }
        ++next;
    }
    if (count) *count = static_cast<std::size_t>(next);
    return id;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::size_t c = 0;
    component_ids(g, &c);
    return c == 1;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.edge_count() == g.order() - 1;
}

DegreeStats degree_stats(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw std::invalid_argument("degree_stats: empty graph");
    std::size_t mind = n, maxd = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t d = g.degree(v);
        if (d < mind) mind = d;
        if (d > maxd) maxd = d;
    }
    std::size_t comps = 0;
    component_ids(g, &comps);
    return DegreeStats{mind, maxd, comps == 1, comps};
}

} // namespace specfac
