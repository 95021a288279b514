#include "specfac/factor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "specfac/trees.hpp"

namespace specfac {

namespace {

DynBitset isolated_after_removal(const Graph& g, const DynBitset& s) {
    DynBitset iso(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        if (!s.test(v) && g.neighborhood_inside(v, s)) iso.set(v);
    return iso;
}

Certificate make_certificate(const Graph& g, const FamilyParams& p, const DynBitset& s) {
    Certificate c;
    c.s = s;
    c.isolated = isolated_after_removal(g, s);
    c.lhs = p.r * static_cast<std::int64_t>(c.isolated.count());
    c.rhs = p.k * static_cast<std::int64_t>(s.count());
    return c;
}

struct BestSet {
    bool found = false;
    DynBitset s;
    std::size_t size = 0;

    void offer(const DynBitset& cand) {
        const std::size_t cs = cand.count();
        if (!found || cs < size || (cs == size && DynBitset::lex_less(cand, s))) {
            found = true;
            s = cand;
            size = cs;
        }
    }
};

std::optional<Certificate> wolf_naive(const Graph& g, const FamilyParams& p) {
    const std::size_t n = g.order();
    if (n > 24) throw std::invalid_argument("wolf_violation: naive strategy capped at n <= 24");
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    BestSet best;
    for (std::uint64_t mask = 0;; ++mask) {
        if (mask != full) {   // S = V(G) can never violate
            std::int64_t iso = 0;
            DynBitset s(n);
            for (std::size_t v = 0; v < n; ++v)
                if ((mask >> v) & 1u) s.set(v);
            for (std::size_t v = 0; v < n; ++v)
                if (!s.test(v) && g.neighborhood_inside(v, s)) ++iso;
            if (p.r * iso > p.k * static_cast<std::int64_t>(s.count())) best.offer(s);
        }
        if (mask == full) break;
    }
    if (!best.found) return std::nullopt;
    return make_certificate(g, p, best.s);
}

// DFS over independent sets in ascending vertex order. S = N(I) only ever
// grows along a branch, which justifies both prunes below.
struct PrunedSearch {
    const Graph& g;
    const FamilyParams& p;
    std::size_t n;
    DynBitset in_i;
    DynBitset nbrs;
    std::size_t i_size = 0;
    BestSet best;

    PrunedSearch(const Graph& g_, const FamilyParams& p_)
        : g(g_), p(p_), n(g_.order()), in_i(g_.order()), nbrs(g_.order()) {}

    void dfs(std::size_t from) {
        const std::int64_t ns = static_cast<std::int64_t>(nbrs.count());
        if (i_size >= 1 && p.r * static_cast<std::int64_t>(i_size) > p.k * ns) {
            best.offer(nbrs);
            return;    // deeper nodes can only repeat or enlarge N(I)
        }
        if (best.found && nbrs.count() > best.size) return;
        std::size_t remaining = 0;
        for (std::size_t v = from; v < n; ++v)
            if (!in_i.test(v) && !nbrs.test(v)) ++remaining;
        // even if N(I) froze, lhs could reach at most r(|I| + remaining)
        if (p.k * ns >= p.r * static_cast<std::int64_t>(i_size + remaining)) return;
        for (std::size_t v = from; v < n; ++v) {
            if (in_i.test(v) || nbrs.test(v)) continue;
            DynBitset saved_nbrs = nbrs;
            in_i.set(v);
            ++i_size;
            for (int u : g.row_indices(v)) nbrs.set(static_cast<std::size_t>(u));
            dfs(v + 1);
            nbrs = saved_nbrs;
            in_i.reset(v);
            --i_size;
        }
    }
};

std::optional<Certificate> wolf_pruned(const Graph& g, const FamilyParams& p) {
    PrunedSearch search(g, p);
    search.dfs(0);
    if (!search.best.found) return std::nullopt;
    return make_certificate(g, p, search.best.s);
}

// ---- brute-force factor oracle -------------------------------------------

constexpr int kTreeCap = 10000;

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Contract/delete enumeration of spanning trees over a local edge list.
// Binary branching on a fixed edge order visits each spanning tree once.
struct SpanningTreeEnum {
    const std::vector<std::pair<int, int>>& edges;
    int nverts;
    int enumerated = 0;
    bool capped = false;
    std::vector<int> chosen;

    template <typename Visit>
    bool run(Visit&& visit) {   // returns true once visit accepts a tree
        Dsu dsu(nverts);
        return rec(0, dsu, nverts, visit);
    }

    template <typename Visit>
    bool rec(std::size_t i, Dsu& dsu, int comps, Visit& visit) {
        if (comps == 1) {
            if (enumerated >= kTreeCap) {
                capped = true;
                return false;
            }
            ++enumerated;
            return visit(chosen);
        }
        if (i == edges.size()) return false;
        if (capped) return false;
        auto [u, v] = edges[i];
        if (dsu.find(u) == dsu.find(v)) return rec(i + 1, dsu, comps, visit);
        {
            Dsu with = dsu;
            with.merge(u, v);
            chosen.push_back(static_cast<int>(i));
            if (rec(i + 1, with, comps - 1, visit)) return true;
            chosen.pop_back();
        }
        // skipping the edge is viable only if the rest still connects
        {
            Dsu probe = dsu;
            int c = comps;
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (probe.merge(edges[j].first, edges[j].second)) --c;
            if (c == 1) return rec(i + 1, dsu, comps, visit);
        }
        return false;
    }
};

struct MaskGraph {
    std::vector<int> verts;                       // original labels, ascending
    std::vector<std::pair<int, int>> edges;       // local labels
};

MaskGraph induced(const Graph& g, std::uint32_t mask) {
    MaskGraph mg;
    std::vector<int> local(g.order(), -1);
    for (std::size_t v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1u) {
            local[v] = static_cast<int>(mg.verts.size());
            mg.verts.push_back(static_cast<int>(v));
        }
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (local[v] < 0) continue;
        for (int u : g.row_indices(v))
            if (local[static_cast<std::size_t>(u)] > local[v])
                mg.edges.emplace_back(local[v], local[static_cast<std::size_t>(u)]);
    }
    return mg;
}

bool mask_connected(const Graph& g, std::uint32_t mask) {
    if (mask == 0) return false;
    std::uint32_t seen = mask & (~mask + 1);   // lowest bit
    for (;;) {
        std::uint32_t grow = seen;
        std::uint32_t todo = seen;
        while (todo) {
            int v = std::countr_zero(todo);
            todo &= todo - 1;
            for (int u : g.row_indices(static_cast<std::size_t>(v)))
                grow |= (std::uint32_t{1} << u) & mask;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == mask;
}

// Hamiltonian cycle through all vertices of the mask, by backtracking.
bool hamiltonian_cycle(const MaskGraph& mg, std::vector<int>& order_out) {
    const int b = static_cast<int>(mg.verts.size());
    if (b < 3) return false;
    std::vector<std::vector<bool>> adj(b, std::vector<bool>(b, false));
    for (auto [u, v] : mg.edges) adj[u][v] = adj[v][u] = true;
    std::vector<int> path{0};
    std::vector<bool> used(b, false);
    used[0] = true;
    std::function<bool()> go = [&]() -> bool {
        if (static_cast<int>(path.size()) == b)
            return adj[path.back()][0];
        for (int v = 1; v < b; ++v) {
            if (used[v] || !adj[path.back()][v]) continue;
            used[v] = true;
            path.push_back(v);
            if (go()) return true;
            path.pop_back();
            used[v] = false;
        }
        return false;
    };
    if (!go()) return false;
    order_out = path;
    return true;
}

// Family membership for a concrete spanning tree, cached per canonical form.
// Thread-local so corpus sweeps stay lock-free; classifications are
// deterministic, so duplicated work across threads is harmless.
bool tree_is_member(const Graph& tree, const FamilyParams& p) {
    thread_local std::unordered_map<std::uint64_t, bool> cache;
    thread_local std::int64_t cache_k = -1, cache_r = -1;
    if (cache_k != p.k || cache_r != p.r) {
        cache.clear();
        cache_k = p.k;
        cache_r = p.r;
    }
    const std::uint64_t code = tree_canon_code(tree);
    auto it = cache.find(code);
    if (it != cache.end()) return it->second;
    const bool member = in_tree_family(tree, p).member;
    cache.emplace(code, member);
    return member;
}

struct BlockPayload {
    FactorWitness::Block block;
};

// A mask is admissible iff its induced subgraph carries an allowed odd
// Hamiltonian cycle or a spanning tree inside T_{k/r}.
std::optional<BlockPayload> admissible_block(const Graph& g, std::uint32_t mask,
                                             const FamilyParams& p,
                                             const std::vector<int>& allowed) {
    if (!mask_connected(g, mask)) return std::nullopt;
    MaskGraph mg = induced(g, mask);
    const int b = static_cast<int>(mg.verts.size());

    if (std::find(allowed.begin(), allowed.end(), b) != allowed.end()) {
        std::vector<int> order;
        if (hamiltonian_cycle(mg, order)) {
            FactorWitness::Block blk;
            blk.kind = FactorWitness::Block::Kind::Cycle;
            blk.vertices = mg.verts;
            for (int i = 0; i < b; ++i)
                blk.edges.emplace_back(mg.verts[static_cast<std::size_t>(order[i])],
                                       mg.verts[static_cast<std::size_t>(order[(i + 1) % b])]);
            return BlockPayload{std::move(blk)};
        }
    }

    SpanningTreeEnum st{mg.edges, b, 0, false, {}};
    std::vector<int> member_edges;
    bool found = st.run([&](const std::vector<int>& chosen) {
        Graph tree(static_cast<std::size_t>(b));
        for (int ei : chosen)
            tree.add_edge(static_cast<std::size_t>(mg.edges[static_cast<std::size_t>(ei)].first),
                          static_cast<std::size_t>(mg.edges[static_cast<std::size_t>(ei)].second));
        if (!tree_is_member(tree, p)) return false;
        member_edges = chosen;
        return true;
    });
    if (st.capped && !found)
        throw std::runtime_error("brute_force_factor: block exceeded the spanning-tree "
                                 "enumeration cap and is indeterminate");
    if (!found) return std::nullopt;
    FactorWitness::Block blk;
    blk.kind = FactorWitness::Block::Kind::Tree;
    blk.vertices = mg.verts;
    for (int ei : member_edges)
        blk.edges.emplace_back(mg.verts[static_cast<std::size_t>(mg.edges[static_cast<std::size_t>(ei)].first)],
                               mg.verts[static_cast<std::size_t>(mg.edges[static_cast<std::size_t>(ei)].second)]);
    return BlockPayload{std::move(blk)};
}

} // namespace

std::optional<Certificate> wolf_violation(const Graph& g, const FamilyParams& p,
                                          Strategy strategy) {
    if (strategy == Strategy::Naive) return wolf_naive(g, p);
    return wolf_pruned(g, p);
}

FactorVerdict has_factor(const Graph& g, const FamilyParams& p, Strategy strategy) {
    auto cert = wolf_violation(g, p, strategy);
    if (cert) return FactorVerdict{false, std::move(cert)};
    return FactorVerdict{true, std::nullopt};
}

std::optional<FactorWitness> brute_force_factor(const Graph& g, const FamilyParams& p) {
    const std::size_t n = g.order();
    if (n > 10) throw std::invalid_argument("brute_force_factor: capped at n <= 10");
    if (n == 0) return FactorWitness{};

    const std::vector<int> allowed = allowed_cycle_lengths(p);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;

    // -1 unknown, 0 inadmissible, 1 admissible
    std::vector<signed char> adm(full + 1, -1);
    std::vector<std::optional<BlockPayload>> payload(full + 1);
    auto admissible = [&](std::uint32_t mask) -> bool {
        if (adm[mask] < 0) {
            payload[mask] = admissible_block(g, mask, p, allowed);
            adm[mask] = payload[mask].has_value() ? 1 : 0;
        }
        return adm[mask] == 1;
    };

    std::vector<signed char> can(full + 1, 0);
    std::vector<std::uint32_t> choice(full + 1, 0);
    can[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        // submasks of mask containing its lowest vertex
        for (std::uint32_t rest = mask ^ low;;) {
            const std::uint32_t sub = rest | low;
            if (can[mask ^ sub] && admissible(sub)) {
                can[mask] = 1;
                choice[mask] = sub;
                break;
            }
            if (rest == 0) break;
            rest = (rest - 1) & (mask ^ low);
        }
    }
    if (!can[full]) return std::nullopt;

    FactorWitness w;
    for (std::uint32_t mask = full; mask != 0;) {
        const std::uint32_t sub = choice[mask];
        w.blocks.push_back(payload[sub]->block);
        mask ^= sub;
    }
    return w;
}

bool validate_certificate(const Graph& g, const FamilyParams& p, const Certificate& c) {
    if (c.s.size() != g.order() || c.isolated.size() != g.order()) return false;
    if (c.s.intersects(c.isolated)) return false;
    DynBitset iso = isolated_after_removal(g, c.s);
    if (!(iso == c.isolated)) return false;
    const std::int64_t lhs = p.r * static_cast<std::int64_t>(iso.count());
    const std::int64_t rhs = p.k * static_cast<std::int64_t>(c.s.count());
    return lhs == c.lhs && rhs == c.rhs && lhs > rhs;
}

bool validate_witness(const Graph& g, const FamilyParams& p, const FactorWitness& w) {
    const std::size_t n = g.order();
    const std::vector<int> allowed = allowed_cycle_lengths(p);
    std::vector<bool> covered(n, false);
    for (const auto& blk : w.blocks) {
        if (blk.vertices.empty()) return false;
        for (int v : blk.vertices) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || covered[static_cast<std::size_t>(v)])
                return false;
            covered[static_cast<std::size_t>(v)] = true;
        }
        for (auto [u, v] : blk.edges)
            if (!g.adjacent(static_cast<std::size_t>(u), static_cast<std::size_t>(v)))
                return false;
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < blk.vertices.size(); ++i)
            local[static_cast<std::size_t>(blk.vertices[i])] = static_cast<int>(i);
        if (blk.kind == FactorWitness::Block::Kind::Cycle) {
            const int b = static_cast<int>(blk.vertices.size());
            if (std::find(allowed.begin(), allowed.end(), b) == allowed.end()) return false;
            if (static_cast<int>(blk.edges.size()) != b) return false;
            std::vector<int> deg(static_cast<std::size_t>(b), 0);
            Graph cyc(static_cast<std::size_t>(b));
            for (auto [u, v] : blk.edges) {
                if (local[static_cast<std::size_t>(u)] < 0 || local[static_cast<std::size_t>(v)] < 0)
                    return false;
                cyc.add_edge(static_cast<std::size_t>(local[static_cast<std::size_t>(u)]),
                             static_cast<std::size_t>(local[static_cast<std::size_t>(v)]));
                ++deg[static_cast<std::size_t>(local[static_cast<std::size_t>(u)])];
                ++deg[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])];
            }
            for (int d : deg)
                if (d != 2) return false;
            if (!is_connected(cyc)) return false;
        } else {
            Graph tree(blk.vertices.size());
            for (auto [u, v] : blk.edges) {
                if (local[static_cast<std::size_t>(u)] < 0 || local[static_cast<std::size_t>(v)] < 0)
                    return false;
                tree.add_edge(static_cast<std::size_t>(local[static_cast<std::size_t>(u)]),
                              static_cast<std::size_t>(local[static_cast<std::size_t>(v)]));
            }
            if (!is_tree(tree)) return false;
            if (!in_tree_family(tree, p).member) return false;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!covered[v]) return false;
    return true;
}

} // namespace specfac
