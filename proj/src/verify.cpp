#include "specfac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specfac/graph6.hpp"
#include "specfac/iso.hpp"
#include "specfac/rng.hpp"

namespace specfac {

namespace {

bool eval_relation(double lhs, const std::string& rel, double rhs) {
    if (rel == "<") return lhs < rhs;
    if (rel == "<=") return lhs <= rhs;
    if (rel == ">") return lhs > rhs;
    if (rel == ">=") return lhs >= rhs;
    if (rel == "==") return lhs == rhs;
    throw std::invalid_argument("unknown step relation: " + rel);
}

Step make_step(std::string desc, double lhs, std::string rel, double rhs, double gap,
               bool informational = false) {
    Step st;
    st.description = std::move(desc);
    st.lhs = lhs;
    st.relation = std::move(rel);
    st.rhs = rhs;
    st.holds = eval_relation(lhs, st.relation, rhs);
    st.boundary = st.relation != "==" && std::fabs(lhs - rhs) <= gap;
    st.informational = informational;
    return st;
}

void push(VerificationReport& rep, Step st) {
    if (!st.informational && !st.holds) rep.overall = false;
    rep.steps.push_back(std::move(st));
}

ExtremalSpec spec_at(std::int64_t n, std::int64_t s, const FamilyParams& p) {
    ExtremalSpec es;
    es.n = n;
    es.s = s;
    es.family = p;
    if (!es.valid())
        throw std::invalid_argument("extremal spec has a negative part size");
    return es;
}

// largest integer s with s < rn/(k+r)
std::int64_t s_sweep_max(std::int64_t n, const FamilyParams& p) {
    return (p.r * n - 1) / (p.k + p.r);
}

} // namespace

bool revalidate(const VerificationReport& report) {
    bool all_required_hold = true;
    for (const auto& st : report.steps) {
        if (eval_relation(st.lhs, st.relation, st.rhs) != st.holds) return false;
        if (!st.informational && !st.holds) all_required_hold = false;
    }
    return report.overall == all_required_hold;
}

VerificationReport chain_check_adjacency(std::int64_t n, std::int64_t delta,
                                         const FamilyParams& p, std::int64_t s,
                                         double tol, double gap) {
    const std::int64_t k = p.k, r = p.r;
    if (delta < 1 || s < delta + 1)
        throw std::invalid_argument("chain_check_adjacency: need s >= delta+1 >= 2");
    if (n < min_order_A(delta, p))
        throw std::invalid_argument("chain_check_adjacency: n below the adjacency-condition order bound");
    VerificationReport rep;
    rep.mode = "chain-adjacency";
    rep.n = n;
    rep.delta = delta;
    rep.k = k;
    rep.r = r;
    rep.s = s;

    const ExtremalSpec es = spec_at(n, s, p);
    const Graph g1 = build_extremal(es);
    const double rho = adjacency_spectral_radius(g1, tol).value;
    const HongBound hong = hong_bound(g1);
    const std::int64_t e = static_cast<std::int64_t>(g1.edge_count());
    const std::int64_t fs = f_value(s, n, k, r);
    const std::int64_t fd1 = f_value(delta + 1, n, k, r);
    const std::int64_t lead = r * n - k * delta - 2 * r;

    push(rep, make_step("rho(G1(s)) <= hong(G1(s)) + 1e-9 (Hong bound)", rho, "<=",
                        hong.bound + 1e-9, gap));
    push(rep, make_step("r^2 (2 e(G1) - n + 1) <= f(s) (floor relaxation, exact)",
                        static_cast<double>(r * r * (2 * e - n + 1)), "<=",
                        static_cast<double>(fs), gap));
    push(rep, make_step("f(s) <= f(delta+1) (maximum at s = delta+1, exact)",
                        static_cast<double>(fs), "<=", static_cast<double>(fd1), gap));
    push(rep, make_step("f(delta+1) < (rn - k delta - 2r)^2 (alternate-expansion step, "
                        "can fail near the threshold)",
                        static_cast<double>(fd1), "<", static_cast<double>(lead * lead),
                        gap, /*informational=*/true));
    push(rep, make_step("f(delta+1) - alternate expansion of f(delta+1) == r^2",
                        static_cast<double>(fd1 - f_alt_expansion(delta, n, k, r)),
                        "==", static_cast<double>(r * r), gap));
    push(rep, make_step("rho(G1(s)) < (rn - k delta - 2r)/r (final)", rho, "<",
                        static_cast<double>(lead) / static_cast<double>(r), gap));
    rep.outcome = rep.overall ? "pass" : "fail";
    return rep;
}

VerificationReport chain_check_q(std::int64_t n, std::int64_t delta,
                                 const FamilyParams& p, std::int64_t s, double tol,
                                 double gap) {
    const std::int64_t k = p.k, r = p.r;
    if (delta < 1 || s < delta + 1)
        throw std::invalid_argument("chain_check_q: need s >= delta+1 >= 2");
    if (n < min_order_Q(delta, p))
        throw std::invalid_argument("chain_check_q: n below the q-condition order bound");
    VerificationReport rep;
    rep.mode = "chain-q";
    rep.n = n;
    rep.delta = delta;
    rep.k = k;
    rep.r = r;
    rep.s = s;

    const ExtremalSpec es = spec_at(n, s, p);
    const Graph g1 = build_extremal(es);
    const double q = signless_laplacian_spectral_radius(g1, tol).value;
    const double das = das_bound(g1);
    const std::int64_t e = static_cast<std::int64_t>(g1.edge_count());
    const std::int64_t gs = g_value(s, n, k, r);
    const std::int64_t gd1 = g_value(delta + 1, n, k, r);
    const std::int64_t lead = r * n - k * delta - 2 * r;

    push(rep, make_step("q(G1(s)) <= das(G1(s)) + 1e-9 (Das bound)", q, "<=", das + 1e-9,
                        gap));
    push(rep, make_step("r^2 (2 e(G1) + (n-2)(n-1)) <= g(s) (floor relaxation, exact)",
                        static_cast<double>(r * r * (2 * e + (n - 2) * (n - 1))), "<=",
                        static_cast<double>(gs), gap));
    push(rep, make_step("g(s) <= g(delta+1) (maximum at s = delta+1, exact)",
                        static_cast<double>(gs), "<=", static_cast<double>(gd1), gap));
    push(rep, make_step("g(delta+1) == alternate expansion of g(delta+1) (exact identity)",
                        static_cast<double>(gd1), "==",
                        static_cast<double>(g_alt_expansion(delta, n, k, r)), gap));
    push(rep, make_step("g(delta+1) <= 2r(n-1)(rn - k delta - 2r) (equality exactly at "
                        "the threshold order)",
                        static_cast<double>(gd1), "<=",
                        static_cast<double>(2 * r * (n - 1) * lead), gap));
    push(rep, make_step("q(G1(s)) < 2(rn - k delta - 2r)/r (final)", q, "<",
                        2.0 * static_cast<double>(lead) / static_cast<double>(r), gap));
    rep.outcome = rep.overall ? "pass" : "fail";
    return rep;
}

VerificationReport separation_scan(std::int64_t n, std::int64_t delta,
                                   const FamilyParams& p, double tol, double gap) {
    const std::int64_t k = p.k, r = p.r;
    if (delta < 1) throw std::invalid_argument("separation_scan: delta >= 1 required");
    if (n < min_order_A(delta, p))
        throw std::invalid_argument("separation_scan: n below the adjacency-condition order bound");
    const bool q_side = n >= min_order_Q(delta, p);

    VerificationReport rep;
    rep.mode = "separation";
    rep.n = n;
    rep.delta = delta;
    rep.k = k;
    rep.r = r;
    rep.s = delta;

    const Graph g1 = build_extremal(spec_at(n, delta, p));
    const double rho_star = adjacency_spectral_radius(g1, tol).value;
    const double q_star = signless_laplacian_spectral_radius(g1, tol).value;
    const std::int64_t floor_kd = k * delta / r;

    push(rep, make_step("rho(G1(delta)) > n - floor(k delta / r) - 2 (proper subgraph K)",
                        rho_star, ">", static_cast<double>(n - floor_kd - 2), gap));
    if (q_side)
        push(rep, make_step("q(G1(delta)) > 2(n - floor(k delta / r) - 2)", q_star, ">",
                            static_cast<double>(2 * (n - floor_kd - 2)), gap));

    const std::int64_t smax = s_sweep_max(n, p);
    for (std::int64_t s = delta + 1; s <= smax; ++s) {
        const Graph gs = build_extremal(spec_at(n, s, p));
        const double rho_s = adjacency_spectral_radius(gs, tol).value;
        push(rep, make_step("rho(G1(" + std::to_string(s) + ")) < rho(G1(delta)) - 1e-6",
                            rho_s, "<", rho_star - 1e-6, gap));
        if (q_side) {
            const double q_s = signless_laplacian_spectral_radius(gs, tol).value;
            push(rep, make_step("q(G1(" + std::to_string(s) + ")) < q(G1(delta)) - 1e-6",
                                q_s, "<", q_star - 1e-6, gap));
        }
    }
    rep.outcome = rep.overall ? "pass" : "fail";
    return rep;
}

VerificationReport verify_theorem_instance(const Graph& g, std::int64_t delta,
                                           const FamilyParams& p, MatrixChoice which,
                                           double tol, double band) {
    VerificationReport rep;
    rep.mode = which == MatrixChoice::Adjacency ? "instance-adjacency" : "instance-q";
    rep.n = static_cast<std::int64_t>(g.order());
    rep.delta = delta;
    rep.k = p.k;
    rep.r = p.r;
    rep.s = delta;

    // hypothesis preconditions are reported, not thrown
    if (g.order() == 0 || !is_connected(g)) {
        push(rep, make_step("precondition: G connected", 0.0, "==", 1.0, 0.0, true));
        rep.outcome = "not-applicable";
        return rep;
    }
    const DegreeStats ds = degree_stats(g);
    if (static_cast<std::int64_t>(ds.min_degree) != delta) {
        push(rep, make_step("precondition: min degree equals delta",
                            static_cast<double>(ds.min_degree), "==",
                            static_cast<double>(delta), 0.0, true));
        rep.outcome = "not-applicable";
        return rep;
    }
    const std::int64_t min_n = which == MatrixChoice::Adjacency ? min_order_A(delta, p)
                                                                : min_order_Q(delta, p);
    if (rep.n < min_n) {
        push(rep, make_step("precondition: n at or above the theorem order bound",
                            static_cast<double>(rep.n), ">=", static_cast<double>(min_n),
                            0.0, true));
        rep.outcome = "not-applicable";
        return rep;
    }

    const Graph g1 = build_extremal(spec_at(rep.n, delta, p));
    double value, star;
    if (which == MatrixChoice::Adjacency) {
        value = adjacency_spectral_radius(g, tol).value;
        star = adjacency_spectral_radius(g1, tol).value;
    } else {
        value = signless_laplacian_spectral_radius(g, tol).value;
        star = signless_laplacian_spectral_radius(g1, tol).value;
    }
    const double diff = value - star;
    const bool in_band = std::fabs(diff) <= band;
    if (diff < -band) {
        push(rep, make_step("hypothesis: spectral value >= value of G1(delta)", value,
                            ">=", star, band, true));
        rep.outcome = "not-applicable";
        return rep;
    }
    push(rep, make_step("hypothesis: spectral value >= value of G1(delta) - band", value,
                        ">=", star - band, band));

    const FactorVerdict fv = has_factor(g, p);
    if (fv.has_factor) {
        push(rep, make_step("conclusion: factor exists", 1.0, "==", 1.0, 0.0));
        rep.outcome = in_band ? "boundary" : "pass";
        return rep;
    }
    const bool iso = is_isomorphic(g, g1, std::max<std::size_t>(g.order(), 16));
    push(rep, make_step("conclusion: no factor, so G must equal G1(delta)",
                        iso ? 1.0 : 0.0, "==", 1.0, 0.0, /*informational=*/in_band && !iso));
    if (iso) {
        rep.outcome = in_band ? "boundary" : "pass";
        return rep;
    }
    // an applicable non-extremal graph without the factor contradicts the
    // theorem; inside the band floats cannot decide the hypothesis, so the
    // instance is excluded from pass/fail statistics
    rep.outcome = in_band ? "boundary" : "fail";
    rep.counterexample_graph6 = to_graph6(g);
    rep.counterexample_certificate = fv.certificate;
    return rep;
}

Graph random_connected_graph(std::size_t n, std::size_t delta, std::uint64_t seed) {
    if (n < 1 || delta < 1 || delta >= n)
        throw std::invalid_argument("random_connected_graph: need 1 <= delta < n");
    Rng rng(seed);
    const std::size_t max_edges = n * (n - 1) / 2;
    constexpr int kRetryCap = 100;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Graph g(n);
        // random spanning tree from a random Prüfer sequence
        if (n == 2) {
            g.add_edge(0, 1);
        } else {
            std::vector<int> seq(n - 2);
            for (auto& x : seq) x = static_cast<int>(rng.below(n));
            std::vector<int> deg(n, 1);
            for (int a : seq) ++deg[static_cast<std::size_t>(a)];
            std::size_t ptr = 0;
            while (deg[ptr] != 1) ++ptr;
            std::size_t leaf = ptr;
            for (int a : seq) {
                g.add_edge(leaf, static_cast<std::size_t>(a));
                if (--deg[static_cast<std::size_t>(a)] == 1 &&
                    static_cast<std::size_t>(a) < ptr) {
                    leaf = static_cast<std::size_t>(a);
                } else {
                    ++ptr;
                    while (deg[ptr] != 1) ++ptr;
                    leaf = ptr;
                }
            }
            g.add_edge(leaf, n - 1);
        }
        // fill to a random target size
        const std::size_t target =
            static_cast<std::size_t>(rng.range(static_cast<std::int64_t>(n - 1),
                                               static_cast<std::int64_t>(max_edges)));
        std::vector<std::pair<int, int>> non_edges;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (!g.adjacent(u, v)) non_edges.emplace_back(static_cast<int>(u),
                                                              static_cast<int>(v));
        for (std::size_t i = non_edges.size(); i > 1; --i)
            std::swap(non_edges[i - 1], non_edges[rng.below(i)]);
        std::size_t e = g.edge_count();
        for (std::size_t i = 0; i < non_edges.size() && e < target; ++i, ++e)
            g.add_edge(static_cast<std::size_t>(non_edges[i].first),
                       static_cast<std::size_t>(non_edges[i].second));

        // raise low-degree vertices up to delta
        for (std::size_t v = 0; v < n; ++v) {
            while (g.degree(v) < delta) {
                std::vector<std::size_t> cand;
                for (std::size_t u = 0; u < n; ++u)
                    if (u != v && !g.adjacent(u, v)) cand.push_back(u);
                if (cand.empty()) break;
                g.add_edge(v, cand[rng.below(cand.size())]);
            }
        }
        // lower one vertex to degree exactly delta without disconnecting
        std::size_t vmin = 0;
        for (std::size_t v = 1; v < n; ++v)
            if (g.degree(v) < g.degree(vmin)) vmin = v;
        bool stuck = false;
        while (g.degree(vmin) > delta && !stuck) {
            stuck = true;
            std::vector<int> nbrs = g.row_indices(vmin);
            for (std::size_t i = nbrs.size(); i > 1; --i)
                std::swap(nbrs[i - 1], nbrs[rng.below(i)]);
            for (int u : nbrs) {
                if (g.degree(static_cast<std::size_t>(u)) <= delta) continue;
                Graph h = delete_edge(g, vmin, static_cast<std::size_t>(u));
                if (is_connected(h)) {
                    g = std::move(h);
                    stuck = false;
                    break;
                }
            }
        }
        const DegreeStats ds = degree_stats(g);
        if (ds.connected && ds.min_degree == delta) return g;
    }
    throw std::runtime_error("random_connected_graph: retry cap exhausted");
}

} // namespace specfac
