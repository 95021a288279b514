#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "specfac/extremal.hpp"
#include "specfac/factor.hpp"
#include "specfac/spectra.hpp"

using namespace specfac;

namespace {
ExtremalSpec spec(std::int64_t n, std::int64_t s, std::int64_t k, std::int64_t r) {
    ExtremalSpec es;
    es.n = n;
    es.s = s;
    es.family = FamilyParams(k, r);
    return es;
}
} // namespace

TEST_CASE("construction arithmetic") {
    // K_1 ∨ (K_13 ∪ 2K_1)
    const Graph a = build_extremal(spec(16, 1, 3, 2));
    CHECK(a.order() == 16);
    CHECK(a.edge_count() == 93);
    CHECK(degree_stats(a).min_degree == 1);

    // K_2 ∨ (K_10 ∪ 4K_1)
    const Graph b = build_extremal(spec(16, 2, 3, 2));
    CHECK(b.edge_count() == 74);
    CHECK(degree_stats(b).min_degree == 2);

    // K_1 ∨ (K_11 ∪ 3K_1)
    const Graph c = build_extremal(spec(15, 1, 2, 1));
    CHECK(c.edge_count() == 69);
    CHECK(degree_stats(c).min_degree == 1);

    CHECK(spec(16, 1, 3, 2).edge_count() == 93);
    CHECK(spec(16, 2, 3, 2).edge_count() == 74);
    CHECK(spec(15, 1, 2, 1).edge_count() == 69);
}

TEST_CASE("degenerate and invalid part sizes") {
    // n = ⌊ks/r⌋ + s + 1 gives an empty middle clique
    const ExtremalSpec boundary = spec(8, 2, 3, 2);   // ⌊3⌋ + 2 + 1 = 6 <= 8, clique 2
    CHECK(boundary.clique_part() == 2);
    const ExtremalSpec empty_clique = spec(6, 2, 3, 2);
    CHECK(empty_clique.clique_part() == 0);
    const Graph g = build_extremal(empty_clique);
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == empty_clique.edge_count());
    CHECK_THROWS_AS(build_extremal(spec(5, 2, 3, 2)), std::invalid_argument);
}

TEST_CASE("exact rationals") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(3, -2) == Rat(-3, 2));
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(8, 2).ceil() == 4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(63, 4).str() == "63/4");
    CHECK(Rat(15).str() == "15");
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(max(Rat(280, 18), Rat(63, 4)) == Rat(63, 4));
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("order thresholds as exact rationals") {
    CHECK(threshold_A(1, FamilyParams(2, 1)) == Rat(15));
    CHECK(threshold_A(1, FamilyParams(3, 2)) == Rat(63, 4));
    CHECK(threshold_A(1, FamilyParams(3, 2)).to_double() == doctest::Approx(15.75));
    CHECK(threshold_Q(1, FamilyParams(3, 2)) == Rat(23));
    CHECK(min_order_A(1, FamilyParams(2, 1)) == 15);
    CHECK(min_order_A(1, FamilyParams(3, 2)) == 16);
    CHECK(min_order_Q(1, FamilyParams(3, 2)) == 23);
    CHECK_THROWS_AS(threshold_A(0, FamilyParams(2, 1)), std::invalid_argument);
    // the q-side threshold always dominates the adjacency-side one
    for (std::int64_t d = 1; d <= 3; ++d)
        for (auto [k, r] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {3, 2}, {4, 3},
                            {3, 1}, {5, 2}})
            CHECK(threshold_A(d, FamilyParams(k, r)) <= threshold_Q(d, FamilyParams(k, r)));
}

TEST_CASE("proof quadratics") {
    CHECK(f_value(2, 16, 3, 2) == 628);
    CHECK(g_value(2, 23, 3, 2) == 3432);
    CHECK(f_value(2, 15, 2, 1) == 116);
    for (std::int64_t n = 5; n <= 40; n += 7)
        for (std::int64_t k = 2; k <= 5; ++k)
            for (std::int64_t r = 1; r < k; ++r)
                CHECK(f_value(0, n, k, r) == r * r * (n - 1) * (n - 1));
}

TEST_CASE("alternate expansions: f misses by exactly r^2, g reproduces") {
    CHECK(f_alt_expansion(1, 16, 3, 2) == 624);
    CHECK(f_value(2, 16, 3, 2) - f_alt_expansion(1, 16, 3, 2) == 4);
    for (std::int64_t k = 2; k <= 5; ++k)
        for (std::int64_t r = 1; r < k; ++r)
            for (std::int64_t d = 1; d <= 3; ++d)
                for (std::int64_t n = 10; n <= 90; n += 13) {
                    CHECK(f_value(d + 1, n, k, r) - f_alt_expansion(d, n, k, r) == r * r);
                    CHECK(g_value(d + 1, n, k, r) == g_alt_expansion(d, n, k, r));
                }
}

TEST_CASE("every valid spec yields the separator certificate") {
    for (auto [k, r] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {3, 2}, {4, 3}}) {
        const FamilyParams p(k, r);
        for (std::int64_t s = 1; s <= 3; ++s) {
            for (std::int64_t n : {12, 15, 19}) {
                ExtremalSpec es = spec(n, s, k, r);
                if (!es.valid()) continue;
                const Graph g = build_extremal(es);
                const auto cert = wolf_violation(g, p, Strategy::Pruned);
                REQUIRE(cert.has_value());
                CHECK(static_cast<std::int64_t>(cert->s.count()) == s);
                // r(⌊ks/r⌋+1) > ks by the floor definition
                CHECK(r * (es.isolated_part()) > k * s);
                CHECK(validate_certificate(g, p, *cert));
            }
        }
    }
}

TEST_CASE("f and g attain their maximum at s = delta+1 above the thresholds") {
    for (auto [k, r] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {3, 2}, {4, 3},
                        {3, 1}}) {
        for (std::int64_t delta = 1; delta <= 2; ++delta) {
            const FamilyParams p(k, r);
            const std::int64_t nA = min_order_A(delta, p);
            for (std::int64_t n = nA; n <= nA + 3; ++n) {
                const std::int64_t smax = (r * n - 1) / (k + r);
                for (std::int64_t s = delta + 1; s <= smax; ++s)
                    CHECK(f_value(s, n, k, r) <= f_value(delta + 1, n, k, r));
            }
            const std::int64_t nQ = min_order_Q(delta, p);
            for (std::int64_t n = nQ; n <= nQ + 3; ++n) {
                const std::int64_t smax = (r * n - 1) / (k + r);
                for (std::int64_t s = delta + 1; s <= smax; ++s)
                    CHECK(g_value(s, n, k, r) <= g_value(delta + 1, n, k, r));
            }
        }
    }
}

TEST_CASE("spectral sandwich and bound chains on sample specs") {
    for (auto [n, delta, k, r] :
         {std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>{16, 1, 3, 2},
          {15, 1, 2, 1},
          {23, 1, 3, 2}}) {
        const FamilyParams p(k, r);
        const Graph gd = build_extremal(spec(n, delta, k, r));
        const double rho_star = adjacency_spectral_radius(gd).value;
        // K_{n-⌊k delta/r⌋-1} is a proper subgraph
        CHECK(rho_star > static_cast<double>(n - k * delta / r - 2));

        const std::int64_t smax = (r * n - 1) / (k + r);
        for (std::int64_t s = delta + 1; s <= smax; ++s) {
            const ExtremalSpec es = spec(n, s, k, r);
            const Graph gs = build_extremal(es);
            const double rho = adjacency_spectral_radius(gs).value;
            const HongBound hb = hong_bound(gs);
            CHECK(rho <= hb.bound + 1e-9);
            CHECK(hb.bound <=
                  std::sqrt(static_cast<double>(f_value(s, n, k, r))) / r + 1e-9);
            const double q = signless_laplacian_spectral_radius(gs).value;
            const double das = das_bound(gs);
            CHECK(q <= das + 1e-9);
            CHECK(das <= static_cast<double>(g_value(s, n, k, r)) /
                             static_cast<double>(r * r * (n - 1)) +
                         1e-9);
        }
    }
}
