#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "specfac/factor.hpp"
#include "specfac/graph.hpp"
#include "specfac/iso.hpp"
#include "specfac/trees.hpp"

using namespace specfac;

namespace {
// A000055: free trees on n vertices
const std::size_t kTreeCounts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
}

TEST_CASE("generators agree and match the known counts") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto prufer = tree_codes_prufer(n);
        const auto levelseq = tree_codes_levelseq(n);
        CHECK(prufer.size() == kTreeCounts[n]);
        CHECK(levelseq.size() == kTreeCounts[n]);
        CHECK(prufer == levelseq);   // same canonical code sets
    }
    CHECK(tree_codes_levelseq(11).size() == kTreeCounts[11]);
    CHECK(tree_codes_levelseq(12).size() == kTreeCounts[12]);
    CHECK_THROWS_AS(tree_codes_prufer(11), std::invalid_argument);
    CHECK_THROWS_AS(tree_codes_levelseq(13), std::invalid_argument);
}

TEST_CASE("enumerate_trees output contract") {
    const auto n4 = enumerate_trees(4);
    REQUIRE(n4.size() == 2);
    // one is the star, the other the path; order puts the star (degree 3) first
    CHECK(is_isomorphic(n4[0], make_family(FamilyKind::Star, 4)));
    CHECK(is_isomorphic(n4[1], make_family(FamilyKind::Path, 4)));

    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(7).size() == 11);
    CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);

    SUBCASE("pairwise non-isomorphic representatives") {
        const auto n7 = enumerate_trees(7);
        for (std::size_t a = 0; a < n7.size(); ++a) {
            CHECK(is_tree(n7[a]));
            for (std::size_t b = a + 1; b < n7.size(); ++b)
                CHECK(!is_isomorphic(n7[a], n7[b]));
        }
    }
    SUBCASE("canonical codes round-trip through the rebuilt graphs") {
        for (const auto& t : enumerate_trees(8))
            CHECK(tree_canon_code(tree_from_canon_code(tree_canon_code(t), 8)) ==
                  tree_canon_code(t));
    }
}

TEST_CASE("canonical code is a graph invariant") {
    const Graph p5 = make_family(FamilyKind::Path, 5);
    Graph relabeled(5);
    relabeled.add_edge(2, 0);
    relabeled.add_edge(0, 4);
    relabeled.add_edge(4, 1);
    relabeled.add_edge(1, 3);
    CHECK(tree_canon_code(p5) == tree_canon_code(relabeled));
    CHECK(tree_canon_code(p5) != tree_canon_code(make_family(FamilyKind::Star, 5)));
}

TEST_CASE("family membership at (k, r) = (2, 1)") {
    const FamilyParams p(2, 1);
    const auto k2 = in_tree_family(make_family(FamilyKind::Complete, 2), p);
    CHECK(k2.member);
    const auto k12 = in_tree_family(make_family(FamilyKind::Star, 3), p);
    CHECK(k12.member);
    const auto k13 = in_tree_family(make_family(FamilyKind::Star, 4), p);
    CHECK(!k13.member);
    REQUIRE(k13.violation_a.has_value());
    CHECK(k13.violation_a->count() == 1);
    CHECK(k13.violation_a->test(0));
    CHECK(!k13.nonwitnessed_edge.has_value());

    // P_4 satisfies (a) but its middle edge has no witness, so (b) fails
    const auto p4 = in_tree_family(make_family(FamilyKind::Path, 4), p);
    CHECK(!p4.member);
    CHECK(!p4.violation_a.has_value());
    REQUIRE(p4.nonwitnessed_edge.has_value());
    CHECK(p4.nonwitnessed_edge->first == 1);
    CHECK(p4.nonwitnessed_edge->second == 2);

    CHECK_THROWS_AS(in_tree_family(make_family(FamilyKind::Cycle, 4), p),
                    std::invalid_argument);
    CHECK_THROWS_AS(in_tree_family(make_family(FamilyKind::Path, 21), p),
                    std::invalid_argument);
    CHECK(in_tree_family(make_family(FamilyKind::Path, 20), p).member == false);
}

TEST_CASE("condition (a) agrees with the naive subset loop") {
    const FamilyParams p(2, 1);
    for (std::size_t n = 2; n <= 7; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            const auto cls = in_tree_family(t, p);
            const auto naive = wolf_violation(t, p, Strategy::Naive);
            CHECK(cls.violation_a.has_value() == naive.has_value());
            if (cls.member) CHECK(!naive.has_value());
        }
    }
}

TEST_CASE("verbose classification records one revalidating witness per edge") {
    const FamilyParams p(2, 1);
    const Graph t = make_family(FamilyKind::Star, 3);
    const auto cls = in_tree_family(t, p, true);
    REQUIRE(cls.member);
    CHECK(cls.edge_witnesses.size() == t.edge_count());
    for (const auto& ew : cls.edge_witnesses) {
        const Graph forest = delete_edge(t, static_cast<std::size_t>(ew.edge.first),
                                         static_cast<std::size_t>(ew.edge.second));
        // recompute: r * i(forest - S*) > k * |S*|
        const Graph rest = delete_vertices(forest, ew.s_star);
        CHECK(p.r * static_cast<std::int64_t>(isolated_count(rest)) >
              p.k * static_cast<std::int64_t>(ew.s_star.count()));
    }
}

TEST_CASE("member trees span themselves as single-block factors") {
    const std::vector<FamilyParams> params{FamilyParams(2, 1), FamilyParams(3, 2),
                                           FamilyParams(4, 3)};
    for (const auto& p : params) {
        for (std::size_t n = 2; n <= 8; ++n) {
            for (const auto& t : enumerate_trees(n)) {
                if (!in_tree_family(t, p).member) continue;
                const auto witness = brute_force_factor(t, p);
                REQUIRE(witness.has_value());
                CHECK(witness->blocks.size() == 1);
            }
        }
    }
}
