#include <set>

#include "doctest.h"
#include "support/util.hpp"
#include "treegb/occurrence.hpp"

using namespace treegb;
using treegb::test::tt;

TEST_CASE("occurrence counts on the pinned examples") {
    PlanarTree t = generator(3);
    PlanarTree lm_alpha = tt("((***)**)");
    PlanarTree lm_beta = tt("(*(**(***))*)");

    CHECK(find_occurrences(t, lm_alpha).size() == 2);
    CHECK(find_occurrences(lm_alpha, tt("(((***)**)**)")).size() == 2);
    CHECK(find_occurrences(lm_beta, lm_beta).size() == 1);
    CHECK(find_occurrences(lm_alpha, tt("(**(***))")).empty());
}

TEST_CASE("occurrence bookkeeping fields") {
    PlanarTree t = generator(3);
    PlanarTree host = tt("(((***)**)**)");
    PlanarTree lm_alpha = tt("((***)**)");
    auto occs = find_occurrences(lm_alpha, host);
    REQUIRE(occs.size() == 2);

    // Root occurrence: anchored at the root, covering the two outer nodes;
    // the first pattern leaf swallows the innermost generator.
    CHECK(occs[0].anchor == 0);
    CHECK(occs[0].covered == std::vector<std::size_t>{0, 1});
    CHECK(occs[0].leaf_span.first == 1);
    CHECK(occs[0].leaf_span.last == 7);
    REQUIRE(occs[0].leaf_span.hangings.size() == 5);
    CHECK(occs[0].leaf_span.hangings[0] == std::pair<int, int>{1, 3});
    CHECK(occs[0].leaf_span.hangings[1] == std::pair<int, int>{4, 4});
    CHECK(occs[0].leaf_span.hangings[4] == std::pair<int, int>{7, 7});
    auto hangings = occurrence_hangings(occs[0]);
    REQUIRE(hangings.size() == 5);
    CHECK(hangings[0] == t);
    CHECK(hangings[1].is_leaf());

    // Deeper occurrence: anchored at the first child.
    CHECK(occs[1].anchor == 1);
    CHECK(occs[1].covered == std::vector<std::size_t>{1, 2});
    CHECK(occs[1].leaf_span.first == 1);
    CHECK(occs[1].leaf_span.last == 5);
    for (const auto& h : occurrence_hangings(occs[1]))
        CHECK(h.is_leaf());

    // A leaf pattern matches at every vertex.
    CHECK(find_occurrences(PlanarTree::single_leaf(3), host).size() ==
          host.code().size());

    CHECK_THROWS_AS(make_occurrence(lm_alpha, host, 2),
                    std::invalid_argument);
}

TEST_CASE("self-overlaps of lm(alpha)") {
    PlanarTree lm_alpha = tt("((***)**)");
    auto scms = enumerate_scms(lm_alpha, lm_alpha, true);
    REQUIRE(scms.size() == 1);
    CHECK(tree_to_text(scms[0].tree) == "(((***)**)**)");
    CHECK(scms[0].occ_left.anchor == 0);
    CHECK(scms[0].occ_right.anchor == 1);

    // Without the exclusion the total coincidence shows up as well.
    auto all = enumerate_scms(lm_alpha, lm_alpha, false);
    CHECK(all.size() == 2);
    CHECK(all[0].tree == lm_alpha);
    CHECK(all[0].occ_left.anchor == all[0].occ_right.anchor);
}

TEST_CASE("overlays of the generator on lm(alpha)") {
    PlanarTree t = generator(3);
    PlanarTree lm_alpha = tt("((***)**)");
    auto scms = enumerate_scms(t, lm_alpha, false);
    REQUIRE(scms.size() == 2);
    for (const auto& scm : scms)
        CHECK(tree_to_text(scm.tree) == "((***)**)");
}

TEST_CASE("the four alpha/beta overlaps") {
    PlanarTree lm_alpha = tt("((***)**)");
    PlanarTree lm_beta = tt("(*(**(***))*)");
    auto scms = enumerate_scms(lm_alpha, lm_beta, false);
    REQUIRE(scms.size() == 4);
    // Queue order: ascending (arity, path-lex, anchors). All four live in
    // arity 9.
    CHECK(tree_to_text(scms[0].tree) == "(*(**((***)**))*)");
    CHECK(tree_to_text(scms[1].tree) == "(*((***)*(***))*)");
    CHECK(tree_to_text(scms[2].tree) == "((***)(**(***))*)");
    CHECK(tree_to_text(scms[3].tree) == "((*(**(***))*)**)");
    for (const auto& scm : scms) {
        CHECK(scm.tree.arity() == 9);
        CHECK(occurs_at(lm_alpha, scm.tree, scm.occ_left.anchor));
        CHECK(occurs_at(lm_beta, scm.tree, scm.occ_right.anchor));
    }
}

TEST_CASE("every overlap satisfies the covering and size bounds") {
    // Brute-force check over all pattern pairs of arity <= 7.
    std::vector<PlanarTree> patterns;
    for (int n : {3, 5, 7})
        for (const auto& tree : enumerate_trees(3, n))
            patterns.push_back(tree);
    for (const auto& p : patterns) {
        for (const auto& q : patterns) {
            for (const auto& scm : enumerate_scms(p, q, p == q)) {
                CHECK(scm.tree.arity() < p.arity() + q.arity());
                // Union of covered sets = all internal vertices.
                std::set<std::size_t> covered(scm.occ_left.covered.begin(),
                                              scm.occ_left.covered.end());
                covered.insert(scm.occ_right.covered.begin(),
                               scm.occ_right.covered.end());
                std::size_t internal = 0;
                for (std::size_t pos = 0; pos < scm.tree.code().size(); ++pos)
                    if (scm.tree.code()[pos] == 1) {
                        ++internal;
                        CHECK(covered.count(pos) == 1);
                    }
                CHECK(covered.size() == internal);
            }
        }
    }
}

TEST_CASE("overlap counts follow the vertex-count pattern") {
    // For distinct patterns the overlay construction yields one record per
    // internal vertex of the first pattern plus one per non-root internal
    // vertex of the second (before deduplication).
    PlanarTree lm_alpha = tt("((***)**)");
    PlanarTree lm_beta = tt("(*(**(***))*)");
    CHECK(enumerate_scms(lm_alpha, lm_beta, false).size() ==
          static_cast<std::size_t>(lm_alpha.weight() + lm_beta.weight() - 1));
    CHECK(enumerate_scms(lm_alpha, lm_alpha, true).size() ==
          static_cast<std::size_t>(lm_alpha.weight() - 1));
}
