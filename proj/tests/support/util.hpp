// Shared helpers for the test suites.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "treegb/polynomial.hpp"
#include "treegb/tree.hpp"

namespace treegb::test {

// Parses a single monomial from its nonassociative text form.
inline PlanarTree tt(const std::string& text, int m = 3) {
    GradedContext ctx{m, Parity::even};
    return leading(parse_poly(text, ctx)).first;
}

inline TreePolynomial pp(const std::string& text,
                         const GradedContext& ctx = {3, Parity::even}) {
    return parse_poly(text, ctx);
}

// Uniformly random tree of the given weight (not uniform over shapes, but
// covers all of them): repeated grafting at random leaves.
inline PlanarTree random_tree(std::mt19937_64& rng, int m, int weight) {
    if (weight == 0)
        return PlanarTree::single_leaf(m);
    PlanarTree out = generator(m);
    for (int k = 1; k < weight; ++k) {
        std::uniform_int_distribution<int> pick(1, out.arity());
        out = compose_tree(out, pick(rng), generator(m));
    }
    return out;
}

}  // namespace treegb::test
