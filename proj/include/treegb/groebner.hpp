// S-polynomials, Buchberger completion truncated at an arity bound, and
// verification that a basis is Gröbner up to a bound.
//
// Completion processes overlap (SCM) pairs in ascending (arity, path-lex,
// anchors) order; every nonzero reduced S-polynomial joins the basis monic,
// and the final basis is inter-reduced, which makes the reduced output
// independent of processing order.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treegb/occurrence.hpp"
#include "treegb/polynomial.hpp"

namespace treegb {

struct GroebnerBasis {
    GradedContext ctx;
    // Monic, pairwise reduced, ascending by (arity, path-lex of lm).
    std::vector<TreePolynomial> gens;
    // All SCM S-polynomials of arity <= checked_bound reduce to zero.
    int checked_bound = 0;
    // False when completion stopped early (new-generator cap reached).
    bool complete_below_bound = false;
};

struct BuchbergerOptions {
    // Safety valve for runaway completions: give up (complete_below_bound =
    // false) after this many basis additions.
    long max_additions = 10000;
    // When set, pending overlaps are popped in a pseudo-random order instead
    // of queue order; the reduced result must not depend on it.
    std::optional<std::uint64_t> shuffle_seed;
};

// The difference of the two substitutions into an SCM overlap; the overlap
// tree cancels. Requires monic g, h whose leading monomials are the SCM's
// left/right patterns.
TreePolynomial s_polynomial(const Scm& scm, const TreePolynomial& g,
                            const TreePolynomial& h);

// Completes `initial` to a reduced Gröbner basis of the ideal it generates,
// considering overlaps of arity <= arity_bound.
GroebnerBasis buchberger(const std::vector<TreePolynomial>& initial,
                         const GradedContext& ctx, int arity_bound,
                         const BuchbergerOptions& options = {});

// Monic, pairwise fully reduced generating set for the same arity-graded
// spans: each element is replaced by its normal form against the others
// until a fixpoint; zero forms are dropped. Output ascending by
// (arity, path-lex of lm).
std::vector<TreePolynomial> inter_reduce(std::vector<TreePolynomial> G);

struct GroebnerFailure {
    std::size_t left_index = 0;   // indices into gens
    std::size_t right_index = 0;
    Scm scm;
    TreePolynomial remainder;  // nonzero normal form of the S-polynomial
};

struct GroebnerReport {
    bool ok = false;
    std::vector<GroebnerFailure> failures;
};

// Checks that every S-polynomial from every SCM of arity <= arity_bound
// reduces to zero against G.gens.
GroebnerReport is_groebner(const GroebnerBasis& G, int arity_bound);

}  // namespace treegb
