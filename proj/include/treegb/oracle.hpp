// Independent verification path: span the ideal's arity-n component by
// closing the relations under one-step compositions with the generator,
// then compute the quotient dimension as |T(n)| - rank via exact
// elimination. No Gröbner machinery is involved, so agreement with the
// normal-monomial count is a genuine cross-check.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "treegb/groebner.hpp"
#include "treegb/polynomial.hpp"

namespace treegb {

// Raised when the projected elimination size exceeds the memory cap
// (env TREEGB_ORACLE_MAX_MB, default 4096).
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IdealSpan {
    GradedContext ctx;
    int arity = 0;
    std::vector<TreePolynomial> vectors;  // spanning set, deduplicated
    std::size_t rank = 0;
    std::vector<PlanarTree> basis;  // path-lex monomial basis of T(n)
};

// Spans the arity-n graded piece of the ideal generated by `relations`:
// every relation is pushed up arity by arity through x -> x o_i t and
// x -> t o_j x, vectors are deduplicated by monic normalized form, and the
// rank is computed by exact fraction-free elimination.
IdealSpan ideal_span(const std::vector<TreePolynomial>& relations,
                     const GradedContext& ctx, int n);

// |T(n)| - rank(ideal_span).
std::uint64_t quotient_dim(const std::vector<TreePolynomial>& relations,
                           const GradedContext& ctx, int n);

struct ArityAgreement {
    int arity = 0;
    std::uint64_t oracle_dim = 0;
    std::uint64_t basis_dim = 0;  // normal-monomial count under G
    std::size_t vectors_checked = 0;
    bool vectors_reduce_to_zero = false;
    bool agree = false;
};

struct CrossValidation {
    bool ok = false;
    std::vector<ArityAgreement> rows;
};

// For every valid arity <= n_max: oracle quotient dimension must equal the
// normal-monomial count under G, and every spanning vector must have normal
// form 0 against G. `jobs` parallelizes the per-arity rank computations;
// results are deterministic.
CrossValidation cross_validate(const GroebnerBasis& G,
                               const std::vector<TreePolynomial>& relations,
                               int n_max, int jobs = 1);

// Exact rank of the coordinate vectors of `vectors` over the given monomial
// basis. Exposed for rank-invariance tests.
std::size_t exact_rank(const std::vector<TreePolynomial>& vectors,
                       const std::vector<PlanarTree>& basis);

}  // namespace treegb
