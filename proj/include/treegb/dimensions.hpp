// Normal monomials of a quotient by a Gröbner basis, dimension series by
// arity/weight, and the closed-form monomial families used as test
// expectations (middle combs and the arity-(2k+1) family).
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "treegb/groebner.hpp"

namespace treegb {

// Raised when a computation needs the basis to be complete at an arity the
// completion did not certify.
class IncompleteBasisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DimensionRow {
    int arity = 0;
    int weight = 0;
    std::uint64_t trees = 0;  // |T(n)|, all monomials of this arity
    std::uint64_t dim = 0;    // normal monomials = quotient dimension
    std::optional<std::vector<PlanarTree>> monomials;
};

struct DimensionReport {
    GradedContext ctx;
    std::vector<DimensionRow> rows;
};

// All arity-n trees with no occurrence of any leading monomial of G,
// ascending path-lex. Generation prunes eagerly: candidates are assembled
// from normal children, so only root-anchored occurrences need checking.
// Requires G complete below n (IncompleteBasisError otherwise).
std::vector<PlanarTree> normal_monomials(const GroebnerBasis& G, int n);

// Rows for every valid arity <= n_max. `jobs` > 1 splits per-arity filtering
// across threads; the report is identical for any jobs value.
DimensionReport dimension_series(const GroebnerBasis& G, int n_max,
                                 bool list_monomials = false, int jobs = 1);

// Middle comb: weight-l chain growing at the second leaf.
// comb_monomial(ctx, 0) is the single leaf, comb_monomial(ctx, 1) the
// generator.
PlanarTree comb_monomial(const GradedContext& ctx, int l);

// The k+1 explicit normal monomials of arity 2k+1 (m = 3, even quotient),
// increasing path-lex. Requires k >= 3.
std::vector<PlanarTree> even_basis_family(int k);

// Leaf census by child position: how many leaves sit as the 1st, 2nd, ...,
// m-th child of their parent (the root of a single-leaf tree counts
// nowhere).
std::vector<int> leaf_child_positions(const PlanarTree& t);

}  // namespace treegb
