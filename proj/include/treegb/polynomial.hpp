// Linear combinations of tree monomials over the rationals, graded by arity,
// with the Koszul sign calculus for an even- or odd-degree generator.
//
// Sign convention: a monomial is stored canonically with its internal
// vertices ordered by preorder traversal; all sign information produced by
// reordering odd-degree vertices lives in the coefficients. The sign of a
// single partial composition under this convention is computed by
// koszul_compose_sign.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treegb/occurrence.hpp"
#include "treegb/rational.hpp"
#include "treegb/tree.hpp"

namespace treegb {

enum class Parity { even, odd };

struct GradedContext {
    int m = 3;
    Parity parity = Parity::even;
    friend bool operator==(const GradedContext&, const GradedContext&) = default;
};

// Arity-homogeneous polynomial. The term map is kept in descending
// (arity, path-lex) order, so begin() is the leading term.
class TreePolynomial {
public:
    using TermMap = std::map<PlanarTree, Rational, TreeKeyGreater>;

    explicit TreePolynomial(GradedContext ctx) : ctx_(ctx) {}
    TreePolynomial(GradedContext ctx, const PlanarTree& t,
                   const Rational& c = 1)
        : ctx_(ctx) {
        add_term(t, c);
    }

    const GradedContext& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Arity of the monomials (0 for the zero polynomial).
    int arity() const { return terms_.empty() ? 0 : terms_.begin()->first.arity(); }

    // Adds c * t, enforcing branching-arity and arity homogeneity;
    // cancelled terms are erased.
    void add_term(const PlanarTree& t, const Rational& c);

    friend bool operator==(const TreePolynomial& a, const TreePolynomial& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

private:
    GradedContext ctx_;
    TermMap terms_;
};

// Reported for malformed polynomial text, with the offending offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

// Sign incurred by composing canonical monomials: +1 in an even context;
// in the odd context (-1)^(w(q) * d) where d counts internal vertices of p
// strictly after leaf i in preorder.
int koszul_compose_sign(const GradedContext& ctx, const PlanarTree& p, int i,
                        const PlanarTree& q);

// Bilinear extension of partial composition, with signs.
TreePolynomial poly_compose(const TreePolynomial& f, int i,
                            const TreePolynomial& g);

// Leading term (greatest monomial in path-lex). Rejects the zero polynomial.
std::pair<PlanarTree, Rational> leading(const TreePolynomial& f);

TreePolynomial poly_add(const TreePolynomial& f, const TreePolynomial& g);
TreePolynomial poly_sub(const TreePolynomial& f, const TreePolynomial& g);
TreePolynomial poly_scale(const TreePolynomial& f, const Rational& c);

// f divided by its leading coefficient. Rejects the zero polynomial.
TreePolynomial monic(const TreePolynomial& f);

// Replaces the pattern matched by `occ` inside `host` with the polynomial
// `f` (which must have the pattern's arity), keeping the hanging subtrees.
// Normalized so that substituting the pattern itself returns +host.
TreePolynomial substitute(const PlanarTree& host, const Occurrence& occ,
                          const TreePolynomial& f);

// One elimination step: cancels the leading term of f against g, using the
// smallest-preorder occurrence of lm(g) inside lm(f). Rejects calls where
// lm(g) does not divide lm(f).
TreePolynomial reduce_once(const TreePolynomial& f, const TreePolynomial& g);

// Fully reduces f: repeatedly eliminates the greatest monomial divisible by
// some lm(g), g in G (first divisor in list order wins). The result has no
// reducible monomials.
TreePolynomial normal_form(const TreePolynomial& f,
                           const std::vector<TreePolynomial>& G);

// Grammar:  poly  := ('+'|'-')? term (('+'|'-') term)*
//           term  := [coeff '*']? mono
//           coeff := integer ('/' positive-integer)?
//           mono  := '*' | '(' mono{m} ')'
// Whitespace is insignificant. Arity-inhomogeneous input is rejected.
TreePolynomial parse_poly(std::string_view text, const GradedContext& ctx);

// Inverse of parse_poly: terms descending in path-lex, leading term first,
// exact rational coefficients, e.g. "- (*(***)*) - 2 * (**(***))".
std::string print_poly(const TreePolynomial& f);

}  // namespace treegb
