#include "treegb/polynomial.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace treegb {

void TreePolynomial::add_term(const PlanarTree& t, const Rational& c) {
    if (t.branching() != ctx_.m)
        throw std::invalid_argument("monomial branching arity differs from context");
    if (!terms_.empty() && t.arity() != terms_.begin()->first.arity())
        throw std::invalid_argument("polynomial must be arity-homogeneous");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int koszul_compose_sign(const GradedContext& ctx, const PlanarTree& p, int i,
                        const PlanarTree& q) {
    if (p.branching() != ctx.m || q.branching() != ctx.m)
        throw std::invalid_argument("branching arity differs from context");
    if (ctx.parity == Parity::even || q.weight() % 2 == 0)
        return 1;
    // Count internal vertices of p strictly after leaf i in preorder: the
    // odd-degree content of q moves past exactly these vertices when the
    // composite is re-sorted into canonical (preorder) vertex order.
    std::size_t at = p.leaf_position(i);
    int d = 0;
    for (std::size_t pos = at + 1; pos < p.code().size(); ++pos)
        if (p.code()[pos] == 1)
            ++d;
    return d % 2 == 0 ? 1 : -1;
}

TreePolynomial poly_compose(const TreePolynomial& f, int i,
                            const TreePolynomial& g) {
    if (!(f.context() == g.context()))
        throw std::invalid_argument("context mismatch in composition");
    TreePolynomial out(f.context());
    for (const auto& [p, a] : f.terms()) {
        for (const auto& [q, b] : g.terms()) {
            int sign = koszul_compose_sign(f.context(), p, i, q);
            out.add_term(compose_tree(p, i, q), sign < 0 ? Rational(-a * b)
                                                         : Rational(a * b));
        }
    }
    return out;
}

std::pair<PlanarTree, Rational> leading(const TreePolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("zero polynomial has no leading term");
    const auto& top = *f.terms().begin();
    return {top.first, top.second};
}

TreePolynomial poly_add(const TreePolynomial& f, const TreePolynomial& g) {
    if (!(f.context() == g.context()))
        throw std::invalid_argument("context mismatch in addition");
    TreePolynomial out = f;
    for (const auto& [t, c] : g.terms())
        out.add_term(t, c);
    return out;
}

TreePolynomial poly_sub(const TreePolynomial& f, const TreePolynomial& g) {
    if (!(f.context() == g.context()))
        throw std::invalid_argument("context mismatch in subtraction");
    TreePolynomial out = f;
    for (const auto& [t, c] : g.terms())
        out.add_term(t, Rational(-c));
    return out;
}

TreePolynomial poly_scale(const TreePolynomial& f, const Rational& c) {
    TreePolynomial out(f.context());
    if (c == 0)
        return out;
    for (const auto& [t, a] : f.terms())
        out.add_term(t, Rational(a * c));
    return out;
}

TreePolynomial monic(const TreePolynomial& f) {
    auto [lm, lc] = leading(f);
    (void)lm;
    return poly_scale(f, Rational(1) / lc);
}

namespace {

// Core of substitution: graft the captured hangings back onto a replacement
// polynomial (descending leaf order, so earlier leaf indices stay valid) and
// plug the result into the carved host context.
TreePolynomial graft_into_context(const TreePolynomial& context_poly,
                                  int carved_leaf,
                                  const std::vector<PlanarTree>& hangings,
                                  const TreePolynomial& replacement) {
    TreePolynomial plugged = replacement;
    for (std::size_t k = hangings.size(); k-- > 0;) {
        TreePolynomial hang(replacement.context(), hangings[k]);
        plugged = poly_compose(plugged, static_cast<int>(k) + 1, hang);
    }
    return poly_compose(context_poly, carved_leaf, plugged);
}

}  // namespace

TreePolynomial substitute(const PlanarTree& host, const Occurrence& occ,
                          const TreePolynomial& f) {
    if (!(occ.host == host))
        throw std::invalid_argument("occurrence does not belong to this host");
    if (f.is_zero())
        return TreePolynomial(f.context());
    if (f.arity() != occ.pattern.arity())
        throw std::invalid_argument(
            "replacement arity differs from pattern arity");
    if (host.branching() != f.context().m)
        throw std::invalid_argument("host branching arity differs from context");

    // Carve out the whole subtree under the anchor; what remains is the
    // host context with one fresh leaf. The subtree itself factors as
    // pattern-with-hangings, which match_at already certified.
    std::size_t end = host.subtree_end(occ.anchor);
    std::vector<std::uint8_t> ctx_code;
    ctx_code.reserve(host.code().size() - (end - occ.anchor) + 1);
    ctx_code.insert(ctx_code.end(), host.code().begin(),
                    host.code().begin() + static_cast<long>(occ.anchor));
    ctx_code.push_back(0);
    ctx_code.insert(ctx_code.end(),
                    host.code().begin() + static_cast<long>(end),
                    host.code().end());
    PlanarTree context_tree(host.branching(), std::move(ctx_code));
    int carved_leaf = context_tree.leaf_index_at(occ.anchor);

    TreePolynomial context_poly(f.context(), context_tree);
    std::vector<PlanarTree> hangings = occurrence_hangings(occ);

    // Normalize so that substituting the pattern itself reproduces +host:
    // rebuild once with the bare pattern and absorb the resulting sign.
    TreePolynomial pattern_poly(f.context(), occ.pattern);
    TreePolynomial base =
        graft_into_context(context_poly, carved_leaf, hangings, pattern_poly);
    auto [base_tree, base_coeff] = leading(base);
    if (base.term_count() != 1 || !(base_tree == host) ||
        (base_coeff != 1 && base_coeff != -1))
        throw std::logic_error("substitution failed to rebuild the host");

    TreePolynomial out =
        graft_into_context(context_poly, carved_leaf, hangings, f);
    return base_coeff == 1 ? out : poly_scale(out, -1);
}

TreePolynomial reduce_once(const TreePolynomial& f, const TreePolynomial& g) {
    auto [fm, fc] = leading(f);
    auto [gm, gc] = leading(g);
    auto occs = find_occurrences(gm, fm);
    if (occs.empty())
        throw std::invalid_argument(
            "leading monomial of divisor does not divide leading monomial");
    // Any occurrence cancels the leading term; the smallest preorder anchor
    // is the fixed deterministic choice.
    TreePolynomial expansion = substitute(fm, occs.front(), g);
    return poly_sub(f, poly_scale(expansion, Rational(fc / gc)));
}

TreePolynomial normal_form(const TreePolynomial& f,
                           const std::vector<TreePolynomial>& G) {
    for (const auto& g : G)
        if (g.is_zero())
            throw std::invalid_argument("zero divisor in reduction set");
    TreePolynomial cur = f;
    bool reduced = true;
    while (reduced && !cur.is_zero()) {
        reduced = false;
        // Monomials descending: always eliminate the greatest reducible one,
        // which gives a strictly decreasing measure and hence termination.
        for (const auto& [u, c] : cur.terms()) {
            for (const auto& g : G) {
                auto gm = leading(g).first;
                if (gm.arity() > u.arity())
                    continue;
                auto occs = find_occurrences(gm, u);
                if (occs.empty())
                    continue;
                TreePolynomial expansion = substitute(u, occs.front(), g);
                cur = poly_sub(cur,
                               poly_scale(expansion,
                                          Rational(c / leading(g).second)));
                reduced = true;
                break;
            }
            if (reduced)
                break;
        }
    }
    return cur;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const GradedContext& ctx)
        : text_(text), ctx_(ctx) {}

    TreePolynomial run() {
        TreePolynomial out(ctx_);
        skip_ws();
        int sign = take_sign().value_or(1);
        term(out, sign);
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size())
                break;
            auto next = take_sign();
            if (!next)
                fail("expected '+' or '-' between terms");
            term(out, *next);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::optional<int> take_sign() {
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
            return text_[pos_++] == '+' ? 1 : -1;
        return std::nullopt;
    }

    Rational coeff() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == dstart)
                fail("expected denominator digits after '/'");
            digits += '/';
            digits += text_.substr(dstart, pos_ - dstart);
        }
        return parse_rational(digits);
    }

    PlanarTree mono() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("expected a monomial");
        if (text_[pos_] == '*') {
            ++pos_;
            return PlanarTree::single_leaf(ctx_.m);
        }
        if (text_[pos_] != '(')
            fail("expected '*' or '('");
        ++pos_;
        std::vector<std::uint8_t> code{1};
        for (int c = 0; c < ctx_.m; ++c) {
            PlanarTree child = mono();
            code.insert(code.end(), child.code().begin(), child.code().end());
        }
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ')')
            fail("expected ')'");
        ++pos_;
        return PlanarTree(ctx_.m, std::move(code));
    }

    void term(TreePolynomial& out, int sign) {
        skip_ws();
        std::size_t start = pos_;
        Rational c = 1;
        if (pos_ < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            c = coeff();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '*')
                fail("expected '*' after coefficient");
            ++pos_;
        }
        PlanarTree t = mono();
        try {
            out.add_term(t, sign < 0 ? Rational(-c) : c);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    std::string_view text_;
    GradedContext ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

TreePolynomial parse_poly(std::string_view text, const GradedContext& ctx) {
    return PolyParser(text, ctx).run();
}

std::string print_poly(const TreePolynomial& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : f.terms()) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg)
                out += "- ";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) {
            out += format_rational(mag);
            out += " * ";
        }
        out += tree_to_text(t);
    }
    return out;
}

}  // namespace treegb
