#include "treegb/groebner.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace treegb {

namespace {

bool gen_order_less(const TreePolynomial& a, const TreePolynomial& b) {
    return compare_tree_key(leading(a).first, leading(b).first) < 0;
}

// Queue key for a pending overlap: ascending SCM arity, then path-lex of
// the overlap tree, then anchors, then the generator pair.
struct PendingPair {
    Scm scm;
    std::size_t i = 0, j = 0;
};

bool pending_less(const PendingPair& a, const PendingPair& b) {
    if (int c = compare_tree_key(a.scm.tree, b.scm.tree); c != 0)
        return c < 0;
    return std::tuple(a.scm.occ_left.anchor, a.scm.occ_right.anchor, a.i,
                      a.j) < std::tuple(b.scm.occ_left.anchor,
                                        b.scm.occ_right.anchor, b.i, b.j);
}

void enqueue_pairs(std::vector<PendingPair>& pending,
                   const std::vector<TreePolynomial>& gens, std::size_t i,
                   std::size_t j, int arity_bound) {
    const PlanarTree& lm_i = leading(gens[i]).first;
    const PlanarTree& lm_j = leading(gens[j]).first;
    for (Scm& scm : enumerate_scms(lm_i, lm_j, /*exclude_total_self=*/i == j)) {
        if (scm.tree.arity() > arity_bound)
            continue;
        pending.push_back(PendingPair{std::move(scm), i, j});
    }
}

}  // namespace

TreePolynomial s_polynomial(const Scm& scm, const TreePolynomial& g,
                            const TreePolynomial& h) {
    if (!(leading(g).first == scm.occ_left.pattern) ||
        !(leading(h).first == scm.occ_right.pattern))
        throw std::invalid_argument(
            "SCM patterns do not match the leading monomials");
    TreePolynomial left = substitute(scm.tree, scm.occ_left, monic(g));
    TreePolynomial right = substitute(scm.tree, scm.occ_right, monic(h));
    return poly_sub(left, right);
}

std::vector<TreePolynomial> inter_reduce(std::vector<TreePolynomial> G) {
    std::vector<TreePolynomial> work;
    for (const auto& g : G)
        if (!g.is_zero())
            work.push_back(monic(g));

    // Fixpoint: reduce each element against all the others; drop it if it
    // vanishes, restart after any change (the list is small in practice).
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(work.begin(), work.end(), gen_order_less);
        for (std::size_t idx = 0; idx < work.size(); ++idx) {
            std::vector<TreePolynomial> rest;
            rest.reserve(work.size() - 1);
            for (std::size_t k = 0; k < work.size(); ++k)
                if (k != idx)
                    rest.push_back(work[k]);
            TreePolynomial nf = normal_form(work[idx], rest);
            if (nf.is_zero()) {
                work.erase(work.begin() + static_cast<long>(idx));
                changed = true;
                break;
            }
            TreePolynomial candidate = monic(nf);
            if (!(candidate == work[idx])) {
                work[idx] = std::move(candidate);
                changed = true;
                break;
            }
        }
    }
    std::sort(work.begin(), work.end(), gen_order_less);
    return work;
}

GroebnerBasis buchberger(const std::vector<TreePolynomial>& initial,
                         const GradedContext& ctx, int arity_bound,
                         const BuchbergerOptions& options) {
    for (const auto& f : initial) {
        if (f.is_zero())
            throw std::invalid_argument("zero polynomial among generators");
        if (!(f.context() == ctx))
            throw std::invalid_argument("generator context mismatch");
        if (f.arity() > arity_bound)
            throw std::invalid_argument("arity bound below a generator arity");
    }

    GroebnerBasis out;
    out.ctx = ctx;
    if (initial.empty()) {
        out.checked_bound = arity_bound;
        out.complete_below_bound = true;
        return out;
    }

    std::vector<TreePolynomial> gens = inter_reduce(initial);
    std::vector<PendingPair> pending;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            enqueue_pairs(pending, gens, i, j, arity_bound);

    std::mt19937_64 rng(options.shuffle_seed.value_or(0));
    long additions = 0;
    bool exhausted = true;
    while (!pending.empty()) {
        std::size_t pick = 0;
        if (options.shuffle_seed) {
            pick = std::uniform_int_distribution<std::size_t>(
                0, pending.size() - 1)(rng);
        } else {
            pick = static_cast<std::size_t>(
                std::min_element(pending.begin(), pending.end(),
                                 pending_less) -
                pending.begin());
        }
        PendingPair pair = std::move(pending[pick]);
        pending.erase(pending.begin() + static_cast<long>(pick));

        TreePolynomial s = s_polynomial(pair.scm, gens[pair.i], gens[pair.j]);
        TreePolynomial nf = normal_form(s, gens);
        if (nf.is_zero())
            continue;
        if (++additions > options.max_additions) {
            exhausted = false;
            break;
        }
        gens.push_back(monic(nf));
        std::size_t fresh = gens.size() - 1;
        for (std::size_t k = 0; k <= fresh; ++k)
            enqueue_pairs(pending, gens, k, fresh, arity_bound);
    }

    out.gens = inter_reduce(gens);
    out.checked_bound = arity_bound;
    out.complete_below_bound = exhausted;
    return out;
}

GroebnerReport is_groebner(const GroebnerBasis& G, int arity_bound) {
    GroebnerReport report;
    for (std::size_t i = 0; i < G.gens.size(); ++i) {
        for (std::size_t j = i; j < G.gens.size(); ++j) {
            const PlanarTree& lm_i = leading(G.gens[i]).first;
            const PlanarTree& lm_j = leading(G.gens[j]).first;
            for (const Scm& scm :
                 enumerate_scms(lm_i, lm_j, /*exclude_total_self=*/i == j)) {
                if (scm.tree.arity() > arity_bound)
                    continue;
                TreePolynomial s = s_polynomial(scm, G.gens[i], G.gens[j]);
                TreePolynomial nf = normal_form(s, G.gens);
                if (!nf.is_zero())
                    report.failures.push_back(
                        GroebnerFailure{i, j, scm, std::move(nf)});
            }
        }
    }
    report.ok = report.failures.empty();
    return report;
}

}  // namespace treegb
