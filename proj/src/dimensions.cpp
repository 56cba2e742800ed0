#include "treegb/dimensions.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace treegb {

namespace {

// Root-anchored match only; deeper occurrences are excluded inductively when
// candidates are assembled from pattern-free children.
bool any_pattern_at_root(const std::vector<PlanarTree>& patterns,
                         const PlanarTree& t) {
    for (const auto& p : patterns)
        if (p.weight() <= t.weight() && occurs_at(p, t, 0))
            return true;
    return false;
}

std::vector<PlanarTree> gb_patterns(const GroebnerBasis& G) {
    std::vector<PlanarTree> patterns;
    patterns.reserve(G.gens.size());
    for (const auto& g : G.gens)
        patterns.push_back(leading(g).first);
    return patterns;
}

void check_complete(const GroebnerBasis& G, int n) {
    if (!G.complete_below_bound || G.checked_bound < n)
        throw IncompleteBasisError(
            "basis not certified complete up to the requested arity");
}

// Normal monomials for weights 0..w_max, built weight by weight: the
// children of every candidate are already normal, so only the root anchor
// can carry a fresh pattern occurrence. `jobs` splits the root checks of
// each weight level; output order is path-lex regardless.
std::vector<std::vector<PlanarTree>> normal_by_weight(
    int m, const std::vector<PlanarTree>& patterns, int w_max, int jobs) {
    std::vector<std::vector<PlanarTree>> normal(
        static_cast<std::size_t>(w_max) + 1);
    normal[0] = {PlanarTree::single_leaf(m)};
    for (int w = 1; w <= w_max; ++w) {
        // Assemble candidates: root + m normal children with weights
        // summing to w - 1.
        std::vector<PlanarTree> candidates;
        std::function<void(int, int, std::vector<std::uint8_t>&)> emit =
            [&](int child, int left, std::vector<std::uint8_t>& acc) {
                if (child == m) {
                    candidates.emplace_back(m, acc);
                    return;
                }
                int lo = child == m - 1 ? left : 0;  // last child takes the rest
                for (int take = lo; take <= left; ++take) {
                    for (const auto& sub :
                         normal[static_cast<std::size_t>(take)]) {
                        std::size_t mark = acc.size();
                        acc.insert(acc.end(), sub.code().begin(),
                                   sub.code().end());
                        emit(child + 1, left - take, acc);
                        acc.resize(mark);
                    }
                }
            };
        std::vector<std::uint8_t> acc{1};
        emit(0, w - 1, acc);

        std::vector<char> keep(candidates.size(), 0);
        int workers = std::max(1, std::min<int>(jobs, static_cast<int>(
                                                          candidates.size())));
        if (workers <= 1) {
            for (std::size_t k = 0; k < candidates.size(); ++k)
                keep[k] = !any_pattern_at_root(patterns, candidates[k]);
        } else {
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= candidates.size())
                        return;
                    keep[k] = !any_pattern_at_root(patterns, candidates[k]);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
        }

        std::vector<PlanarTree>& level = normal[static_cast<std::size_t>(w)];
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if (keep[k])
                level.push_back(std::move(candidates[k]));
        std::sort(level.begin(), level.end(), TreeKeyLess{});
    }
    return normal;
}

}  // namespace

std::vector<PlanarTree> normal_monomials(const GroebnerBasis& G, int n) {
    if (n < 1 || (n - 1) % (G.ctx.m - 1) != 0)
        throw std::invalid_argument("arity invalid for this branching arity");
    check_complete(G, n);
    int w = (n - 1) / (G.ctx.m - 1);
    auto levels = normal_by_weight(G.ctx.m, gb_patterns(G), w, 1);
    return levels[static_cast<std::size_t>(w)];
}

DimensionReport dimension_series(const GroebnerBasis& G, int n_max,
                                 bool list_monomials, int jobs) {
    if (n_max < 1)
        throw std::invalid_argument("arity bound must be positive");
    check_complete(G, n_max);
    int m = G.ctx.m;
    int w_max = (n_max - 1) / (m - 1);
    auto levels = normal_by_weight(m, gb_patterns(G), w_max, jobs);

    DimensionReport report;
    report.ctx = G.ctx;
    for (int w = 0; w <= w_max; ++w) {
        DimensionRow row;
        row.weight = w;
        row.arity = 1 + w * (m - 1);
        row.trees = count_trees(m, row.arity);
        row.dim = levels[static_cast<std::size_t>(w)].size();
        if (list_monomials)
            row.monomials = levels[static_cast<std::size_t>(w)];
        report.rows.push_back(std::move(row));
    }
    return report;
}

PlanarTree comb_monomial(const GradedContext& ctx, int l) {
    if (l < 0)
        throw std::invalid_argument("comb weight must be nonnegative");
    if (l == 0)
        return PlanarTree::single_leaf(ctx.m);
    PlanarTree out = generator(ctx.m);
    for (int k = 1; k < l; ++k)
        out = compose_tree(generator(ctx.m), 2, out);
    return out;
}

std::vector<PlanarTree> even_basis_family(int k) {
    if (k < 3)
        throw std::invalid_argument("family defined for weight k >= 3");
    GradedContext ctx{3, Parity::even};
    PlanarTree t = generator(3);
    auto third = [&](const PlanarTree& inner) {
        return compose_tree(t, 3, inner);
    };
    std::vector<PlanarTree> family;
    family.push_back(third(third(comb_monomial(ctx, k - 2))));
    family.push_back(third(comb_monomial(ctx, k - 1)));
    for (int i = 3; i <= k; ++i)
        family.push_back(compose_tree(third(third(comb_monomial(ctx, k - i))),
                                      2, comb_monomial(ctx, i - 2)));
    family.push_back(comb_monomial(ctx, k));
    std::sort(family.begin(), family.end(), TreeKeyLess{});
    return family;
}

std::vector<int> leaf_child_positions(const PlanarTree& t) {
    std::vector<int> census(static_cast<std::size_t>(t.branching()), 0);
    // Walk the code with a stack of "current child slot" counters.
    std::vector<int> slot;
    for (std::uint8_t sym : t.code()) {
        if (!slot.empty())
            ++slot.back();
        if (sym == 1) {
            slot.push_back(0);
        } else if (!slot.empty()) {
            census[static_cast<std::size_t>(slot.back() - 1)] += 1;
        }
        while (!slot.empty() && slot.back() == t.branching())
            slot.pop_back();
    }
    return census;
}

}  // namespace treegb
