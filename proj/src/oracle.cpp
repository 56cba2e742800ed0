#include "treegb/oracle.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "treegb/dimensions.hpp"

namespace treegb {

namespace {

std::size_t memory_cap_bytes() {
    constexpr std::size_t default_mb = 4096;
    std::size_t mb = default_mb;
    if (const char* env = std::getenv("TREEGB_ORACLE_MAX_MB")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0)
            mb = static_cast<std::size_t>(parsed);
    }
    return mb * 1024 * 1024;
}

// Rough per-entry cost of a stored coefficient (map node + small mpz/mpq).
constexpr std::size_t kBytesPerEntry = 96;

std::string dedupe_key(const TreePolynomial& f) {
    std::string key;
    for (const auto& [t, c] : f.terms()) {
        key.append(reinterpret_cast<const char*>(t.code().data()),
                   t.code().size());
        key += ':';
        key += format_rational(c);
        key += ';';
    }
    return key;
}

// One ladder pass: relations pushed up one arity step at a time through the
// two single-generator composition maps, deduplicated by monic form.
// Returns vectors grouped per arity for all valid arities <= n_max.
std::map<int, std::vector<TreePolynomial>> span_ladder(
    const std::vector<TreePolynomial>& relations, const GradedContext& ctx,
    int n_max) {
    std::map<int, std::vector<TreePolynomial>> vectors;
    std::map<int, std::unordered_set<std::string>> seen;
    std::size_t cap = memory_cap_bytes();
    std::size_t stored_entries = 0;

    auto admit = [&](int arity, const TreePolynomial& v) {
        if (v.is_zero())
            return;
        TreePolynomial norm = monic(v);
        if (!seen[arity].insert(dedupe_key(norm)).second)
            return;
        stored_entries += norm.term_count();
        if (stored_entries * kBytesPerEntry > cap)
            throw OracleLimitError(
                "spanning-set size exceeds TREEGB_ORACLE_MAX_MB");
        vectors[arity].push_back(std::move(norm));
    };

    for (const auto& f : relations) {
        if (f.is_zero())
            throw std::invalid_argument("zero polynomial among relations");
        if (!(f.context() == ctx))
            throw std::invalid_argument("relation context mismatch");
        if (f.arity() <= n_max)
            admit(f.arity(), f);
    }

    TreePolynomial gen_poly(ctx, generator(ctx.m));
    for (int a = 1; a + (ctx.m - 1) <= n_max; a += ctx.m - 1) {
        auto level = vectors.find(a);
        if (level == vectors.end())
            continue;
        for (const auto& v : level->second) {
            for (int i = 1; i <= a; ++i)
                admit(a + ctx.m - 1, poly_compose(v, i, gen_poly));
            for (int j = 1; j <= ctx.m; ++j)
                admit(a + ctx.m - 1, poly_compose(gen_poly, j, v));
        }
    }
    return vectors;
}

using SparseIntRow = std::map<std::size_t, mpz_class>;

SparseIntRow integer_row(const TreePolynomial& f,
                         const std::map<PlanarTree, std::size_t, TreeKeyLess>&
                             column_of) {
    // Clear denominators, then strip the content gcd.
    mpz_class lcm_den = 1;
    for (const auto& [t, c] : f.terms())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                c.get_den().get_mpz_t());
    SparseIntRow row;
    mpz_class content = 0;
    for (const auto& [t, c] : f.terms()) {
        mpz_class entry = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), entry.get_mpz_t());
        row[column_of.at(t)] = std::move(entry);
    }
    if (content > 1)
        for (auto& [col, entry] : row)
            entry /= content;
    return row;
}

void strip_content(SparseIntRow& row) {
    mpz_class content = 0;
    for (const auto& [col, entry] : row)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), entry.get_mpz_t());
    if (content > 1)
        for (auto& [col, entry] : row)
            entry /= content;
    if (!row.empty() && row.begin()->second < 0)
        for (auto& [col, entry] : row)
            entry = -entry;
}

}  // namespace

std::size_t exact_rank(const std::vector<TreePolynomial>& vectors,
                       const std::vector<PlanarTree>& basis) {
    std::map<PlanarTree, std::size_t, TreeKeyLess> column_of;
    for (std::size_t k = 0; k < basis.size(); ++k)
        column_of.emplace(basis[k], k);

    std::size_t cap_entries = memory_cap_bytes() / kBytesPerEntry;
    std::size_t held_entries = 0;
    // Echelon store: pivot column -> integer row with that leading column.
    std::map<std::size_t, SparseIntRow> echelon;
    for (const auto& v : vectors) {
        SparseIntRow row = integer_row(v, column_of);
        while (!row.empty()) {
            std::size_t lead = row.begin()->first;
            auto pivot = echelon.find(lead);
            if (pivot == echelon.end()) {
                strip_content(row);
                held_entries += row.size();
                if (held_entries > cap_entries)
                    throw OracleLimitError(
                        "elimination size exceeds TREEGB_ORACLE_MAX_MB");
                echelon.emplace(lead, std::move(row));
                break;
            }
            // Fraction-free cancellation of the leading entry:
            // row <- p_lead * row - r_lead * pivot_row.
            const SparseIntRow& prow = pivot->second;
            mpz_class p_lead = prow.begin()->second;
            mpz_class r_lead = row.begin()->second;
            SparseIntRow next;
            auto it_r = row.begin();
            auto it_p = prow.begin();
            while (it_r != row.end() || it_p != prow.end()) {
                if (it_p == prow.end() ||
                    (it_r != row.end() && it_r->first < it_p->first)) {
                    next[it_r->first] = it_r->second * p_lead;
                    ++it_r;
                } else if (it_r == row.end() || it_p->first < it_r->first) {
                    next[it_p->first] = -(it_p->second * r_lead);
                    ++it_p;
                } else {
                    mpz_class entry =
                        it_r->second * p_lead - it_p->second * r_lead;
                    if (entry != 0)
                        next[it_r->first] = std::move(entry);
                    ++it_r;
                    ++it_p;
                }
            }
            strip_content(next);
            row = std::move(next);
        }
    }
    return echelon.size();
}

IdealSpan ideal_span(const std::vector<TreePolynomial>& relations,
                     const GradedContext& ctx, int n) {
    if (n < 1 || (n - 1) % (ctx.m - 1) != 0)
        throw std::invalid_argument("arity invalid for this branching arity");
    auto ladder = span_ladder(relations, ctx, n);
    IdealSpan span;
    span.ctx = ctx;
    span.arity = n;
    span.basis = enumerate_trees(ctx.m, n);
    if (auto it = ladder.find(n); it != ladder.end())
        span.vectors = std::move(it->second);
    span.rank = exact_rank(span.vectors, span.basis);
    return span;
}

std::uint64_t quotient_dim(const std::vector<TreePolynomial>& relations,
                           const GradedContext& ctx, int n) {
    IdealSpan span = ideal_span(relations, ctx, n);
    return count_trees(ctx.m, n) - span.rank;
}

CrossValidation cross_validate(const GroebnerBasis& G,
                               const std::vector<TreePolynomial>& relations,
                               int n_max, int jobs) {
    if (!G.complete_below_bound || G.checked_bound < n_max)
        throw IncompleteBasisError(
            "basis not certified complete up to the requested arity");
    auto ladder = span_ladder(relations, G.ctx, n_max);
    std::vector<int> arities;
    for (int n = 1; n <= n_max; n += G.ctx.m - 1)
        arities.push_back(n);

    CrossValidation report;
    report.rows.resize(arities.size());
    auto run_one = [&](std::size_t idx) {
        int n = arities[idx];
        ArityAgreement row;
        row.arity = n;
        static const std::vector<TreePolynomial> kNoVectors;
        auto it = ladder.find(n);
        const std::vector<TreePolynomial>& vecs =
            it == ladder.end() ? kNoVectors : it->second;
        row.oracle_dim = count_trees(G.ctx.m, n) -
                         exact_rank(vecs, enumerate_trees(G.ctx.m, n));
        row.basis_dim = normal_monomials(G, n).size();
        row.vectors_checked = vecs.size();
        row.vectors_reduce_to_zero = true;
        for (const auto& v : vecs) {
            if (!normal_form(v, G.gens).is_zero()) {
                row.vectors_reduce_to_zero = false;
                break;
            }
        }
        row.agree = row.oracle_dim == row.basis_dim &&
                    row.vectors_reduce_to_zero;
        report.rows[idx] = row;
    };

    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(
                                                      arities.size())));
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < arities.size(); ++idx)
            run_one(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t idx = next.fetch_add(1);
                    if (idx >= arities.size())
                        return;
                    try {
                        run_one(idx);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    report.ok = true;
    for (const auto& row : report.rows)
        report.ok = report.ok && row.agree;
    return report;
}

}  // namespace treegb
